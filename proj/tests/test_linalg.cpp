#include <doctest.h>

#include "heckelab/linalg/rref.hpp"
#include "heckelab/linalg/smith.hpp"
#include "heckelab/linalg/subspace.hpp"
#include "heckelab/util/rng.hpp"

using namespace heckelab;

namespace {

DenseMatrix<Rational> rand_rat_matrix(Rng& rng, Eigen::Index r, Eigen::Index c, long span = 4) {
  DenseMatrix<Rational> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Rational(rng.small_int(span));
  return m;
}

DenseMatrix<Integer> rand_int_matrix(Rng& rng, Eigen::Index r, Eigen::Index c, long span = 5) {
  DenseMatrix<Integer> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Integer(rng.small_int(span));
  return m;
}

}  // namespace

TEST_CASE("rref and nullspace on pinned cases") {
  DenseMatrix<Rational> id(3, 3);
  id.setZero();
  for (int i = 0; i < 3; ++i) id(i, i) = Rational(1);
  CHECK(rank_of(id) == 3);
  CHECK(nullspace(id).rows() == 0);

  DenseMatrix<Rational> zero(2, 5);
  zero.setConstant(Rational(0));
  CHECK(rank_of(zero) == 0);
  CHECK(nullspace(zero).rows() == 5);

  DenseMatrix<Rational> m(2, 2);
  m << Rational(1), Rational(1), Rational(2), Rational(2);
  CHECK(rank_of(m) == 1);
  DenseMatrix<Rational> ns = nullspace(m);
  REQUIRE(ns.rows() == 1);
  // hand elimination: x + y = 0, canonical leading-1 basis vector (1, -1)
  CHECK(ns(0, 0) == Rational(1));
  CHECK(ns(0, 1) == Rational(-1));
}

TEST_CASE("rref is idempotent and canonical on equal row spaces") {
  Rng rng(99);
  for (int iter = 0; iter < 20; ++iter) {
    DenseMatrix<Rational> a = rand_rat_matrix(rng, 3, 5);
    // row-equivalent copy: invertible row operations
    DenseMatrix<Rational> b = a;
    b.row(0) += Rational(3) * b.row(1);
    b.row(2) -= Rational(2) * b.row(0);
    b.row(1) *= Rational(5, 3);
    b.row(1).swap(b.row(2));
    DenseMatrix<Rational> ra = rref(a), rb = rref(b);
    CHECK(ra == rb);
    CHECK(rref(ra) == ra);
  }
}

TEST_CASE("solve_exact solves consistent systems") {
  Rng rng(3);
  DenseMatrix<Rational> a = rand_rat_matrix(rng, 4, 3);
  DenseVector<Rational> x0(3);
  x0 << Rational(1, 2), Rational(-2), Rational(3);
  DenseVector<Rational> b = a * x0;
  DenseVector<Rational> x = solve_exact(a, b);
  CHECK(a * x == b);
}

TEST_CASE("subspace comparison") {
  DenseMatrix<Rational> e1(1, 2), e12(1, 2), both(2, 2);
  e1 << Rational(1), Rational(0);
  e12 << Rational(1), Rational(1);
  both << Rational(1), Rational(0), Rational(0), Rational(1);
  auto V = Subspace<Rational>::from_span(both);
  auto U = Subspace<Rational>::from_span(e1);
  auto W = Subspace<Rational>::from_span(e12);
  CHECK(subspace_compare(V, V) == SubspaceRelation::equal);
  CHECK(subspace_compare(Subspace<Rational>(2), V) == SubspaceRelation::u_in_v);
  CHECK(subspace_compare(U, W) == SubspaceRelation::incomparable);
  CHECK(subspace_compare(U, V) == SubspaceRelation::u_in_v);
  CHECK(subspace_compare(V, W) == SubspaceRelation::v_in_u);
  CHECK((U + W) == V);
}

TEST_CASE("smith normal form on pinned cases") {
  DenseMatrix<Integer> d(2, 2);
  d << Integer(2), Integer(0), Integer(0), Integer(6);
  SmithResult s = smith_normal_form(d);
  REQUIRE(s.divisors.size() == 2);
  CHECK(s.divisors[0] == Integer(2));
  CHECK(s.divisors[1] == Integer(6));
  CHECK(s.kernel.dim() == 0);

  DenseMatrix<Integer> zero(3, 3);
  zero.setConstant(Integer(0));
  SmithResult sz = smith_normal_form(zero);
  CHECK(sz.divisors.empty());
  CHECK(sz.kernel.dim() == 3);
  // kernel of the zero map is all of Z^3: HNF is the identity
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(sz.kernel.basis(i, j) == Integer(i == j ? 1 : 0));

  DenseMatrix<Integer> row(1, 2);
  row << Integer(2), Integer(4);
  SmithResult sr = smith_normal_form(row);
  REQUIRE(sr.divisors.size() == 1);
  CHECK(sr.divisors[0] == Integer(2));
  REQUIRE(sr.kernel.dim() == 1);
  CHECK(sr.kernel.basis(0, 0) == Integer(2));
  CHECK(sr.kernel.basis(0, 1) == Integer(-1));
}

TEST_CASE("rank drop mod p happens exactly at elementary divisor primes") {
  Rng rng(1234);
  for (int iter = 0; iter < 20; ++iter) {
    DenseMatrix<Integer> m = rand_int_matrix(rng, 6, 6);
    if (iter % 3 == 0) m.row(2) = Integer(2) * m.row(0) + Integer(6) * m.row(1);
    Eigen::Index rank_q = rank_of(to_rational(m));
    CHECK(bareiss_rank(m) == rank_q);
    SmithResult s = smith_normal_form(m);
    CHECK(static_cast<Eigen::Index>(s.divisors.size()) == rank_q);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
      Eigen::Index rank_p = rank_of(reduce_mod_p(m, p));
      bool p_divides_some = false;
      for (const Integer& dv : s.divisors)
        if (Integer(static_cast<long>(p)).divides(dv)) p_divides_some = true;
      CHECK((rank_p == rank_q) == !p_divides_some);
    }
  }
}

TEST_CASE("kernel lattices are saturated") {
  Rng rng(777);
  for (int iter = 0; iter < 12; ++iter) {
    DenseMatrix<Integer> m = rand_int_matrix(rng, 3, 6);
    SmithResult s = smith_normal_form(m);
    CHECK(is_saturated(s.kernel));
    // membership closes under division: if 2v is in L and v is integral, v is in L
    if (s.kernel.dim() >= 2) {
      DenseVector<Integer> v = (s.kernel.basis.row(0) + s.kernel.basis.row(1)).transpose();
      CHECK(lattice_contains(s.kernel, v));
      DenseVector<Integer> two_v = v;
      for (Eigen::Index j = 0; j < two_v.rows(); ++j) two_v(j) = Integer(2) * two_v(j);
      CHECK(lattice_contains(s.kernel, two_v));
      bool all_even = true;
      for (Eigen::Index j = 0; j < v.rows(); ++j)
        if (!Integer(2).divides(v(j))) all_even = false;
      if (all_even) {
        DenseVector<Integer> half = v;
        for (Eigen::Index j = 0; j < half.rows(); ++j) half(j) = exact_div(half(j), Integer(2));
        CHECK(lattice_contains(s.kernel, half));
      }
    }
  }
}

TEST_CASE("hermite normal form is canonical for the row space") {
  DenseMatrix<Integer> a(2, 3), b(2, 3);
  a << Integer(2), Integer(4), Integer(6), Integer(0), Integer(2), Integer(2);
  // same row lattice, different presentation
  b.row(0) = a.row(0) + Integer(3) * a.row(1);
  b.row(1) = -a.row(1);
  CHECK(hermite_normal_form(a) == hermite_normal_form(b));
}

TEST_CASE("to_integer rejects fractions") {
  DenseMatrix<Rational> m(1, 1);
  m(0, 0) = Rational(1, 2);
  CHECK_THROWS_AS((void)to_integer(m), Error);
}
