#include "heckelab/linalg/smith.hpp"

#include "heckelab/util/error.hpp"

namespace heckelab {

namespace {

// Locate the entry of minimal nonzero absolute value in the trailing
// submatrix starting at (t, t). Returns false if that submatrix is zero.
bool find_min_pivot(const DenseMatrix<Integer>& a, Eigen::Index t, Eigen::Index& pi,
                    Eigen::Index& pj) {
  bool found = false;
  Integer best(0);
  for (Eigen::Index i = t; i < a.rows(); ++i) {
    for (Eigen::Index j = t; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      Integer v = abs(a(i, j));
      if (!found || v < best) {
        best = v;
        pi = i;
        pj = j;
        found = true;
      }
    }
  }
  return found;
}

}  // namespace

SmithResult smith_normal_form(const DenseMatrix<Integer>& m) {
  DenseMatrix<Integer> a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  DenseMatrix<Integer> v(cols, cols);
  v.setConstant(Integer(0));
  for (Eigen::Index j = 0; j < cols; ++j) v(j, j) = Integer(1);

  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    Eigen::Index pi = t, pj = t;
    if (!find_min_pivot(a, t, pi, pj)) break;
    if (pi != t) a.row(pi).swap(a.row(t));
    if (pj != t) {
      a.col(pj).swap(a.col(t));
      v.col(pj).swap(v.col(t));
    }

    bool clean = true;
    // clear column t below the pivot
    for (Eigen::Index i = t + 1; i < rows; ++i) {
      if (is_zero(a(i, t))) continue;
      Integer q = fdiv_q(a(i, t), a(t, t));
      if (!is_zero(q))
        for (Eigen::Index j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
      if (!is_zero(a(i, t))) clean = false;  // remainder survives, re-pivot
    }
    if (!clean) continue;
    // clear row t to the right of the pivot
    for (Eigen::Index j = t + 1; j < cols; ++j) {
      if (is_zero(a(t, j))) continue;
      Integer q = fdiv_q(a(t, j), a(t, t));
      if (!is_zero(q)) {
        for (Eigen::Index i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        for (Eigen::Index i = 0; i < cols; ++i) v(i, j) -= q * v(i, t);
      }
      if (!is_zero(a(t, j))) clean = false;
    }
    if (!clean) continue;
    // pivot must divide the whole trailing submatrix
    bool divides_all = true;
    for (Eigen::Index i = t + 1; i < rows && divides_all; ++i)
      for (Eigen::Index j = t + 1; j < cols; ++j)
        if (!a(t, t).divides(a(i, j))) {
          a.row(t) += a.row(i);
          divides_all = false;
          break;
        }
    if (!divides_all) continue;
    ++t;
  }

  SmithResult out;
  for (Eigen::Index k = 0; k < t; ++k) {
    Integer d = abs(a(k, k));
    if (!is_zero(d)) out.divisors.push_back(d);
  }
  for (std::size_t k = 1; k < out.divisors.size(); ++k)
    require(out.divisors[k - 1].divides(out.divisors[k]), errc::internal,
            "Smith divisors are not a divisibility chain");

  const Eigen::Index rank = t;
  DenseMatrix<Integer> kernel_rows(cols - rank, cols);
  for (Eigen::Index k = rank; k < cols; ++k) kernel_rows.row(k - rank) = v.col(k).transpose();
  out.kernel.ambient = cols;
  out.kernel.basis = hermite_normal_form(kernel_rows);
  out.kernel.system_divisors = out.divisors;
  return out;
}

DenseMatrix<Integer> hermite_normal_form(const DenseMatrix<Integer>& rows) {
  DenseMatrix<Integer> b = rows;
  const Eigen::Index nr = b.rows(), nc = b.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < nc && r < nr; ++c) {
    // gcd-reduce column c among rows >= r
    for (;;) {
      Eigen::Index piv = -1;
      Integer best(0);
      for (Eigen::Index i = r; i < nr; ++i) {
        if (is_zero(b(i, c))) continue;
        Integer v = abs(b(i, c));
        if (piv < 0 || v < best) {
          best = v;
          piv = i;
        }
      }
      if (piv < 0) break;
      if (piv != r) b.row(piv).swap(b.row(r));
      bool done = true;
      for (Eigen::Index i = r + 1; i < nr; ++i) {
        if (is_zero(b(i, c))) continue;
        Integer q = fdiv_q(b(i, c), b(r, c));
        if (!is_zero(q)) b.row(i) -= q * b.row(r);
        if (!is_zero(b(i, c))) done = false;
      }
      if (done) break;
    }
    if (r >= nr || is_zero(b(r, c))) continue;
    if (b(r, c) < Integer(0)) b.row(r) = -b.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      Integer q = fdiv_q(b(i, c), b(r, c));
      if (!is_zero(q)) b.row(i) -= q * b.row(r);
    }
    ++r;
  }
  return DenseMatrix<Integer>(b.topRows(r));
}

Eigen::Index bareiss_rank(const DenseMatrix<Integer>& m) {
  DenseMatrix<Integer> a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Integer prev(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!is_zero(a(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        a(i, j) = exact_div(a(r, c) * a(i, j) - a(i, c) * a(r, j), prev);
      a(i, c) = Integer(0);
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

bool is_saturated(const IntegerLattice& lattice) {
  if (lattice.basis.rows() == 0) return true;
  SmithResult s = smith_normal_form(lattice.basis);
  for (const Integer& d : s.divisors)
    if (!is_one(d)) return false;
  return true;
}

bool lattice_contains(const IntegerLattice& lattice, const DenseVector<Integer>& v) {
  require(v.rows() == lattice.ambient, errc::ambient_mismatch, "lattice ambient mismatch");
  DenseVector<Integer> w = v;
  // reduce against HNF rows, whose pivots are the leading nonzero entries
  for (Eigen::Index r = 0; r < lattice.basis.rows(); ++r) {
    Eigen::Index lead = -1;
    for (Eigen::Index j = 0; j < lattice.ambient; ++j)
      if (!is_zero(lattice.basis(r, j))) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    if (is_zero(w(lead))) continue;
    if (!lattice.basis(r, lead).divides(w(lead))) return false;
    Integer q = exact_div(w(lead), lattice.basis(r, lead));
    for (Eigen::Index j = 0; j < lattice.ambient; ++j) w(j) -= q * lattice.basis(r, j);
  }
  for (Eigen::Index j = 0; j < lattice.ambient; ++j)
    if (!is_zero(w(j))) return false;
  return true;
}

DenseMatrix<Fp> reduce_mod_p(const DenseMatrix<Integer>& m, std::uint64_t p) {
  DenseMatrix<Fp> out(m.rows(), m.cols());
  Integer pz(static_cast<long>(p));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Fp(fdiv_r(m(i, j), pz).to_long(), p);
  return out;
}

DenseMatrix<Rational> to_rational(const DenseMatrix<Integer>& m) {
  DenseMatrix<Rational> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

DenseMatrix<Integer> to_integer(const DenseMatrix<Rational>& m) {
  DenseMatrix<Integer> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      require(m(i, j).is_integral(), errc::non_integral_parameter,
              "matrix entry is not an integer");
      out(i, j) = m(i, j).num();
    }
  return out;
}

}  // namespace heckelab
