#include <doctest.h>

#include "heckelab/hecke/element.hpp"
#include "heckelab/scalar/rational.hpp"
#include "heckelab/scalar/rational_function.hpp"
#include "heckelab/scalar/traits.hpp"
#include "heckelab/util/rng.hpp"

using namespace heckelab;

using Qt = RationalFunc<Rational>;
using HQt = HeckeElement<Qt>;
using HQ = HeckeElement<Rational>;

namespace {

Qt qt() { return Qt::t(); }

HQt T(const Perm& w) { return HQt::basis(w.size(), qt(), w); }

HQt random_element(Rng& rng, int n, int terms) {
  HQt out(n, qt());
  auto perms = all_perms(n);
  for (int k = 0; k < terms; ++k) {
    const Perm& w = perms[rng.below(perms.size())];
    out.add_term(w, Qt(Rational(rng.small_int(3))));
  }
  return out;
}

}  // namespace

TEST_CASE("perm basics: composition convention, length, reduced words") {
  // (u*w)(i) = u(w(i))
  Perm u = Perm::from_one_line_1based({2, 3, 1});
  Perm w = Perm::from_one_line_1based({1, 3, 2});
  Perm uw = u * w;
  CHECK(uw.one_line_1based() == std::vector<int>{2, 1, 3});

  for (const Perm& g : all_perms(4)) {
    auto word = g.reduced_word();
    CHECK(static_cast<int>(word.size()) == g.length());
    Perm prod = Perm::identity(4);
    for (int i : word) prod = prod * Perm::adjacent(4, i);
    CHECK(prod == g);
    // braid invariance: any reduced word gives the same T_w; multiply the
    // generators in the Hecke algebra and check a single T_g term survives
    HQt t_from_word = HQt::unit(4, qt());
    for (std::size_t k = word.size(); k-- > 0;) t_from_word = t_from_word.mul_gen_left(word[k]);
    CHECK(t_from_word == T(g));
  }
}

TEST_CASE("coset representatives and factorisation") {
  Partition l22({2, 2});
  auto reps = min_coset_reps(l22);
  CHECK(reps.size() == 6);
  CHECK(min_coset_reps(Partition({4})).size() == 1);

  // brute-force minimality scan over the whole coset, n <= 5
  for (int n = 3; n <= 5; ++n) {
    const auto pars_n = partitions_of(n);
    for (const auto& lam : pars_n.members()) {
      auto sg = young_subgroup(Composition(lam));
      for (const Perm& d : min_coset_reps(lam))
        for (const Perm& v : sg) CHECK(d.length() <= (d * v).length());
    }
  }

  for (const Perm& w : all_perms(4)) {
    auto [d, v] = coset_factorise(w, l22);
    CHECK(d * v == w);
    CHECK(d.length() + v.length() == w.length());
    CHECK(is_min_coset_rep(d, l22));
  }
  // trivial cases
  for (const Perm& d : min_coset_reps(l22)) {
    auto f = coset_factorise(d, l22);
    CHECK(f.d == d);
    CHECK(f.v.is_identity());
  }
  for (const Perm& v : young_subgroup(Composition(l22))) {
    auto f = coset_factorise(v, l22);
    CHECK(f.d.is_identity());
    CHECK(f.v == v);
  }
}

TEST_CASE("hecke multiplication: identity, quadratic relation, q=1 degeneration") {
  Perm s1 = Perm::adjacent(3, 1);
  HQt t1 = T(s1);
  CHECK(HQt::unit(3, qt()) * t1 == t1);
  CHECK(t1 * HQt::unit(3, qt()) == t1);

  HQt sq = t1 * t1;
  HQt expect = (qt() - Qt(1)) * t1 + qt() * HQt::unit(3, qt());
  CHECK(sq == expect);

  // q = 1: group algebra, products follow permutation composition
  for (const Perm& u : all_perms(3))
    for (const Perm& w : all_perms(3)) {
      HQ a = HQ::basis(3, Rational(1), u) * HQ::basis(3, Rational(1), w);
      CHECK(a == HQ::basis(3, Rational(1), u * w));
    }
}

TEST_CASE("associativity: exhaustive rank 3, randomized rank 4") {
  auto perms3 = all_perms(3);
  for (const Perm& u : perms3)
    for (const Perm& v : perms3)
      for (const Perm& w : perms3) CHECK((T(u) * T(v)) * T(w) == T(u) * (T(v) * T(w)));

  Rng rng(2024);
  for (int iter = 0; iter < 12; ++iter) {
    HQt a = random_element(rng, 4, 3), b = random_element(rng, 4, 3), c = random_element(rng, 4, 3);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("star is an involutory anti-automorphism") {
  CHECK(star_involution(HQt::unit(3, qt())) == HQt::unit(3, qt()));

  Perm s1 = Perm::adjacent(3, 1), s2 = Perm::adjacent(3, 2);
  HQt ab = T(s1) * T(s2);
  CHECK(star_involution(ab) == T(s2) * T(s1));

  Rng rng(5);
  for (int iter = 0; iter < 10; ++iter) {
    HQt a = random_element(rng, 4, 3), b = random_element(rng, 4, 3);
    CHECK(star_involution(a * b) == star_involution(b) * star_involution(a));
    CHECK(star_involution(star_involution(a)) == a);
  }

  // * fixes x(alpha): Young subgroups are inverse-closed
  const auto pars4 = partitions_of(4);
  for (const auto& lam : pars4.members()) {
    HQt x = x_element<Qt>(Composition(lam), qt());
    CHECK(star_involution(x) == x);
  }
}

TEST_CASE("sharp is an involutory automorphism; dagger is the composite") {
  CHECK(sharp_automorphism(HQt::unit(4, qt())) == HQt::unit(4, qt()));
  for (const Perm& w : all_perms(4)) {
    HQt tw = T(w);
    CHECK(sharp_automorphism(sharp_automorphism(tw)) == tw);
    CHECK(dagger_involution(tw) == star_involution(sharp_automorphism(tw)));
  }
  // multiplicative on random pairs
  Rng rng(17);
  for (int iter = 0; iter < 10; ++iter) {
    HQt a = random_element(rng, 4, 3), b = random_element(rng, 4, 3);
    CHECK(sharp_automorphism(a * b) == sharp_automorphism(a) * sharp_automorphism(b));
  }
  // dagger on a generator: -T_i + (q-1)
  Perm s1 = Perm::adjacent(4, 1);
  HQt expect = (qt() - Qt(1)) * HQt::unit(4, qt()) - T(s1);
  CHECK(dagger_involution(T(s1)) == expect);

  // q = 1 degeneration: sharp(T_w) = (-1)^{l(w)} T_w
  for (const Perm& w : all_perms(4)) {
    HQ tw = HQ::basis(4, Rational(1), w);
    HQ sh = sharp_automorphism(tw);
    Rational sign = (w.length() % 2 == 0) ? Rational(1) : Rational(-1);
    CHECK(sh == sign * tw);
  }
}

TEST_CASE("x elements") {
  CHECK(x_element<Qt>(Composition({1, 1, 1}), qt()) == HQt::unit(3, qt()));

  HQt x22 = x_element<Qt>(Composition({2, 2}), qt());
  CHECK(x22.support_size() == 4);
  CHECK(x22.coeff(Perm::identity(4)) == Qt(1));
  CHECK(x22.coeff(Perm::transposition(4, 0, 1)) == Qt(1));
  CHECK(x22.coeff(Perm::transposition(4, 2, 3)) == Qt(1));
  CHECK(x22.coeff(Perm::transposition(4, 0, 1) * Perm::transposition(4, 2, 3)) == Qt(1));

  CHECK(x_element<Qt>(Composition({4}), qt()).support_size() == 24);
}

TEST_CASE("y elements") {
  // alpha = (1^n): single term (-q)^N T_e
  HQt y1 = y_element<Qt>(Composition({1, 1, 1}), qt());
  CHECK(y1.support_size() == 1);
  CHECK(y1.coeff(Perm::identity(3)) == scalar_pow(-qt(), 3));

  // alpha = (2), n = 2, N = 1: -q T_e + T_{s_1}
  HQt y2 = y_element<Qt>(Composition({2}), qt());
  CHECK(y2.coeff(Perm::identity(2)) == -qt());
  CHECK(y2.coeff(Perm::adjacent(2, 1)) == Qt(1));
}

TEST_CASE("eigenvalue laws for x and y (n <= 5)") {
  for (int n = 2; n <= 5; ++n) {
    const auto pars_n = partitions_of(n);
    for (const auto& lam : pars_n.members()) {
      Composition alpha(lam);
      HQt x = x_element<Qt>(alpha, qt());
      HQt y = y_element<Qt>(alpha, qt());
      for (int i : j_set(alpha)) {
        CHECK(x.mul_gen_left(i) == qt() * x);
        CHECK(y.mul_gen_left(i) == Qt(-1) * y);
      }
    }
  }
}

TEST_CASE("pairing") {
  CHECK(pairing(HQt::unit(2, qt()), HQt::unit(2, qt())) == Qt(1));
  HQt t1 = T(Perm::adjacent(2, 1));
  CHECK(pairing(t1, t1) == qt());

  Rng rng(31);
  for (int iter = 0; iter < 10; ++iter) {
    HQt a = random_element(rng, 3, 2), b = random_element(rng, 3, 2);
    CHECK(pairing(a, b) == pairing(b, a));
  }
}

TEST_CASE("rank and parameter mismatches are rejected") {
  CHECK_THROWS_AS((void)(HQt::unit(3, qt()) * HQt::unit(4, qt())), Error);
  CHECK_THROWS_AS((void)(HQ::unit(3, Rational(1)) + HQ::unit(3, Rational(-1))), Error);
}
