#include <doctest.h>

#include <set>

#include "heckelab/module/gset.hpp"
#include "heckelab/module/module_rep.hpp"
#include "heckelab/scalar/rational.hpp"
#include "heckelab/scalar/rational_function.hpp"

using namespace heckelab;

using Qt = RationalFunc<Rational>;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
Qt qt() { return Qt::t(); }
}  // namespace

TEST_CASE("rank-one young module: every generator acts as q") {
  for (int n = 2; n <= 4; ++n) {
    ModuleRep<Qt> m = build_young_module<Qt>(P({n}), qt());
    CHECK(m.dim() == 1);
    for (int i = 1; i < n; ++i) CHECK(m.generator_action(i)(0, 0) == qt());
  }
  ModuleRep<Qt> ms = build_signed_module<Qt>(P({2}), qt());
  CHECK(ms.dim() == 1);
  CHECK(ms.generator_action(1)(0, 0) == Qt(-1));
}

TEST_CASE("module dimensions are multinomial coefficients (n <= 5)") {
  for (int n = 2; n <= 5; ++n) {
    const auto pars = partitions_of(n);
    for (const auto& lam : pars.members()) {
      long expect = factorial(n);
      for (int part : lam.parts()) expect /= factorial(part);
      CHECK(build_young_module<Rational>(lam, Rational(1)).dim() == expect);
      CHECK(build_signed_module<Rational>(lam, Rational(1)).dim() == expect);
    }
  }
  CHECK(build_young_module<Qt>(P({2, 2}), qt()).dim() == 6);
  CHECK(build_signed_module<Rational>(P({1, 1, 1, 1}), Rational(1)).dim() == 24);
}

TEST_CASE("defining relations hold on built modules") {
  for (const auto& lam : {P({2, 1}), P({3, 1}), P({2, 2}), P({2, 1, 1})}) {
    build_young_module<Qt>(lam, qt()).validate_relations();
    build_signed_module<Qt>(lam, qt()).validate_relations();
  }
  build_young_module<Rational>(P({3, 1, 1}), Rational(1)).validate_relations();
  build_young_module<Rational>(P({2, 2}), Rational(-1)).validate_relations();
}

TEST_CASE("q = 1 action matrices are the coset permutation action") {
  for (int n = 3; n <= 5; ++n) {
    const auto pars = partitions_of(n);
    for (const auto& lam : pars.members()) {
      ModuleRep<Rational> m = build_young_module<Rational>(lam, Rational(1));
      auto reps = min_coset_reps(lam);
      auto sg = young_subgroup(Composition(lam));
      // independent oracle: cosets as explicit element sets
      auto coset_of = [&](const Perm& w) {
        std::set<Perm> c;
        for (const Perm& v : sg) c.insert(w * v);
        return c;
      };
      std::vector<std::set<Perm>> cosets;
      for (const Perm& d : reps) cosets.push_back(coset_of(d));
      for (int i = 1; i < n; ++i) {
        const auto& g = m.generator_action(i);
        for (std::size_t col = 0; col < reps.size(); ++col) {
          std::set<Perm> image = coset_of(Perm::adjacent(n, i) * reps[col]);
          std::size_t row = 0;
          while (row < cosets.size() && cosets[row] != image) ++row;
          REQUIRE(row < cosets.size());
          for (std::size_t r = 0; r < reps.size(); ++r)
            CHECK(g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) ==
                  Rational(r == row ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("signed module is the sharp twist of the plain one (trace check, n <= 4)") {
  for (int n = 2; n <= 4; ++n) {
    const auto pars = partitions_of(n);
    for (const auto& lam : pars.members()) {
      ModuleRep<Qt> m = build_young_module<Qt>(lam, qt());
      ModuleRep<Qt> ms = build_signed_module<Qt>(lam, qt());
      for (const Perm& w : all_perms(n)) {
        HeckeElement<Qt> tw = HeckeElement<Qt>::basis(n, qt(), w);
        Qt tr_signed = ms.action_of(tw).trace();
        Qt tr_twisted = m.action_of(sharp_automorphism(tw)).trace();
        CHECK(tr_signed == tr_twisted);
      }
    }
  }
}

TEST_CASE("direct sums record layout and dimensions") {
  ModuleRep<Rational> a =
      direct_sum<Rational>({{P({3, 1}), 1, false}, {P({4}), 1, false}}, Rational(1));
  CHECK(a.dim() == 5);
  REQUIRE(a.summands().size() == 2);
  CHECK(a.summands()[0].lambda == P({3, 1}));
  CHECK(a.summands()[1].offset == 4);

  ModuleRep<Rational> b = direct_sum<Rational>({{P({2, 2}), 2, false}}, Rational(1));
  CHECK(b.dim() == 12);
  CHECK(b.summands().size() == 2);
  b.validate_relations();

  ModuleRep<Rational> single = direct_sum<Rational>({{P({2, 2}), 1, false}}, Rational(1));
  ModuleRep<Rational> direct = build_young_module<Rational>(P({2, 2}), Rational(1));
  for (int i = 1; i < 4; ++i) CHECK(single.generator_action(i) == direct.generator_action(i));
}

TEST_CASE("zeta and index") {
  ModuleRep<Rational> a =
      direct_sum<Rational>({{P({3, 1}), 1, false}, {P({4}), 1, false}}, Rational(1));
  ZetaIndex za = zeta_and_index(a);
  CHECK(za.zeta.size() == 2);
  CHECK(za.zeta.contains(P({3, 1})));
  CHECK(za.idx == 3);

  ZetaIndex zn = zeta_and_index(build_young_module<Rational>(P({5}), Rational(1)));
  CHECK(zn.idx == 5);

  ZetaIndex zsq = zeta_and_index(build_young_module<Rational>(P({2, 2}), Rational(1)));
  CHECK_FALSE(zsq.idx.has_value());

  GSetModule pts = tensor_space_module(3, 1, 3);
  CHECK_THROWS_AS((void)zeta_and_index(pts.to_module_rep<Rational>()), Error);
}

TEST_CASE("coset space modules") {
  // T = Sym(m): a single point
  std::vector<Perm> whole;
  for (int i = 1; i < 4; ++i) whole.push_back(Perm::adjacent(4, i));
  CHECK(coset_space_module(4, whole).size() == 1);
  // T = {e}: the regular set
  CHECK(coset_space_module(4, {}).size() == 24);
  // index of <(13)(24)> in Sym(4)
  Perm t = Perm::transposition(4, 0, 2) * Perm::transposition(4, 1, 3);
  GSetModule x = coset_space_module(4, {t});
  CHECK(x.size() == 12);
  x.to_module_rep<Rational>().validate_relations();
}

TEST_CASE("tensor space modules and orbit profiles") {
  CHECK(tensor_space_module(4, 1, 4).size() == 4);
  GSetModule i42 = tensor_space_module(4, 2, 4);
  CHECK(i42.size() == 16);
  CHECK(i42.orbits().size() == 2);  // diagonal and off-diagonal

  TensorProfile p1 = tensor_orbit_profile(4, 2, 4);
  CHECK(p1.zeta.size() == 2);
  CHECK(p1.zeta.contains(P({3, 1})));
  CHECK(p1.zeta.contains(P({2, 1, 1})));
  CHECK(p1.idx == 2);

  TensorProfile p2 = tensor_orbit_profile(4, 1, 3);
  CHECK(p2.zeta.size() == 2);
  CHECK(p2.zeta.contains(P({3})));
  CHECK(p2.zeta.contains(P({2, 1})));
  CHECK(p2.idx == 2);

  // m = n, r >= n-1
  CHECK(tensor_orbit_profile(4, 3, 4).idx == 1);
  CHECK(tensor_orbit_profile(3, 2, 3).idx == 1);
}

TEST_CASE("orbit profile matches the closed form (n <= 5, r <= 3, m <= n)") {
  auto hook = [](int m, int b) {
    std::vector<int> parts;
    if (m - b >= 1) {
      parts.push_back(m - b);
      for (int k = 0; k < b; ++k) parts.push_back(1);
    } else {
      for (int k = 0; k < m; ++k) parts.push_back(1);
    }
    return Partition(parts);
  };
  for (int n = 1; n <= 5; ++n)
    for (int r = 1; r <= 3; ++r)
      for (int m = 1; m <= n; ++m) {
        TensorProfile got = tensor_orbit_profile(n, r, m);
        PartitionSet expect(m);
        int b_lo = (m == n) ? 1 : 0;
        for (int b = b_lo; b <= std::min(r, m); ++b) expect.insert(hook(m, b));
        CHECK(got.zeta == expect);
        CHECK(got.idx == std::max(m - std::min(r, m), 1));
      }
}

TEST_CASE("young layout reorders a tensor module into Young summands") {
  GSetModule x = tensor_space_module(4, 2, 4);
  auto rep = x.to_young_module_rep<Rational>();
  REQUIRE(rep.has_value());
  rep->validate_relations();
  CHECK(rep->dim() == 16);
  ZetaIndex z = zeta_and_index(*rep);
  CHECK(z.zeta.contains(P({3, 1})));
  CHECK(z.zeta.contains(P({2, 1, 1})));
  CHECK(z.idx == 2);

  // a non-Young stabiliser has no such layout
  Perm t = Perm::transposition(4, 0, 2) * Perm::transposition(4, 1, 3);
  CHECK_FALSE(coset_space_module(4, {t}).to_young_module_rep<Rational>().has_value());
}
