#include <doctest.h>

#include "heckelab/combin/partition.hpp"
#include "heckelab/combin/tableau.hpp"

using namespace heckelab;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("partitions_of enumerates in canonical reverse-lex order") {
  PartitionSet p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0.members()[0].rows() == 0);

  PartitionSet p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.members()[0] == P({4}));
  CHECK(p4.members()[1] == P({3, 1}));
  CHECK(p4.members()[2] == P({2, 2}));
  CHECK(p4.members()[3] == P({2, 1, 1}));
  CHECK(p4.members()[4] == P({1, 1, 1, 1}));

  CHECK(partitions_of(6).size() == 11);
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(P({2, 2}), P({3, 1})));
  CHECK_FALSE(dominance_leq(P({3, 1}), P({2, 2})));
  CHECK(dominance_leq(P({2, 1, 1}), P({2, 1, 1})));
  CHECK_THROWS_AS((void)dominance_leq(P({2}), P({3})), Error);
}

TEST_CASE("transpose is an order anti-automorphism (exhaustive n <= 6)") {
  for (int n = 1; n <= 6; ++n) {
    auto pars = partitions_of(n).members();
    for (const auto& a : pars) {
      CHECK(a.transpose().transpose() == a);
      for (const auto& b : pars)
        CHECK(dominance_leq(a, b) == dominance_leq(b.transpose(), a.transpose()));
    }
  }
}

TEST_CASE("coarsening closure") {
  PartitionSet s(4);
  s.insert(P({2, 1, 1}));
  PartitionSet hat = coarsening_closure(s);
  CHECK(hat.size() == 4);
  CHECK(hat.contains(P({2, 1, 1})));
  CHECK(hat.contains(P({2, 2})));
  CHECK(hat.contains(P({3, 1})));
  CHECK(hat.contains(P({4})));

  PartitionSet top(5);
  top.insert(P({5}));
  CHECK(coarsening_closure(top) == top);

  PartitionSet sq(4);
  sq.insert(P({2, 2}));
  PartitionSet hsq = coarsening_closure(sq);
  CHECK(hsq.size() == 2);
  CHECK(hsq.contains(P({4})));
  CHECK_FALSE(hsq.contains(P({3, 1})));
}

TEST_CASE("coarsening implies dominance, closures idempotent and monotone (n <= 6)") {
  for (int n = 2; n <= 6; ++n) {
    const auto pars_n = partitions_of(n);
    for (const auto& lam : pars_n.members()) {
      PartitionSet s(n);
      s.insert(lam);
      PartitionSet hat = coarsening_closure(s);
      for (const auto& mu : hat.members()) CHECK(dominance_leq(lam, mu));
      CHECK(coarsening_closure(hat) == hat);
      PartitionSet up = dominance_upward_closure(s);
      CHECK(dominance_upward_closure(up) == up);
      for (const auto& mu : hat.members()) CHECK(up.contains(mu));
    }
  }
}

TEST_CASE("hook coarsenings are exactly the partitions with large first part (n <= 7)") {
  for (int n = 2; n <= 7; ++n) {
    for (int a = 1; a <= n; ++a) {
      std::vector<int> hook{a};
      for (int k = a; k < n; ++k) hook.push_back(1);
      PartitionSet s(n);
      s.insert(P(hook));
      PartitionSet hat = coarsening_closure(s);
      const auto pars_n = partitions_of(n);
      for (const auto& mu : pars_n.members())
        CHECK(hat.contains(mu) == (mu.part(0) >= a));
    }
  }
}

TEST_CASE("dominance upward closure and cosaturation") {
  PartitionSet sq(4);
  sq.insert(P({2, 2}));
  PartitionSet up = dominance_upward_closure(sq);
  CHECK(up.size() == 3);
  CHECK(up.contains(P({3, 1})));
  CHECK(up.contains(P({4})));
  CHECK(is_cosaturated(up));

  PartitionSet bad(4);
  bad.insert(P({2, 2}));
  bad.insert(P({4}));
  CHECK_FALSE(is_cosaturated(bad));

  PartitionSet bottom(5);
  bottom.insert(P({1, 1, 1, 1, 1}));
  CHECK(dominance_upward_closure(bottom) == partitions_of(5));
  CHECK(is_cosaturated(partitions_of(5)));

  PartitionSet top(5);
  top.insert(P({5}));
  CHECK(dominance_upward_closure(top) == top);
}

TEST_CASE("standard tableaux enumeration") {
  CHECK(standard_tableaux(P({5})).size() == 1);
  CHECK(standard_tableaux(P({2, 2})).size() == 2);
  CHECK(standard_tableaux(P({3, 1})).size() == 3);
  auto t = standard_tableaux(P({2, 2}));
  CHECK(t.front() == superstandard_tableau(P({2, 2})));
}

TEST_CASE("tableau dominance on shape (2,2)") {
  auto ts = standard_tableaux(P({2, 2}));
  REQUIRE(ts.size() == 2);
  const StandardTableau& top = ts[0];     // rows (1,2),(3,4)
  const StandardTableau& colf = ts[1];    // rows (1,3),(2,4)
  CHECK(tableau_dominance_leq(top, top));
  CHECK(tableau_dominance_leq(colf, top));
  CHECK_FALSE(tableau_dominance_leq(top, colf));
}

TEST_CASE("d_permutation carries the superstandard tableau to s") {
  for (const auto& lam : {P({3, 1}), P({2, 2}), P({2, 1, 1})}) {
    StandardTableau t0 = superstandard_tableau(lam);
    CHECK(d_permutation(t0).is_identity());
    for (const auto& s : standard_tableaux(lam)) {
      Perm d = d_permutation(s);
      // applying d entrywise to t^lambda reproduces s
      for (int r = 0; r < lam.rows(); ++r)
        for (int c = 0; c < lam.part(r); ++c)
          CHECK(d.apply(t0.entry(r, c) - 1) == s.entry(r, c) - 1);
    }
  }
  // shape (2,2), rows (1,3),(2,4): d swaps 2 and 3
  auto ts = standard_tableaux(P({2, 2}));
  Perm d = d_permutation(ts[1]);
  CHECK(d == Perm::transposition(4, 1, 2));
}

TEST_CASE("spec_dimension and the square-sum identity") {
  CHECK(spec_dimension(P({6})) == 1);
  CHECK(spec_dimension(P({3, 1})) == 3);
  for (int n = 1; n <= 6; ++n) {
    long total = 0;
    const auto pars_n = partitions_of(n);
    for (const auto& lam : pars_n.members()) {
      long d = spec_dimension(lam);
      total += d * d;
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("capital_N values") {
  CHECK(capital_N(4, 4) == 1);
  CHECK(capital_N(4, 3) == 10);
  CHECK(capital_N(4, 2) == 23);
  CHECK(capital_N(5, 3) == 78);
  CHECK_THROWS_AS((void)capital_N(4, 0), Error);
  CHECK_THROWS_AS((void)capital_N(4, 5), Error);
}

TEST_CASE("restriction shapes of a standard tableau") {
  auto ts = standard_tableaux(P({3, 1}));
  for (const auto& s : ts) {
    CHECK(s.restriction_shape(1) == P({1}));
    CHECK(s.restriction_shape(4) == P({3, 1}));
  }
}

TEST_CASE("composition bookkeeping") {
  Composition a({2, 0, 1, 1});
  CHECK(a.degree() == 4);
  CHECK(a.to_partition() == P({2, 1, 1}));
}
