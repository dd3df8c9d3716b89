#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "proxal/operators.hpp"
#include "proxal/topology.hpp"

using namespace proxal;
using testing_helpers::family;
using testing_helpers::set;

TEST(CheckTopology, Examples) {
  const auto u = Universe::of_size(3);
  EXPECT_TRUE(check_topology(u, family(u, {"", "a", "ab", "abc"})).passed());
  EXPECT_EQ(check_topology(u, family(u, {"a", "abc"})).witness->clause, "(empty)");
  EXPECT_EQ(check_topology(u, family(u, {"", "a"})).witness->clause, "(universe)");
  const auto un = check_topology(u, family(u, {"", "a", "b", "abc"}));
  ASSERT_TRUE(un.failed());
  EXPECT_EQ(un.witness->clause, "(union)");
  EXPECT_EQ(un.witness->get("U"), set(u, "a"));
  EXPECT_EQ(un.witness->get("V"), set(u, "b"));
  const auto in = check_topology(u, family(u, {"", "ab", "bc", "abc"}));
  ASSERT_TRUE(in.failed());
  EXPECT_EQ(in.witness->clause, "(intersection)");
  EXPECT_THROW((void)Topology::validate(u, family(u, {"", "a"})), InputError);
}

TEST(Enumerate, CountsMatchBruteForceOracle) {
  const std::size_t expected[] = {0, 1, 4, 29, 355};
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto u = Universe::of_size(n);
    const auto oracle_tables = oracle::brute_families(
        n, [n](const oracle::Family& f) { return oracle::is_topology(n, f); });
    const auto tops = enumerate_topologies(u);
    ASSERT_EQ(tops.size(), expected[n]);
    ASSERT_EQ(tops.size(), oracle_tables.size());
    for (std::size_t i = 0; i < tops.size(); ++i) EXPECT_EQ(tops[i].opens().table(), oracle_tables[i]);
    EXPECT_EQ(enumerate_topologies_brute(u), tops);
  }
  const auto u4 = Universe::of_size(4);
  const auto generated = enumerate_topologies_generated(u4);
  EXPECT_EQ(generated.size(), expected[4]);
  EXPECT_EQ(enumerate_topologies(u4), generated);
  for (const auto& t : generated) {
    ASSERT_TRUE(oracle::is_topology(4, oracle::family_from_table(4, t.opens().table())));
  }
  EXPECT_THROW((void)enumerate_topologies(Universe::of_size(5)), SizeCapError);
}

TEST(Separation, T1AndNormalMatchOracle) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto u = Universe::of_size(n);
    for (const auto& t : enumerate_topologies(u)) {
      const auto opens = oracle::family_from_table(n, t.opens().table());
      bool t1 = true;
      for (std::size_t x = 0; x < n; ++x) {
        if (opens.count(oracle::comp(oracle::point(n, x))) == 0) t1 = false;
      }
      ASSERT_EQ(is_T1(t), t1);
      ASSERT_EQ(is_T1(t), t == Topology::discrete(u));
      ASSERT_EQ(is_normal(t), oracle::is_normal(n, opens));
    }
  }
}

TEST(MinimalNeighborhood, Examples) {
  const auto u = Universe::of_size(3);
  const auto t = Topology::validate(u, family(u, {"", "a", "ab", "abc"}));
  EXPECT_EQ(minimal_neighborhood(t, 0), set(u, "a"));
  EXPECT_EQ(minimal_neighborhood(t, 1), set(u, "ab"));
  EXPECT_EQ(minimal_neighborhood(t, 2), u.full());
}

TEST(Induced, TauHatAndTauStarOnExample) {
  const auto u = Universe::of_size(3);
  const auto r = from_intersection_complement(mk_principal(u, "a"));
  // cl* is the identity here, so both topologies are discrete.
  EXPECT_EQ(tau_hat(r), Topology::discrete(u));
  EXPECT_EQ(tau_star(r), Topology::discrete(u));
  EXPECT_TRUE(is_proximity_closed(r, set(u, "b")));
}

TEST(Induced, TauHatEqualsTauStarForValidatedRelations) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto u = Universe::of_size(n);
    for (const auto& p : enumerate_primals(u)) {
      for (const auto& r : {from_double_complement(p), from_intersection_complement(p)}) {
        EXPECT_EQ(tau_hat(r), tau_star(r));
      }
    }
  }
}

TEST(Induced, TauHatOfExplicitRelation) {
  const auto u = Universe::of_size(2);
  RelationMatrix m(u);
  // Each point is near the other singleton, so only ∅ and X are closed.
  m.set(set(u, "a"), set(u, "b"));
  m.set(set(u, "b"), set(u, "a"));
  const auto r = ProximityRelation::explicit_relation(u, m);
  const auto fam = tau_hat_family(r);
  EXPECT_EQ(fam, family(u, {"", "ab"}));
  EXPECT_EQ(tau_hat(r), Topology::indiscrete(u));
}

TEST(Induced, TauDiamondExamples) {
  const auto u = Universe::of_size(3);
  EXPECT_EQ(tau_diamond(Topology::discrete(u), mk_principal(u, "a")), Topology::discrete(u));
  // The empty primal kills every local function, so cl⋄ is the identity.
  EXPECT_EQ(tau_diamond(Topology::indiscrete(u), Primal::validate(u, SubsetFamily{})),
            Topology::discrete(u));
  for (const auto& t : enumerate_topologies(u)) {
    for (const auto& p : enumerate_primals(u)) {
      const auto d = tau_diamond(t, p);
      ASSERT_TRUE(t.opens().subfamily_of(d.opens()));
    }
  }
}

TEST(PrimalRegular, DiscreteAlwaysPasses) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto u = Universe::of_size(n);
    for (const auto& p : enumerate_primals(u)) {
      EXPECT_TRUE(is_primal_regular(Topology::discrete(u), p).passed());
      EXPECT_TRUE(is_primal_normal(Topology::discrete(u), p).passed());
    }
  }
}

TEST(PrimalRegular, WitnessesRecheck) {
  std::size_t regular_fails = 0;
  std::size_t normal_fails = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto u = Universe::of_size(n);
    for (const auto& t : enumerate_topologies(u)) {
      for (const auto& p : enumerate_primals(u)) {
        const auto closed = tau_diamond(t, p);
        auto separable = [&](Subset lo, Subset hi) {
          for (Subset h : t.opens().members()) {
            for (Subset g : t.opens().members()) {
              if (lo.subset_of(h) && hi.subset_of(g) && !p.contains(u.complement(h & g))) return true;
            }
          }
          return false;
        };
        const auto reg = is_primal_regular(t, p);
        if (reg.failed()) {
          ++regular_fails;
          const Subset x = *reg.witness->get("x");
          const Subset f = *reg.witness->get("F");
          EXPECT_TRUE(closed.is_closed(f));
          EXPECT_FALSE(p.contains(u.complement(x & f)));
          EXPECT_FALSE(separable(x, f));
        }
        const auto nor = is_primal_normal(t, p);
        if (nor.failed()) {
          ++normal_fails;
          const Subset f1 = *nor.witness->get("F1");
          const Subset f2 = *nor.witness->get("F2");
          EXPECT_TRUE(closed.is_closed(f1) && closed.is_closed(f2));
          EXPECT_FALSE(separable(f1, f2));
        }
      }
    }
  }
  EXPECT_GT(regular_fails, 0U);
  EXPECT_GT(normal_fails, 0U);
}
