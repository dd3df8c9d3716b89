#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "proxal/checker.hpp"
#include "proxal/operators.hpp"
#include "proxal/search.hpp"

using namespace proxal;
using testing_helpers::set;

namespace {

Instance example_instance() {
  const auto u = Universe::of_size(3);
  const auto p = mk_principal(u, "a");
  return Instance(p, std::nullopt, from_intersection_complement(p));
}

SuiteConfig small_config() {
  SuiteConfig c;
  c.sizes = {1, 2, 3};
  c.relations = {RuleKind::kDoubleComplement, RuleKind::kIntersectionComplement,
                 RuleKind::kClosureOverlap, RuleKind::kPointDiamond, RuleKind::kDiamondOverlap};
  c.topologies = TopologySource::kAll;
  c.theorems = {"all"};
  c.search_max_n = 2;
  return c;
}

}  // namespace

TEST(RunTheorem, ExampleInstance) {
  const auto inst = example_instance();
  EXPECT_EQ(run_theorem("T4.6", inst).outcome, Outcome::kPass);

  const auto t54 = run_theorem("T5.4", inst);
  ASSERT_EQ(t54.outcome, Outcome::kFail);
  ASSERT_EQ(t54.witnesses.size(), 1U);
  EXPECT_EQ(t54.witnesses[0].clause, "main");
  EXPECT_EQ(t54.witnesses[0].get("A"), set(inst.universe(), "b"));
  EXPECT_TRUE(is_expected_failure(t54));
  EXPECT_TRUE(recheck_witness(t54, inst));

  const auto r33 = run_theorem("R3.3", inst);
  EXPECT_EQ(r33.outcome, Outcome::kVacuous);
  EXPECT_FALSE(r33.note.empty());
  EXPECT_EQ(r33.instance_id, inst.id());
}

TEST(RunTheorem, NonPrimalProximityIsVacuous) {
  const auto u = Universe::of_size(2);
  RelationMatrix m(u);
  m.set(set(u, "a"), set(u, "b"));
  const Instance inst(mk_maximal(u), std::nullopt, ProximityRelation::explicit_relation(u, m));
  const auto v = run_theorem("T4.6", inst);
  EXPECT_EQ(v.outcome, Outcome::kVacuous);
  EXPECT_EQ(v.note, "relation is not a primal-proximity");
}

TEST(RunTheorem, PrimalSpaceClaimsNeedTheirRelationKind) {
  const auto inst = example_instance();
  EXPECT_EQ(run_theorem("E3.6", inst).outcome, Outcome::kPass);
  const auto other = run_theorem("E3.5", inst);
  EXPECT_EQ(other.outcome, Outcome::kVacuous);
  EXPECT_NE(other.note.find("double-complement"), std::string::npos);
}

TEST(RunTheorem, UnknownIdListsVocabulary) {
  try {
    (void)run_theorem("T9.9", example_instance());
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("T4.6"), std::string::npos);
  }
}

TEST(Instance, IdIsStableAndDistinguishesParts) {
  const auto a = example_instance();
  const auto b = example_instance();
  EXPECT_EQ(a.id(), b.id());
  EXPECT_EQ(a.id().size(), 16U);
  const auto u = Universe::of_size(3);
  const Instance c(mk_maximal(u), std::nullopt, from_intersection_complement(mk_maximal(u)));
  EXPECT_NE(a.id(), c.id());
}

TEST(Instance, RejectsMismatchedParts) {
  const auto u = Universe::of_size(3);
  EXPECT_THROW(Instance(mk_maximal(u), std::nullopt, from_intersection_complement(mk_principal(u, "a"))),
               InputError);
  const auto u2 = Universe::of_size(2);
  EXPECT_THROW(Instance(mk_maximal(u), std::nullopt, from_intersection_complement(mk_maximal(u2))),
               InputError);
  const auto p = mk_maximal(u);
  EXPECT_THROW(Instance(p, Topology::indiscrete(u), from_closure_overlap(Topology::discrete(u), p)),
               InputError);
  const Instance adopted(p, std::nullopt, from_closure_overlap(Topology::discrete(u), p));
  EXPECT_EQ(adopted.topology(), Topology::discrete(u));
}

TEST(Minimize, ShrinksAndKeepsViolation) {
  const auto inst = example_instance();
  const auto raw = run_theorem("T5.4", inst);
  const auto min = minimize_witness(raw, inst);
  EXPECT_EQ(min.outcome, Outcome::kFail);
  EXPECT_TRUE(recheck_witness(min, inst));
  ASSERT_EQ(min.witnesses.size(), raw.witnesses.size());
  for (std::size_t i = 0; i < raw.witnesses.size(); ++i) {
    for (std::size_t j = 0; j < raw.witnesses[i].bindings.size(); ++j) {
      EXPECT_TRUE(min.witnesses[i].bindings[j].value.subset_of(raw.witnesses[i].bindings[j].value));
    }
  }
  EXPECT_THROW((void)minimize_witness(run_theorem("T4.6", inst), inst), std::invalid_argument);
}

// The τ̂-closure claim fails exactly on the relations where some closure differs from ◦A.
TEST(KnownGap, ClosureClaimFailsExactlyWhereOperatorsDiffer) {
  std::size_t fails = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto u = Universe::of_size(n);
    for (const auto& p : enumerate_primals(u)) {
      for (const auto& r : {from_double_complement(p), from_intersection_complement(p)}) {
        const Instance inst(p, std::nullopt, r);
        const auto hat = tau_hat(r);
        bool differs = false;
        for (std::uint32_t a = 0; a < u.subset_count(); ++a) {
          if (closure_in(hat, Subset{a}) != point_primal(r, Subset{a})) differs = true;
        }
        const auto v = run_theorem("T5.4", inst);
        ASSERT_EQ(v.failed(), differs);
        if (v.failed()) ++fails;
      }
    }
  }
  EXPECT_GT(fails, 0U);
}

TEST(KnownGap, ListIsDocumented) {
  ASSERT_EQ(known_gaps().size(), 3U);
  for (const auto& g : known_gaps()) {
    EXPECT_NE(find_theorem(g.theorem), nullptr);
    EXPECT_FALSE(g.explanation.empty());
    EXPECT_FALSE(g.counterexample.empty());
    EXPECT_TRUE(is_known_gap(g.theorem, g.clause));
  }
  EXPECT_FALSE(is_known_gap("T4.6", "(1)"));
}

TEST(Registry, IdsUniqueAndClausesListed) {
  std::set<std::string> ids;
  for (const auto& info : theorem_registry()) {
    EXPECT_TRUE(ids.insert(info.id).second) << info.id;
    EXPECT_FALSE(info.statement.empty());
    EXPECT_FALSE(info.clauses.empty()) << info.id;
    if (info.scope == TheoremScope::kPrimalSpace) EXPECT_TRUE(info.relation.has_value());
  }
  for (const char* id : {"R3.3", "C3.4", "T4.5", "T4.6", "T4.9", "T5.3", "T5.4", "T5.6", "T5.7",
                         "T5.8", "T5.14", "T5.17", "E3.5", "E3.6", "E3.7", "E5.10", "E5.11"}) {
    EXPECT_EQ(ids.count(id), 1U) << id;
  }
  const auto all = resolve_theorems({"all"});
  EXPECT_EQ(all.size(), ids.size());
  EXPECT_EQ(resolve_theorems({"T4.6", "T4.6", "T5.4"}), (std::vector<std::string>{"T4.6", "T5.4"}));
  EXPECT_THROW((void)resolve_theorems({"nope"}), InputError);
  EXPECT_THROW((void)resolve_theorems({}), InputError);
}

TEST(Config, Validation) {
  SuiteConfig ok = small_config();
  EXPECT_NO_THROW(validate_config(ok));
  auto bad = ok;
  bad.sizes.clear();
  EXPECT_THROW(validate_config(bad), InputError);
  bad = ok;
  bad.sizes = {6};
  EXPECT_THROW(validate_config(bad), InputError);
  bad = ok;
  bad.sizes = {5};
  EXPECT_THROW(validate_config(bad), InputError);
  bad = ok;
  bad.relations = {RuleKind::kExplicit};
  EXPECT_THROW(validate_config(bad), InputError);
  bad = ok;
  bad.topologies = TopologySource::kNone;
  EXPECT_THROW(validate_config(bad), InputError);
  bad = ok;
  bad.search_max_n = 3;
  EXPECT_THROW(validate_config(bad), InputError);
  bad = ok;
  bad.sizes = {1, 2};
  bad.samples = 5;
  EXPECT_THROW(validate_config(bad), InputError);
  bad = ok;
  bad.jobs = 0;
  EXPECT_THROW(validate_config(bad), InputError);
  bad = ok;
  bad.relations.clear();
  bad.search_max_n = 0;
  EXPECT_THROW(validate_config(bad), InputError);
}

TEST(Suite, OnlyKnownGapsFailAndAuditIsClean) {
  const auto report = run_suite(small_config());
  EXPECT_GT(report.instances, 0U);
  EXPECT_EQ(report.unexpected_failures(), 0U);
  EXPECT_EQ(report.audit_discrepancies, 0U);
  EXPECT_GT(report.audited, 0U);
  for (const auto& f : report.failures) {
    EXPECT_TRUE(f.expected) << f.verdict.theorem;
    EXPECT_TRUE(recheck_witness(f.verdict, f.instance));
    EXPECT_TRUE(recheck_witness(f.raw, f.instance));
  }
}

TEST(Suite, IndependentOfJobCount) {
  auto config = small_config();
  config.sizes = {1, 2, 3};
  config.samples = 5;
  config.seed = 3;
  const auto instances = build_instances(config);
  const auto theorems = resolve_theorems({"all"});
  const auto one = run_instances(instances, theorems, 1, false);
  const auto four = run_instances(instances, theorems, 4, false);
  EXPECT_EQ(one.evaluations, four.evaluations);
  ASSERT_EQ(one.failures.size(), four.failures.size());
  for (std::size_t i = 0; i < one.failures.size(); ++i) {
    EXPECT_EQ(one.failures[i].verdict, four.failures[i].verdict);
    EXPECT_EQ(one.failures[i].instance.id(), four.failures[i].instance.id());
  }
  for (const auto& [id, t] : one.tallies) {
    const auto& o = four.tallies.at(id);
    EXPECT_EQ(t.pass, o.pass);
    EXPECT_EQ(t.fail, o.fail);
    EXPECT_EQ(t.expected_fail, o.expected_fail);
    EXPECT_EQ(t.vacuous, o.vacuous);
  }
}

TEST(Suite, ExhaustivelyFoundRelationsSatisfyAxiomConsequences) {
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto u = Universe::of_size(n);
    for (const auto& p : enumerate_primals(u)) {
      for (const auto& r : exhaustive_relation_search(u, p)) {
        const Instance inst(p, std::nullopt, r);
        for (const char* id : {"C3.4", "L-mono", "T4.6", "T4.9", "T5.18"}) {
          const auto v = run_theorem(id, inst);
          EXPECT_NE(v.outcome, Outcome::kFail) << id;
        }
      }
    }
  }
}

TEST(Suite, BuildInstancesIsDeterministic) {
  auto config = small_config();
  config.samples = 4;
  config.seed = 9;
  const auto a = build_instances(config);
  const auto b = build_instances(config);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].id(), b[i].id());
}
