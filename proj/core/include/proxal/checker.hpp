#pragma once

// Theorem registry, instance sweeps and verdict reporting.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "proxal/primal.hpp"
#include "proxal/proximity.hpp"
#include "proxal/topology.hpp"
#include "proxal/verdict.hpp"

namespace proxal {

/// A primal (optionally topological) space together with a relation.
class Instance {
 public:
  /// Throws InputError if the parts do not share one universe.
  Instance(Primal primal, std::optional<Topology> topology, ProximityRelation relation);

  [[nodiscard]] const Universe& universe() const { return primal_.universe(); }
  [[nodiscard]] const Primal& primal() const { return primal_; }
  [[nodiscard]] const std::optional<Topology>& topology() const { return topology_; }
  [[nodiscard]] const ProximityRelation& relation() const { return relation_; }

  /// 16 hex digits; FNV-1a over a canonical encoding of every part.
  [[nodiscard]] const std::string& id() const { return id_; }

 private:
  Primal primal_;
  std::optional<Topology> topology_;
  ProximityRelation relation_;
  std::string id_;
};

enum class TheoremScope {
  /// Quantifies over a validated primal-proximity (X, ↪, P).
  kProximitySpace,
  /// A statement about (X, τ, P) and a relation it constructs itself.
  kPrimalSpace,
};

struct TheoremInfo {
  std::string id;
  std::string statement;
  TheoremScope scope = TheoremScope::kProximitySpace;
  /// Relation the statement is about (kPrimalSpace only).
  std::optional<RuleKind> relation;
  bool needs_topology = false;
  /// Clause labels in evaluation order.
  std::vector<std::string> clauses;
};

/// Every registered claim, in registry order.
std::span<const TheoremInfo> theorem_registry();
const TheoremInfo* find_theorem(std::string_view id);
/// Comma-separated list of ids, for error messages.
std::string theorem_vocabulary();

struct TheoremVerdict {
  std::string theorem;
  Outcome outcome = Outcome::kPass;
  std::string instance_id;
  /// One witness per failing clause, in clause order.
  std::vector<Witness> witnesses;
  /// Why a verdict is VACUOUS when a standing hypothesis fails.
  std::string note;

  [[nodiscard]] bool failed() const { return outcome == Outcome::kFail; }

  friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

/// Throws InputError for an unknown id or a missing instance part.
TheoremVerdict run_theorem(std::string_view id, const Instance& inst);

/// Re-evaluates the clause body on each witness; true iff every witness
/// still violates its clause.
bool recheck_witness(const TheoremVerdict& v, const Instance& inst);

/// Greedy single-element removal, variables in order, labels ascending,
/// repeated until no removal keeps the violation. Throws std::invalid_argument
/// on a verdict that is not FAIL.
TheoremVerdict minimize_witness(const TheoremVerdict& v, const Instance& inst);

/// A FAIL documented as a genuine gap in the claimed statement.
struct KnownGap {
  std::string theorem;
  std::string clause;
  std::string explanation;
  std::string counterexample;
};

std::span<const KnownGap> known_gaps();
bool is_known_gap(std::string_view theorem, std::string_view clause);
/// Every failing clause of v is a known gap.
bool is_expected_failure(const TheoremVerdict& v);

enum class TopologySource { kNone, kTrivial, kAll };

std::string_view to_string(TopologySource s);

struct SuiteConfig {
  std::vector<std::size_t> sizes;
  std::vector<RuleKind> relations;
  TopologySource topologies = TopologySource::kAll;
  /// Theorem ids; "all" expands to the whole registry.
  std::vector<std::string> theorems;
  /// Adds every primal-proximity found by exhaustive search for n <= this
  /// (0 disables; capped at 2).
  std::size_t search_max_n = 0;
  /// Random relations per primal at n = 3.
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

/// Throws InputError describing the first problem.
void validate_config(const SuiteConfig& config);

struct TheoremTally {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t expected_fail = 0;
  std::size_t vacuous = 0;
  /// kPrimalSpace theorems: instances whose relation fails the primal-proximity axioms.
  std::size_t not_primal_proximity = 0;
};

struct FailureEntry {
  Instance instance;
  TheoremVerdict verdict;  // minimized witnesses
  TheoremVerdict raw;      // as found
  bool expected = false;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<std::string> theorems;
  std::map<std::string, TheoremTally> tallies;
  std::vector<FailureEntry> failures;
  /// Every verdict, kept only for single-instance runs.
  std::vector<TheoremVerdict> verdicts;
  std::size_t instances = 0;
  std::size_t evaluations = 0;
  std::size_t audited = 0;
  std::size_t audit_discrepancies = 0;
  double seconds = 0.0;

  [[nodiscard]] std::size_t unexpected_failures() const;
};

/// Builds the sweep's instances in deterministic order.
std::vector<Instance> build_instances(const SuiteConfig& config);

/// Evaluates each theorem on every instance it applies to, audits and
/// minimizes failures. Output is independent of `jobs`.
SuiteReport run_instances(const std::vector<Instance>& instances,
                          const std::vector<std::string>& theorems, std::size_t jobs,
                          bool keep_verdicts);

SuiteReport run_suite(const SuiteConfig& config);

/// Expands "all" and checks every id against the registry.
std::vector<std::string> resolve_theorems(const std::vector<std::string>& ids);

}  // namespace proxal
