#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "proxal/finite_sets.hpp"
#include "proxal/primal.hpp"
#include "proxal/topology.hpp"
#include "proxal/verdict.hpp"

namespace proxal {

enum class RuleKind {
  kExplicit,
  kDoubleComplement,        // A ↪ B  iff  A^c ∈ P and B^c ∈ P
  kIntersectionComplement,  // (A∩B)^c ∈ P
  kClosureOverlap,          // (cl A ∩ cl B)^c ∈ P
  kPointClosure,            // (A ∩ cl B)^c ∈ P
  kPointDiamond,            // (A ∩ cl⋄ B)^c ∈ P
  kDiamondOverlap,          // (cl⋄ A ∩ cl⋄ B)^c ∈ P
};

inline constexpr std::array<RuleKind, 7> kAllRuleKinds{
    RuleKind::kExplicit,       RuleKind::kDoubleComplement, RuleKind::kIntersectionComplement,
    RuleKind::kClosureOverlap, RuleKind::kPointClosure,     RuleKind::kPointDiamond,
    RuleKind::kDiamondOverlap};

/// Wire names: "explicit", "double-complement", "intersection-complement",
/// "closure-overlap", "point-closure", "point-diamond", "diamond-overlap".
std::string_view to_string(RuleKind k);
std::optional<RuleKind> parse_rule_kind(std::string_view name);
bool needs_topology(RuleKind k);

/// 2^n x 2^n bit table; row A holds bit B iff A is related to B.
class RelationMatrix {
 public:
  RelationMatrix() = default;
  explicit RelationMatrix(const Universe& u) : rows_(u.subset_count(), 0U) {}

  [[nodiscard]] bool get(Subset a, Subset b) const { return ((rows_[a.mask] >> b.mask) & 1U) != 0; }
  void set(Subset a, Subset b, bool value = true) {
    if (value) {
      rows_[a.mask] |= 1U << b.mask;
    } else {
      rows_[a.mask] &= ~(1U << b.mask);
    }
  }
  [[nodiscard]] std::uint32_t row(Subset a) const { return rows_[a.mask]; }
  [[nodiscard]] std::size_t dimension() const { return rows_.size(); }
  /// Number of related pairs.
  [[nodiscard]] std::size_t count() const;
  /// Related pairs in ascending (A, B) order.
  [[nodiscard]] std::vector<std::pair<Subset, Subset>> pairs() const;

  friend bool operator==(const RelationMatrix&, const RelationMatrix&) = default;
  friend auto operator<=>(const RelationMatrix&, const RelationMatrix&) = default;

 private:
  std::vector<std::uint32_t> rows_;
};

/// A binary relation on 2^X, either an explicit matrix or one of the
/// rule-backed constructions. Immutable; materialize() returns a copy whose
/// related() reads a precomputed matrix.
class ProximityRelation {
 public:
  /// Read verbatim; never symmetrised.
  static ProximityRelation explicit_relation(const Universe& u, RelationMatrix m);

  [[nodiscard]] bool related(Subset a, Subset b) const;

  [[nodiscard]] RuleKind kind() const { return kind_; }
  [[nodiscard]] const Universe& universe() const { return universe_; }
  /// Primal the rule reads; empty for explicit relations.
  [[nodiscard]] SubsetFamily primal_family() const { return primal_; }
  /// Topology the rule reads, when it needs one.
  [[nodiscard]] const std::optional<Topology>& topology() const { return topology_; }

  [[nodiscard]] bool materialized() const { return matrix_.has_value(); }
  /// Evaluates the rule on all 4^n pairs. Idempotent.
  [[nodiscard]] ProximityRelation materialize() const;
  /// The full table (computed on the fly when not materialized).
  [[nodiscard]] RelationMatrix matrix() const;

  friend ProximityRelation from_double_complement(const Primal& p);
  friend ProximityRelation from_intersection_complement(const Primal& p);
  friend ProximityRelation from_closure_overlap(const Topology& t, const Primal& p);
  friend ProximityRelation from_point_closure(const Topology& t, const Primal& p);
  friend ProximityRelation from_point_diamond(const Topology& t, const Primal& p);
  friend ProximityRelation from_diamond_overlap(const Topology& t, const Primal& p);

 private:
  ProximityRelation(Universe u, RuleKind k, SubsetFamily primal)
      : universe_(std::move(u)), kind_(k), primal_(primal) {}

  [[nodiscard]] bool evaluate(Subset a, Subset b) const;

  Universe universe_;
  RuleKind kind_;
  SubsetFamily primal_;
  std::optional<Topology> topology_;
  // cl or cl⋄ table for the topological rules, indexed by mask.
  std::vector<Subset> closure_;
  std::optional<RelationMatrix> matrix_;
};

ProximityRelation from_double_complement(const Primal& p);
ProximityRelation from_intersection_complement(const Primal& p);
ProximityRelation from_closure_overlap(const Topology& t, const Primal& p);
ProximityRelation from_point_closure(const Topology& t, const Primal& p);
ProximityRelation from_point_diamond(const Topology& t, const Primal& p);
ProximityRelation from_diamond_overlap(const Topology& t, const Primal& p);

/// Builds a rule-backed relation by kind. Explicit kinds and missing
/// topologies raise InputError.
ProximityRelation make_relation(RuleKind k, const Primal& p, const std::optional<Topology>& t);

/// Per-axiom verdicts (index 0 holds axiom 1).
struct AxiomReport {
  std::array<Verdict, 5> axioms;

  [[nodiscard]] bool passed() const;
  /// Passes the given 1-based axioms.
  [[nodiscard]] bool passed(std::initializer_list<int> which) const;
  /// First failing axiom, 1-based.
  [[nodiscard]] std::optional<int> first_failure() const;
};

/// The five primal-proximity axioms:
///  (1) A↪B => B↪A
///  (2) A↪(B∪C) <=> A↪B or A↪C
///  (3) A^c ∉ P => A is related to nothing
///  (4) (A∩B)^c ∈ P => A↪B
///  (5) not A↪B => ∃C,D: not A↪C^c, not D^c↪B, (C∩D)^c ∉ P
AxiomReport check_primal_proximity(const ProximityRelation& r, const Primal& p);

/// Same axioms over a raw matrix; used by the exhaustive relation search.
/// With stop_at_first_failure the remaining axioms are left PASS.
AxiomReport check_primal_proximity(const Universe& u, SubsetFamily primal,
                                   const RelationMatrix& m, bool stop_at_first_failure = false);

/// The Efremovič axioms: symmetry, union, AδB => A,B ≠ ∅,
/// A∩B ≠ ∅ => AδB, and the separation axiom with disjoint C, D.
AxiomReport check_ef_proximity(const ProximityRelation& r);

/// Axiom-5 separator for an unrelated pair: first (C, D) in ascending mask
/// order with not A↪C^c, not D^c↪B and (C∩D)^c ∉ P.
std::optional<std::pair<Subset, Subset>> primal_separator(const ProximityRelation& r,
                                                          SubsetFamily primal, Subset a,
                                                          Subset b);

}  // namespace proxal
