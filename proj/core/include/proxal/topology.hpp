#pragma once

#include <vector>

#include "proxal/finite_sets.hpp"
#include "proxal/primal.hpp"
#include "proxal/verdict.hpp"

namespace proxal {

class ProximityRelation;

/// A validated topology: contains ∅ and X, closed under binary union and
/// intersection (enough on a finite universe).
class Topology {
 public:
  /// Throws InputError if f fails check_topology.
  static Topology validate(const Universe& u, SubsetFamily f);
  static Topology discrete(const Universe& u);
  static Topology indiscrete(const Universe& u);

  [[nodiscard]] const Universe& universe() const { return universe_; }
  [[nodiscard]] SubsetFamily opens() const { return opens_; }
  [[nodiscard]] bool is_open(Subset s) const { return opens_.contains(s); }
  [[nodiscard]] bool is_closed(Subset s) const { return opens_.contains(universe_.complement(s)); }
  [[nodiscard]] SubsetFamily closed_sets() const;

  friend bool operator==(const Topology&, const Topology&) = default;

 private:
  Topology(Universe u, SubsetFamily f) : universe_(std::move(u)), opens_(f) {}

  Universe universe_;
  SubsetFamily opens_;
};

/// Clauses: "(empty)", "(universe)", "(union)" and "(intersection)" with the
/// offending pair (U, V).
Verdict check_topology(const Universe& u, SubsetFamily f);

/// Smallest open set containing the element.
Subset minimal_neighborhood(const Topology& t, std::size_t element);

/// Every singleton closed. On a finite universe this forces the discrete topology.
bool is_T1(const Topology& t);

/// Disjoint closed sets have disjoint open supersets.
bool is_normal(const Topology& t);

/// All topologies on u, ascending by open-set table. n <= 4.
std::vector<Topology> enumerate_topologies(const Universe& u);
/// Filter over all families. n <= 3.
std::vector<Topology> enumerate_topologies_brute(const Universe& u);
/// Union closure of every consistent minimal-neighbourhood system. n <= 4.
std::vector<Topology> enumerate_topologies_generated(const Universe& u);

// Topologies induced by a proximity relation or a primal topological space.

/// {x} ↪ F implies x ∈ F.
bool is_proximity_closed(const ProximityRelation& r, Subset f);

/// Complements of the proximity-closed sets, without validation.
SubsetFamily tau_hat_family(const ProximityRelation& r);
/// Throws std::logic_error if the family fails the topology axioms (the
/// relation was not a primal-proximity).
Topology tau_hat(const ProximityRelation& r);

/// {A : cl*(A^c) = A^c}, without validation.
SubsetFamily tau_star_family(const ProximityRelation& r);
Topology tau_star(const ProximityRelation& r);

/// Fixed-point complements of cl⋄, without validation.
SubsetFamily tau_diamond_family(const Topology& t, const Primal& p);
Topology tau_diamond(const Topology& t, const Primal& p);

/// For every x and τ⋄-closed F with ({x}∩F)^c ∉ P there are open H ∋ x and
/// G ⊇ F with (H∩G)^c ∉ P. FAIL carries (x, F).
Verdict is_primal_regular(const Topology& t, const Primal& p);

/// For τ⋄-closed F1, F2 with (F1∩F2)^c ∉ P there are open H ⊇ F1 and
/// G ⊇ F2 with (H∩G)^c ∉ P. FAIL carries (F1, F2).
Verdict is_primal_normal(const Topology& t, const Primal& p);

}  // namespace proxal
