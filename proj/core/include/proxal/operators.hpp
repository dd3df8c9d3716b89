#pragma once

#include <vector>

#include "proxal/finite_sets.hpp"
#include "proxal/primal.hpp"
#include "proxal/proximity.hpp"
#include "proxal/topology.hpp"
#include "proxal/verdict.hpp"

namespace proxal {

/// A total map 2^X -> 2^X stored as a table indexed by mask.
class ClosureMap {
 public:
  ClosureMap(Universe u, std::vector<Subset> table);

  [[nodiscard]] Subset operator()(Subset a) const { return table_[a.mask]; }
  [[nodiscard]] const Universe& universe() const { return universe_; }
  [[nodiscard]] const std::vector<Subset>& table() const { return table_; }

  friend bool operator==(const ClosureMap&, const ClosureMap&) = default;

 private:
  Universe universe_;
  std::vector<Subset> table_;
};

/// ◦A = {x : {x} ↪ A}.
Subset point_primal(const ProximityRelation& r, Subset a);
/// cl*(A) = A ∪ ◦A.
Subset cl_star(const ProximityRelation& r, Subset a);

/// A⋄: x ∈ A⋄ iff U^c ∪ A^c ∈ P for every open U containing x.
Subset local_function(const Topology& t, const Primal& p, Subset a);
/// cl⋄(A) = A ∪ A⋄.
Subset cl_diamond(const Topology& t, const Primal& p, Subset a);

/// Smallest closed superset.
Subset closure_in(const Topology& t, Subset a);
/// Largest open subset.
Subset interior_in(const Topology& t, Subset a);
/// The same two operations over an arbitrary family of "open" sets.
Subset closure_in(const Universe& u, SubsetFamily opens, Subset a);
Subset interior_in(const Universe& u, SubsetFamily opens, Subset a);

ClosureMap point_primal_map(const ProximityRelation& r);
ClosureMap cl_star_map(const ProximityRelation& r);
ClosureMap local_function_map(const Topology& t, const Primal& p);
ClosureMap cl_diamond_map(const Topology& t, const Primal& p);
ClosureMap closure_map(const Topology& t);

/// Kuratowski axioms: (1) Φ(∅) = ∅, (2) A ⊆ Φ(A), (3) Φ(A∪B) = Φ(A)∪Φ(B),
/// (4) Φ(Φ(A)) = Φ(A).
Verdict check_kuratowski(const ClosureMap& c);

/// {A : c(A^c) = A^c}. Not validated as a topology.
SubsetFamily operator_to_topology(const ClosureMap& c);

}  // namespace proxal
