#pragma once

// Precomputed tables for evaluating theorem clauses on one instance.

#include <optional>
#include <vector>

#include "proxal/checker.hpp"
#include "proxal/operators.hpp"

namespace proxal::detail {

struct EvalContext {
  const Universe* u = nullptr;
  const Primal* primal = nullptr;
  bool maximal = false;

  RelationMatrix matrix;
  AxiomReport axioms;
  bool validated = false;

  std::vector<Subset> point;    // ◦A
  std::vector<Subset> star;     // cl*(A)
  SubsetFamily hat;             // τ̂
  std::vector<Subset> hat_cl;   // cl_τ̂(A)
  std::vector<Subset> hat_int;  // int_τ̂(A)
  SubsetFamily star_opens;      // τ*

  // Present when the instance carries a topology.
  const Topology* topology = nullptr;
  SubsetFamily diamond_opens;  // τ⋄
  bool primal_regular = false;
  bool primal_normal = false;
  bool t1 = false;
  bool normal = false;

  [[nodiscard]] bool rel(Subset a, Subset b) const { return matrix.get(a, b); }
  [[nodiscard]] bool in_p(Subset s) const { return primal->contains(s); }
  [[nodiscard]] Subset comp(Subset s) const { return u->complement(s); }
  [[nodiscard]] Subset full() const { return u->full(); }
  [[nodiscard]] Subset pt(Subset a) const { return point[a.mask]; }
  [[nodiscard]] Subset cls(Subset a) const { return star[a.mask]; }
};

/// The instance must outlive the context.
EvalContext make_context(const Instance& inst);

}  // namespace proxal::detail
