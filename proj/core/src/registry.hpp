#pragma once

// Clause-level theorem definitions shared by the checker.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "assignments.hpp"
#include "context.hpp"

namespace proxal::detail {

using Body = std::function<Eval(const EvalContext&, std::span<const Subset>)>;

struct Guard {
  std::function<bool(const EvalContext&)> holds;
  std::string unmet_note;
};

struct Clause {
  std::string label;
  std::vector<std::string> vars;
  /// Parallel to vars; point variables range over singletons.
  std::vector<bool> points;
  /// Clause-level hypothesis on the instance; absent means always met.
  std::vector<Guard> guards;
  Body body;
};

struct TheoremDef {
  TheoremInfo info;
  std::vector<Clause> clauses;
};

std::span<const TheoremDef> theorem_defs();
const TheoremDef* find_def(std::string_view id);

/// Whether a theorem speaks about the instance at all. Primal-space claims
/// apply only to instances carrying the relation kind they construct.
bool applies(const TheoremDef& def, const Instance& inst);

/// Evaluates every clause. ctx must belong to inst.
TheoremVerdict evaluate(const TheoremDef& def, const EvalContext& ctx, const Instance& inst);

/// Body of the named clause on explicit values (in variable order); kUnmet if a
/// guard fails or the clause is unknown.
Eval evaluate_clause(const TheoremDef& def, const EvalContext& ctx, std::string_view clause,
                     std::span<const Subset> values);

}  // namespace proxal::detail
