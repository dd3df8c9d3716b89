#include "registry.hpp"

#include <algorithm>
#include <array>

namespace proxal::detail {
namespace {

using V = std::span<const Subset>;

Eval implies(bool hypothesis, bool conclusion) {
  if (!hypothesis) return Eval::kUnmet;
  return conclusion ? Eval::kHolds : Eval::kViolated;
}

Eval always(bool conclusion) { return conclusion ? Eval::kHolds : Eval::kViolated; }

// Lower-case variable names denote points.
Clause clause(std::string label, std::vector<std::string> vars, Body body,
              std::vector<Guard> guards = {}) {
  Clause c;
  c.label = std::move(label);
  for (const auto& v : vars) c.points.push_back(!v.empty() && v[0] >= 'a' && v[0] <= 'z');
  c.vars = std::move(vars);
  c.guards = std::move(guards);
  c.body = std::move(body);
  return c;
}

const Guard kMaximal{[](const EvalContext& c) { return c.maximal; },
                     "hypothesis unmet: P is not 2^X minus {X}"};
const Guard kNormal{[](const EvalContext& c) { return c.normal; },
                    "hypothesis unmet: topology is not normal"};
const Guard kPrimalRegular{[](const EvalContext& c) { return c.primal_regular; },
                           "hypothesis unmet: space is not primal-regular"};
const Guard kPrimalNormal{[](const EvalContext& c) { return c.primal_normal; },
                          "hypothesis unmet: space is not primal-normal"};
const Guard kT1{[](const EvalContext& c) { return c.t1; }, "hypothesis unmet: topology is not T1"};

// ∃ C, D: not A↪C^c, not D^c↪B, (C∩D)^c ∉ P.
bool has_separator(const EvalContext& c, Subset a, Subset b) {
  const std::uint32_t count = c.u->subset_count();
  for (std::uint32_t cm = 0; cm < count; ++cm) {
    const Subset cs{cm};
    if (c.rel(a, c.comp(cs))) continue;
    for (std::uint32_t dm = 0; dm < count; ++dm) {
      const Subset ds{dm};
      if (!c.rel(c.comp(ds), b) && !c.in_p(c.comp(cs & ds))) return true;
    }
  }
  return false;
}

std::vector<Clause> axiom_clauses(std::initializer_list<int> which) {
  std::vector<Clause> out;
  for (int k : which) {
    switch (k) {
      case 1:
        out.push_back(clause("(1)", {"A", "B"}, [](const EvalContext& c, V v) {
          return implies(c.rel(v[0], v[1]), c.rel(v[1], v[0]));
        }));
        break;
      case 2:
        out.push_back(clause("(2)", {"A", "B", "C"}, [](const EvalContext& c, V v) {
          return always(c.rel(v[0], v[1] | v[2]) == (c.rel(v[0], v[1]) || c.rel(v[0], v[2])));
        }));
        break;
      case 3:
        out.push_back(clause("(3)", {"A", "B"}, [](const EvalContext& c, V v) {
          return implies(!c.in_p(c.comp(v[0])), !c.rel(v[0], v[1]));
        }));
        break;
      case 4:
        out.push_back(clause("(4)", {"A", "B"}, [](const EvalContext& c, V v) {
          return implies(c.in_p(c.comp(v[0] & v[1])), c.rel(v[0], v[1]));
        }));
        break;
      case 5:
        out.push_back(clause("(5)", {"A", "B"}, [](const EvalContext& c, V v) {
          return implies(!c.rel(v[0], v[1]), has_separator(c, v[0], v[1]));
        }));
        break;
      default:
        break;
    }
  }
  return out;
}

// Kuratowski axioms for the table-backed operator op.
template <class Op>
std::vector<Clause> kuratowski_clauses(Op op, std::vector<Guard> guards) {
  return {
      clause("(1)", {}, [op](const EvalContext& c, V) { return always(op(c, Subset{}).empty()); },
             guards),
      clause("(2)", {"A"},
             [op](const EvalContext& c, V v) { return always(v[0].subset_of(op(c, v[0]))); },
             guards),
      clause("(3)", {"A", "B"},
             [op](const EvalContext& c, V v) {
               return always(op(c, v[0] | v[1]) == (op(c, v[0]) | op(c, v[1])));
             },
             guards),
      clause("(4)", {"A"},
             [op](const EvalContext& c, V v) { return always(op(c, op(c, v[0])) == op(c, v[0])); },
             guards),
  };
}

TheoremDef proximity_claim(std::string id, std::string statement, std::vector<Clause> clauses) {
  TheoremDef d;
  d.info.id = std::move(id);
  d.info.statement = std::move(statement);
  d.info.scope = TheoremScope::kProximitySpace;
  for (const auto& c : clauses) d.info.clauses.push_back(c.label);
  d.clauses = std::move(clauses);
  return d;
}

TheoremDef space_claim(std::string id, std::string statement, RuleKind kind,
                       std::vector<Clause> clauses) {
  TheoremDef d = proximity_claim(std::move(id), std::move(statement), std::move(clauses));
  d.info.scope = TheoremScope::kPrimalSpace;
  d.info.relation = kind;
  d.info.needs_topology = needs_topology(kind);
  return d;
}

std::vector<TheoremDef> build_registry() {
  std::vector<TheoremDef> r;

  r.push_back(proximity_claim(
      "R3.3", "With P = 2^X minus {X}: x ∈ A implies {x}↪A, and not A↪B implies A∩B = ∅.",
      {clause("(1)", {"x", "A"},
              [](const EvalContext& c, V v) {
                return implies(v[0].subset_of(v[1]), c.rel(v[0], v[1]));
              },
              {kMaximal}),
       clause("(2)", {"A", "B"},
              [](const EvalContext& c, V v) {
                return implies(!c.rel(v[0], v[1]), !v[0].intersects(v[1]));
              },
              {kMaximal})}));

  r.push_back(proximity_claim(
      "C3.4",
      "Contrapositive axioms: not B↪A gives not A↪B; not A↪(B∪C) iff not A↪B and not A↪C; "
      "A↪B gives A^c ∈ P; not A↪B gives (A∩B)^c ∉ P and a separating pair (C, D).",
      {clause("(1)", {"A", "B"},
              [](const EvalContext& c, V v) {
                return implies(!c.rel(v[1], v[0]), !c.rel(v[0], v[1]));
              }),
       clause("(2)", {"A", "B", "C"},
              [](const EvalContext& c, V v) {
                return always(!c.rel(v[0], v[1] | v[2]) ==
                              (!c.rel(v[0], v[1]) && !c.rel(v[0], v[2])));
              }),
       clause("(3)", {"A", "B"},
              [](const EvalContext& c, V v) {
                return implies(c.rel(v[0], v[1]), c.in_p(c.comp(v[0])));
              }),
       clause("(4)", {"A", "B"},
              [](const EvalContext& c, V v) {
                return implies(!c.rel(v[0], v[1]), !c.in_p(c.comp(v[0] & v[1])));
              }),
       clause("(5)", {"A", "B"}, [](const EvalContext& c, V v) {
         return implies(!c.rel(v[0], v[1]), has_separator(c, v[0], v[1]));
       })}));

  r.push_back(proximity_claim(
      "L-mono", "A↪B, A ⊆ C and B ⊆ D give C↪D.",
      {clause("main", {"A", "B", "C", "D"}, [](const EvalContext& c, V v) {
        return implies(c.rel(v[0], v[1]) && v[0].subset_of(v[2]) && v[1].subset_of(v[3]),
                       c.rel(v[2], v[3]));
      })}));

  r.push_back(proximity_claim(
      "L4.2", "not B↪A gives ◦A ⊆ B^c.",
      {clause("main", {"A", "B"}, [](const EvalContext& c, V v) {
        return implies(!c.rel(v[1], v[0]), c.pt(v[0]).subset_of(c.comp(v[1])));
      })}));

  r.push_back(proximity_claim(
      "T4.5", "not B↪A gives not B↪◦A.",
      {clause("main", {"A", "B"}, [](const EvalContext& c, V v) {
        return implies(!c.rel(v[1], v[0]), !c.rel(v[1], c.pt(v[0])));
      })}));

  r.push_back(proximity_claim(
      "C4.5", "not B↪A gives not ◦B↪◦A.",
      {clause("main", {"A", "B"}, [](const EvalContext& c, V v) {
        return implies(!c.rel(v[1], v[0]), !c.rel(c.pt(v[1]), c.pt(v[0])));
      })}));

  r.push_back(proximity_claim(
      "T4.6", "Nine algebraic laws of the point-primal operator ◦.",
      {clause("(1)", {"A", "B"},
              [](const EvalContext& c, V v) {
                return implies(v[0].subset_of(v[1]), c.pt(v[0]).subset_of(c.pt(v[1])));
              }),
       clause("(2)", {"A", "B"},
              [](const EvalContext& c, V v) {
                return always(c.pt(v[0] & v[1]).subset_of(c.pt(v[0]) & c.pt(v[1])));
              }),
       clause("(3)", {"A", "B"},
              [](const EvalContext& c, V v) {
                return always((c.pt(v[0]) | c.pt(v[1])) == c.pt(v[0] | v[1]));
              }),
       clause("(4)", {"A"},
              [](const EvalContext& c, V v) {
                return always(c.pt(c.pt(v[0])).subset_of(c.pt(v[0])));
              }),
       clause("(5)", {"A"},
              [](const EvalContext& c, V v) {
                return implies(!c.in_p(c.comp(v[0])), c.pt(v[0]).empty());
              }),
       clause("(6)", {}, [](const EvalContext& c, V) { return always(c.pt(Subset{}).empty()); }),
       clause("(7)", {"A", "B"},
              [](const EvalContext& c, V v) {
                return always((c.pt(v[0]) - c.pt(v[1])).subset_of(c.pt(v[0] - v[1])));
              }),
       clause("(8)", {"A", "B"},
              [](const EvalContext& c, V v) {
                return implies(!c.in_p(c.comp(v[1])), c.pt(v[0] | v[1]) == c.pt(v[0]) &&
                                                          c.pt(v[0]) == c.pt(v[0] - v[1]));
              }),
       clause("(9)", {"A", "B"}, [](const EvalContext& c, V v) {
         const Subset sym = (v[0] - v[1]) | (v[1] - v[0]);
         return implies(!c.in_p(c.comp(sym)), c.pt(v[0]) == c.pt(v[1]));
       })}));

  r.push_back(proximity_claim(
      "T4.9",
      "A^c ∉ P gives A∩◦B = ∅; {x}↪X for every x iff P = 2^X minus {X}; "
      "with that P, ◦X = X.",
      {clause("(1)", {"A", "B"},
              [](const EvalContext& c, V v) {
                return implies(!c.in_p(c.comp(v[0])), !v[0].intersects(c.pt(v[1])));
              }),
       clause("(2)", {},
              [](const EvalContext& c, V) {
                bool all = true;
                for (std::size_t x = 0; x < c.u->size(); ++x) {
                  all = all && c.rel(Subset::singleton(x), c.full());
                }
                return always(all == c.maximal);
              }),
       clause("(3)", {}, [](const EvalContext& c, V) { return always(c.pt(c.full()) == c.full()); },
              {kMaximal})}));

  r.push_back(proximity_claim(
      "T4.10", "B ⊊ C, not A↪B and A↪C give A↪(C minus B).",
      {clause("main", {"A", "B", "C"}, [](const EvalContext& c, V v) {
        const bool proper = v[1].subset_of(v[2]) && v[1] != v[2];
        return implies(proper && !c.rel(v[0], v[1]) && c.rel(v[0], v[2]),
                       c.rel(v[0], v[2] - v[1]));
      })}));

  r.push_back(proximity_claim(
      "T4.11", "not A↪B gives some C with not A↪C and not B↪C^c.",
      {clause("main", {"A", "B"}, [](const EvalContext& c, V v) {
        if (c.rel(v[0], v[1])) return Eval::kUnmet;
        for (std::uint32_t m = 0; m < c.u->subset_count(); ++m) {
          if (!c.rel(v[0], Subset{m}) && !c.rel(v[1], c.comp(Subset{m}))) return Eval::kHolds;
        }
        return Eval::kViolated;
      })}));

  r.push_back(proximity_claim(
      "C4.12", "not A↪B and B↪C give not A↪C.",
      {clause("main", {"A", "B", "C"}, [](const EvalContext& c, V v) {
        return implies(!c.rel(v[0], v[1]) && c.rel(v[1], v[2]), !c.rel(v[0], v[2]));
      })}));

  r.push_back(proximity_claim(
      "L5.2", "A↪{x} and {x}↪B give A↪B.",
      {clause("main", {"x", "A", "B"}, [](const EvalContext& c, V v) {
        return implies(c.rel(v[1], v[0]) && c.rel(v[0], v[2]), c.rel(v[1], v[2]));
      })}));

  r.push_back(proximity_claim(
      "T5.3", "Complements of proximity-closed sets form a topology τ̂.",
      {clause("(1)", {},
              [](const EvalContext& c, V) {
                return always(c.hat.contains(Subset{}) && c.hat.contains(c.full()));
              }),
       clause("(2)", {"U", "V"},
              [](const EvalContext& c, V v) {
                return implies(c.hat.contains(v[0]) && c.hat.contains(v[1]),
                               c.hat.contains(v[0] | v[1]));
              }),
       clause("(3)", {"U", "V"}, [](const EvalContext& c, V v) {
         return implies(c.hat.contains(v[0]) && c.hat.contains(v[1]), c.hat.contains(v[0] & v[1]));
       })}));

  r.push_back(proximity_claim(
      "T5.4", "◦A is the τ̂-closure of A.",
      {clause("main", {"A"}, [](const EvalContext& c, V v) {
        return always(c.hat_cl[v[0].mask] == c.pt(v[0]));
      })}));

  r.push_back(proximity_claim(
      "T5.6", "With P = 2^X minus {X}, ◦ is a Kuratowski closure operator.",
      kuratowski_clauses([](const EvalContext& c, Subset a) { return c.pt(a); }, {kMaximal})));

  r.push_back(proximity_claim(
      "T5.7", "cl*(A) = A ∪ ◦A is a Kuratowski closure operator.",
      kuratowski_clauses([](const EvalContext& c, Subset a) { return c.cls(a); }, {})));

  r.push_back(proximity_claim(
      "T5.8", "not B↪A iff not B↪cl*(A); cl*(◦A) = ◦A; cl*(◦A) = ◦(cl*(A)).",
      {clause("(1)", {"A", "B"},
              [](const EvalContext& c, V v) {
                return always(!c.rel(v[1], v[0]) == !c.rel(v[1], c.cls(v[0])));
              }),
       clause("(2)", {"A"},
              [](const EvalContext& c, V v) { return always(c.cls(c.pt(v[0])) == c.pt(v[0])); }),
       clause("(3)", {"A"}, [](const EvalContext& c, V v) {
         return always(c.cls(c.pt(v[0])) == c.pt(c.cls(v[0])));
       })}));

  r.push_back(proximity_claim(
      "T5.9", "A ⊆ B, A↪B and {b}↪H for every b ∈ B give A↪H.",
      {clause("main", {"A", "B", "H"}, [](const EvalContext& c, V v) {
        if (!v[0].subset_of(v[1]) || !c.rel(v[0], v[1])) return Eval::kUnmet;
        for (std::size_t b = 0; b < c.u->size(); ++b) {
          if (v[1].contains(b) && !c.rel(Subset::singleton(b), v[2])) return Eval::kUnmet;
        }
        return always(c.rel(v[0], v[2]));
      })}));

  r.push_back(proximity_claim(
      "T5.18", "A ∈ τ̂ iff not {x}↪A^c for every x ∈ A.",
      {clause("main", {"A"}, [](const EvalContext& c, V v) {
        bool all = true;
        for (std::size_t x = 0; x < c.u->size(); ++x) {
          if (v[0].contains(x) && c.rel(Subset::singleton(x), c.comp(v[0]))) all = false;
        }
        return always(c.hat.contains(v[0]) == all);
      })}));

  r.push_back(proximity_claim(
      "T5.19",
      "not A↪B gives cl_τ̂(B) ⊆ A^c; with P = 2^X minus {X} it also gives B ⊆ int_τ̂(A^c).",
      {clause("(1)", {"A", "B"},
              [](const EvalContext& c, V v) {
                return implies(!c.rel(v[0], v[1]), c.hat_cl[v[1].mask].subset_of(c.comp(v[0])));
              }),
       clause("(2)", {"A", "B"},
              [](const EvalContext& c, V v) {
                return implies(!c.rel(v[0], v[1]),
                               v[1].subset_of(c.hat_int[c.comp(v[0]).mask]));
              },
              {kMaximal})}));

  r.push_back(proximity_claim(
      "T5.20", "A↪B iff cl_τ̂(A)↪cl_τ̂(B).",
      {clause("main", {"A", "B"}, [](const EvalContext& c, V v) {
        return always(c.rel(v[0], v[1]) == c.rel(c.hat_cl[v[0].mask], c.hat_cl[v[1].mask]));
      })}));

  r.push_back(space_claim("E3.5",
                          "A↪B iff A^c ∈ P and B^c ∈ P is a primal-proximity for every primal.",
                          RuleKind::kDoubleComplement, axiom_clauses({1, 2, 3, 4, 5})));

  r.push_back(space_claim("E3.6", "A↪B iff (A∩B)^c ∈ P is a primal-proximity for every primal.",
                          RuleKind::kIntersectionComplement, axiom_clauses({1, 2, 3, 4, 5})));

  {
    auto clauses = axiom_clauses({1, 2, 3, 4, 5});
    for (auto& c : clauses) c.guards = {kNormal, kMaximal};
    r.push_back(space_claim(
        "E3.7",
        "A↪B iff (cl A ∩ cl B)^c ∈ P is a primal-proximity when τ is normal and "
        "P = 2^X minus {X}.",
        RuleKind::kClosureOverlap, std::move(clauses)));
  }

  {
    auto clauses = axiom_clauses({2, 3, 4, 5});
    clauses.push_back(clause("(τ ⊆ τ*)", {"U"}, [](const EvalContext& c, V v) {
      return implies(c.topology->is_open(v[0]), c.star_opens.contains(v[0]));
    }));
    r.push_back(space_claim(
        "E5.10", "A↪B iff (A ∩ cl B)^c ∈ P satisfies axioms (2) to (5), and τ ⊆ τ*.",
        RuleKind::kPointClosure, std::move(clauses)));
  }

  {
    auto clauses = axiom_clauses({2, 3, 4, 5});
    clauses.push_back(clause("(τ⋄ ⊆ τ*)", {"U"}, [](const EvalContext& c, V v) {
      return implies(c.diamond_opens.contains(v[0]), c.star_opens.contains(v[0]));
    }));
    r.push_back(space_claim(
        "E5.11", "A↪B iff (A ∩ cl⋄B)^c ∈ P satisfies axioms (2) to (5), and τ⋄ ⊆ τ*.",
        RuleKind::kPointDiamond, std::move(clauses)));
  }

  r.push_back(space_claim(
      "T5.14", "In a primal-regular space the relation (A ∩ cl⋄B)^c ∈ P has τ⋄ = τ*.",
      RuleKind::kPointDiamond,
      {clause("main", {"U"},
              [](const EvalContext& c, V v) {
                return always(c.diamond_opens.contains(v[0]) == c.star_opens.contains(v[0]));
              },
              {kPrimalRegular})}));

  r.push_back(space_claim("E5.15", "A↪B iff (cl⋄A ∩ cl⋄B)^c ∈ P satisfies axioms (1) to (4).",
                          RuleKind::kDiamondOverlap, axiom_clauses({1, 2, 3, 4})));

  r.push_back(space_claim(
      "T5.17", "In a primal-normal T1 space the relation (cl⋄A ∩ cl⋄B)^c ∈ P has τ⋄ = τ*.",
      RuleKind::kDiamondOverlap,
      {clause("main", {"U"},
              [](const EvalContext& c, V v) {
                return always(c.diamond_opens.contains(v[0]) == c.star_opens.contains(v[0]));
              },
              {kPrimalNormal, kT1})}));

  return r;
}

const std::vector<TheoremDef>& registry() {
  static const std::vector<TheoremDef> r = build_registry();
  return r;
}

const Clause* find_clause(const TheoremDef& def, std::string_view label) {
  for (const auto& c : def.clauses) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

const Guard* first_unmet_guard(const Clause& c, const EvalContext& ctx) {
  for (const auto& g : c.guards) {
    if (!g.holds(ctx)) return &g;
  }
  return nullptr;
}

}  // namespace

std::span<const TheoremDef> theorem_defs() { return registry(); }

const TheoremDef* find_def(std::string_view id) {
  for (const auto& d : registry()) {
    if (d.info.id == id) return &d;
  }
  return nullptr;
}

bool applies(const TheoremDef& def, const Instance& inst) {
  if (def.info.scope == TheoremScope::kProximitySpace) return true;
  return inst.relation().kind() == *def.info.relation &&
         (!def.info.needs_topology || inst.topology().has_value());
}

TheoremVerdict evaluate(const TheoremDef& def, const EvalContext& ctx, const Instance& inst) {
  TheoremVerdict v;
  v.theorem = def.info.id;
  v.instance_id = inst.id();

  if (def.info.scope == TheoremScope::kProximitySpace && !ctx.validated) {
    v.outcome = Outcome::kVacuous;
    v.note = "relation is not a primal-proximity";
    return v;
  }
  if (!applies(def, inst)) {
    v.outcome = Outcome::kVacuous;
    v.note = "claim concerns " + std::string(to_string(*def.info.relation)) + " relations";
    return v;
  }

  bool met = false;
  std::string unmet_note;
  for (const auto& c : def.clauses) {
    if (const Guard* g = first_unmet_guard(c, ctx)) {
      if (unmet_note.empty()) unmet_note = g->unmet_note;
      continue;
    }
    std::array<bool, 8> points{};
    std::copy(c.points.begin(), c.points.end(), points.begin());
    const auto result =
        search_assignments(*ctx.u, std::span<const bool>(points.data(), c.points.size()),
                           [&](std::span<const Subset> values) { return c.body(ctx, values); });
    met = met || result.hypothesis_met;
    if (result.violation) {
      Witness w;
      w.clause = c.label;
      for (std::size_t i = 0; i < c.vars.size(); ++i) {
        w.bindings.push_back(Binding{c.vars[i], (*result.violation)[i], c.points[i]});
      }
      v.witnesses.push_back(std::move(w));
    }
  }

  if (!v.witnesses.empty()) {
    v.outcome = Outcome::kFail;
  } else if (met) {
    v.outcome = Outcome::kPass;
  } else {
    v.outcome = Outcome::kVacuous;
    v.note = unmet_note.empty() ? "no assignment meets the hypotheses" : unmet_note;
  }
  return v;
}

Eval evaluate_clause(const TheoremDef& def, const EvalContext& ctx, std::string_view label,
                     std::span<const Subset> values) {
  const Clause* c = find_clause(def, label);
  if (c == nullptr || values.size() != c->vars.size() || first_unmet_guard(*c, ctx) != nullptr) {
    return Eval::kUnmet;
  }
  return c->body(ctx, values);
}

}  // namespace proxal::detail
