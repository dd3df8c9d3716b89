#include "proxal/proximity.hpp"

#include <algorithm>

#include "assignments.hpp"
#include "proxal/operators.hpp"

namespace proxal {

namespace {

using detail::Eval;

constexpr std::array<bool, 2> kTwoSets{false, false};
constexpr std::array<bool, 3> kThreeSets{false, false, false};

constexpr std::array<std::pair<RuleKind, std::string_view>, 7> kNames{{
    {RuleKind::kExplicit, "explicit"},
    {RuleKind::kDoubleComplement, "double-complement"},
    {RuleKind::kIntersectionComplement, "intersection-complement"},
    {RuleKind::kClosureOverlap, "closure-overlap"},
    {RuleKind::kPointClosure, "point-closure"},
    {RuleKind::kPointDiamond, "point-diamond"},
    {RuleKind::kDiamondOverlap, "diamond-overlap"},
}};

Verdict pair_fail(int axiom, const detail::SearchResult& r) {
  const auto& w = *r.violation;
  std::vector<Binding> b{{"A", w[0]}, {"B", w[1]}};
  if (w.size() > 2) b.push_back({"C", w[2]});
  return Verdict::fail("(" + std::to_string(axiom) + ")", std::move(b));
}

template <class Rel>
std::optional<std::pair<Subset, Subset>> separator(const Universe& u, Rel&& rel,
                                                   auto&& admissible, Subset a, Subset b) {
  for (std::uint32_t c = 0; c < u.subset_count(); ++c) {
    if (rel(a, u.complement(Subset{c}))) continue;
    for (std::uint32_t d = 0; d < u.subset_count(); ++d) {
      if (!rel(u.complement(Subset{d}), b) && admissible(Subset{c}, Subset{d})) {
        return std::pair{Subset{c}, Subset{d}};
      }
    }
  }
  return std::nullopt;
}

// Shared driver for both axiom systems. `blocked(A)` is the hypothesis of
// axiom 3, `forced(A,B)` of axiom 4, `admissible(C,D)` the separator side
// condition of axiom 5.
template <class Rel, class Blocked, class Forced, class Admissible>
AxiomReport check_axioms(const Universe& u, Rel&& rel, Blocked&& blocked, Forced&& forced,
                         Admissible&& admissible, bool stop) {
  AxiomReport report;
  auto done = [&] { return stop && report.first_failure().has_value(); };

  auto sym = detail::search_assignments(u, kTwoSets, [&](std::span<const Subset> v) {
    if (!rel(v[0], v[1])) return Eval::kUnmet;
    return rel(v[1], v[0]) ? Eval::kHolds : Eval::kViolated;
  });
  if (sym.violation) report.axioms[0] = pair_fail(1, sym);
  if (done()) return report;

  auto uni = detail::search_assignments(u, kThreeSets, [&](std::span<const Subset> v) {
    bool lhs = rel(v[0], v[1] | v[2]);
    bool rhs = rel(v[0], v[1]) || rel(v[0], v[2]);
    return lhs == rhs ? Eval::kHolds : Eval::kViolated;
  });
  if (uni.violation) report.axioms[1] = pair_fail(2, uni);
  if (done()) return report;

  auto nontrivial = detail::search_assignments(u, kTwoSets, [&](std::span<const Subset> v) {
    if (!blocked(v[0], v[1])) return Eval::kUnmet;
    return rel(v[0], v[1]) ? Eval::kViolated : Eval::kHolds;
  });
  if (nontrivial.violation) report.axioms[2] = pair_fail(3, nontrivial);
  if (done()) return report;

  auto overlap = detail::search_assignments(u, kTwoSets, [&](std::span<const Subset> v) {
    if (!forced(v[0], v[1])) return Eval::kUnmet;
    return rel(v[0], v[1]) ? Eval::kHolds : Eval::kViolated;
  });
  if (overlap.violation) report.axioms[3] = pair_fail(4, overlap);
  if (done()) return report;

  auto strong = detail::search_assignments(u, kTwoSets, [&](std::span<const Subset> v) {
    if (rel(v[0], v[1])) return Eval::kUnmet;
    return separator(u, rel, admissible, v[0], v[1]) ? Eval::kHolds : Eval::kViolated;
  });
  if (strong.violation) report.axioms[4] = pair_fail(5, strong);
  return report;
}

}  // namespace

std::string_view to_string(RuleKind k) {
  for (const auto& [kind, name] : kNames) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<RuleKind> parse_rule_kind(std::string_view name) {
  for (const auto& [kind, n] : kNames) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

bool needs_topology(RuleKind k) {
  return k == RuleKind::kClosureOverlap || k == RuleKind::kPointClosure ||
         k == RuleKind::kPointDiamond || k == RuleKind::kDiamondOverlap;
}

std::size_t RelationMatrix::count() const {
  std::size_t total = 0;
  for (auto r : rows_) total += static_cast<std::size_t>(std::popcount(r));
  return total;
}

std::vector<std::pair<Subset, Subset>> RelationMatrix::pairs() const {
  std::vector<std::pair<Subset, Subset>> out;
  for (std::uint32_t a = 0; a < rows_.size(); ++a) {
    for (std::uint32_t b = 0; b < rows_.size(); ++b) {
      if ((rows_[a] >> b) & 1U) out.emplace_back(Subset{a}, Subset{b});
    }
  }
  return out;
}

ProximityRelation ProximityRelation::explicit_relation(const Universe& u, RelationMatrix m) {
  if (m.dimension() != u.subset_count()) {
    throw InputError("relation matrix dimension does not match the universe");
  }
  ProximityRelation r(u, RuleKind::kExplicit, SubsetFamily{});
  r.matrix_ = std::move(m);
  return r;
}

bool ProximityRelation::related(Subset a, Subset b) const {
  if (matrix_) return matrix_->get(a, b);
  return evaluate(a, b);
}

bool ProximityRelation::evaluate(Subset a, Subset b) const {
  const Universe& u = universe_;
  auto in_p = [&](Subset s) { return primal_.contains(s); };
  switch (kind_) {
    case RuleKind::kExplicit:
      return false;  // explicit relations always carry a matrix
    case RuleKind::kDoubleComplement:
      return in_p(u.complement(a)) && in_p(u.complement(b));
    case RuleKind::kIntersectionComplement:
      return in_p(u.complement(a & b));
    case RuleKind::kClosureOverlap:
    case RuleKind::kDiamondOverlap:
      return in_p(u.complement(closure_[a.mask] & closure_[b.mask]));
    case RuleKind::kPointClosure:
    case RuleKind::kPointDiamond:
      return in_p(u.complement(a & closure_[b.mask]));
  }
  return false;
}

ProximityRelation ProximityRelation::materialize() const {
  ProximityRelation out = *this;
  if (!out.matrix_) out.matrix_ = matrix();
  return out;
}

RelationMatrix ProximityRelation::matrix() const {
  if (matrix_) return *matrix_;
  RelationMatrix m(universe_);
  for (std::uint32_t a = 0; a < universe_.subset_count(); ++a) {
    for (std::uint32_t b = 0; b < universe_.subset_count(); ++b) {
      if (evaluate(Subset{a}, Subset{b})) m.set(Subset{a}, Subset{b});
    }
  }
  return m;
}

ProximityRelation from_double_complement(const Primal& p) {
  return ProximityRelation(p.universe(), RuleKind::kDoubleComplement, p.family());
}

ProximityRelation from_intersection_complement(const Primal& p) {
  return ProximityRelation(p.universe(), RuleKind::kIntersectionComplement, p.family());
}

namespace {

void require_shared(const Topology& t, const Primal& p) {
  if (!(t.universe() == p.universe())) {
    throw InputError("topology and primal live on different universes");
  }
}

}  // namespace

ProximityRelation from_closure_overlap(const Topology& t, const Primal& p) {
  require_shared(t, p);
  ProximityRelation r(p.universe(), RuleKind::kClosureOverlap, p.family());
  r.topology_ = t;
  r.closure_ = closure_map(t).table();
  return r;
}

ProximityRelation from_point_closure(const Topology& t, const Primal& p) {
  require_shared(t, p);
  ProximityRelation r(p.universe(), RuleKind::kPointClosure, p.family());
  r.topology_ = t;
  r.closure_ = closure_map(t).table();
  return r;
}

ProximityRelation from_point_diamond(const Topology& t, const Primal& p) {
  require_shared(t, p);
  ProximityRelation r(p.universe(), RuleKind::kPointDiamond, p.family());
  r.topology_ = t;
  r.closure_ = cl_diamond_map(t, p).table();
  return r;
}

ProximityRelation from_diamond_overlap(const Topology& t, const Primal& p) {
  require_shared(t, p);
  ProximityRelation r(p.universe(), RuleKind::kDiamondOverlap, p.family());
  r.topology_ = t;
  r.closure_ = cl_diamond_map(t, p).table();
  return r;
}

ProximityRelation make_relation(RuleKind k, const Primal& p, const std::optional<Topology>& t) {
  if (needs_topology(k) && !t) {
    throw InputError("relation kind '" + std::string(to_string(k)) + "' needs a topology");
  }
  switch (k) {
    case RuleKind::kExplicit:
      throw InputError("explicit relations need their pairs");
    case RuleKind::kDoubleComplement:
      return from_double_complement(p);
    case RuleKind::kIntersectionComplement:
      return from_intersection_complement(p);
    case RuleKind::kClosureOverlap:
      return from_closure_overlap(*t, p);
    case RuleKind::kPointClosure:
      return from_point_closure(*t, p);
    case RuleKind::kPointDiamond:
      return from_point_diamond(*t, p);
    case RuleKind::kDiamondOverlap:
      return from_diamond_overlap(*t, p);
  }
  throw InputError("unknown relation kind");
}

bool AxiomReport::passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const Verdict& v) { return v.passed(); });
}

bool AxiomReport::passed(std::initializer_list<int> which) const {
  return std::all_of(which.begin(), which.end(),
                     [&](int i) { return axioms[static_cast<std::size_t>(i - 1)].passed(); });
}

std::optional<int> AxiomReport::first_failure() const {
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    if (!axioms[i].passed()) return static_cast<int>(i + 1);
  }
  return std::nullopt;
}

AxiomReport check_primal_proximity(const Universe& u, SubsetFamily primal,
                                   const RelationMatrix& m, bool stop_at_first_failure) {
  auto rel = [&](Subset a, Subset b) { return m.get(a, b); };
  auto in_p = [&](Subset s) { return primal.contains(s); };
  return check_axioms(
      u, rel, [&](Subset a, Subset) { return !in_p(u.complement(a)); },
      [&](Subset a, Subset b) { return in_p(u.complement(a & b)); },
      [&](Subset c, Subset d) { return !in_p(u.complement(c & d)); }, stop_at_first_failure);
}

AxiomReport check_primal_proximity(const ProximityRelation& r, const Primal& p) {
  if (!(r.universe() == p.universe())) {
    throw InputError("relation and primal live on different universes");
  }
  return check_primal_proximity(r.universe(), p.family(), r.matrix());
}

AxiomReport check_ef_proximity(const ProximityRelation& r) {
  const Universe& u = r.universe();
  const RelationMatrix m = r.matrix();
  auto rel = [&](Subset a, Subset b) { return m.get(a, b); };
  return check_axioms(
      u, rel, [](Subset a, Subset b) { return a.empty() || b.empty(); },
      [](Subset a, Subset b) { return a.intersects(b); },
      [](Subset c, Subset d) { return !c.intersects(d); }, false);
}

std::optional<std::pair<Subset, Subset>> primal_separator(const ProximityRelation& r,
                                                          SubsetFamily primal, Subset a,
                                                          Subset b) {
  if (r.related(a, b)) return std::nullopt;
  const Universe& u = r.universe();
  auto rel = [&](Subset x, Subset y) { return r.related(x, y); };
  return separator(
      u, rel, [&](Subset c, Subset d) { return !primal.contains(u.complement(c & d)); }, a, b);
}

}  // namespace proxal
