#include "proxal/operators.hpp"

#include <array>

#include "assignments.hpp"

namespace proxal {

ClosureMap::ClosureMap(Universe u, std::vector<Subset> table)
    : universe_(std::move(u)), table_(std::move(table)) {
  if (table_.size() != universe_.subset_count()) {
    throw InputError("closure map must have one entry per subset");
  }
}

Subset point_primal(const ProximityRelation& r, Subset a) {
  Subset out;
  for (std::size_t x = 0; x < r.universe().size(); ++x) {
    if (r.related(Subset::singleton(x), a)) {
      out = out | Subset::singleton(x);
    }
  }
  return out;
}

Subset cl_star(const ProximityRelation& r, Subset a) { return a | point_primal(r, a); }

Subset local_function(const Topology& t, const Primal& p, Subset a) {
  const Universe& u = t.universe();
  const auto opens = t.opens().members();
  Subset out;
  for (std::size_t x = 0; x < u.size(); ++x) {
    bool every = true;
    for (Subset open : opens) {
      if (open.contains(x) && !p.contains(u.complement(open) | u.complement(a))) {
        every = false;
        break;
      }
    }
    if (every) {
      out = out | Subset::singleton(x);
    }
  }
  return out;
}

Subset cl_diamond(const Topology& t, const Primal& p, Subset a) {
  return a | local_function(t, p, a);
}

Subset closure_in(const Universe& u, SubsetFamily opens, Subset a) {
  Subset out = u.full();
  for (Subset open : opens.members()) {
    Subset closed = u.complement(open);
    if (a.subset_of(closed)) {
      out = out & closed;
    }
  }
  return out;
}

Subset interior_in(const Universe& u, SubsetFamily opens, Subset a) {
  (void)u;
  Subset out;
  for (Subset open : opens.members()) {
    if (open.subset_of(a)) {
      out = out | open;
    }
  }
  return out;
}

Subset closure_in(const Topology& t, Subset a) { return closure_in(t.universe(), t.opens(), a); }

Subset interior_in(const Topology& t, Subset a) { return interior_in(t.universe(), t.opens(), a); }

namespace {

template <class F>
ClosureMap tabulate(const Universe& u, F&& f) {
  std::vector<Subset> table(u.subset_count());
  for (std::uint32_t m = 0; m < u.subset_count(); ++m) {
    table[m] = f(Subset{m});
  }
  return ClosureMap(u, std::move(table));
}

}  // namespace

ClosureMap point_primal_map(const ProximityRelation& r) {
  return tabulate(r.universe(), [&](Subset a) { return point_primal(r, a); });
}

ClosureMap cl_star_map(const ProximityRelation& r) {
  return tabulate(r.universe(), [&](Subset a) { return cl_star(r, a); });
}

ClosureMap local_function_map(const Topology& t, const Primal& p) {
  return tabulate(t.universe(), [&](Subset a) { return local_function(t, p, a); });
}

ClosureMap cl_diamond_map(const Topology& t, const Primal& p) {
  return tabulate(t.universe(), [&](Subset a) { return cl_diamond(t, p, a); });
}

ClosureMap closure_map(const Topology& t) {
  return tabulate(t.universe(), [&](Subset a) { return closure_in(t, a); });
}

Verdict check_kuratowski(const ClosureMap& c) {
  using detail::Eval;
  const Universe& u = c.universe();
  if (!c(Subset{}).empty()) {
    return Verdict::fail("(1)", {});
  }
  constexpr std::array<bool, 1> one{false};
  constexpr std::array<bool, 2> two{false, false};
  auto extensive = detail::search_assignments(u, one, [&](std::span<const Subset> v) {
    return v[0].subset_of(c(v[0])) ? Eval::kHolds : Eval::kViolated;
  });
  if (extensive.violation) {
    return Verdict::fail("(2)", {{"A", (*extensive.violation)[0]}});
  }
  auto additive = detail::search_assignments(u, two, [&](std::span<const Subset> v) {
    return c(v[0] | v[1]) == (c(v[0]) | c(v[1])) ? Eval::kHolds : Eval::kViolated;
  });
  if (additive.violation) {
    const auto& w = *additive.violation;
    return Verdict::fail("(3)", {{"A", w[0]}, {"B", w[1]}});
  }
  auto idempotent = detail::search_assignments(u, one, [&](std::span<const Subset> v) {
    return c(c(v[0])) == c(v[0]) ? Eval::kHolds : Eval::kViolated;
  });
  if (idempotent.violation) {
    return Verdict::fail("(4)", {{"A", (*idempotent.violation)[0]}});
  }
  return Verdict::pass();
}

SubsetFamily operator_to_topology(const ClosureMap& c) {
  const Universe& u = c.universe();
  SubsetFamily out;
  for (std::uint32_t m = 0; m < u.subset_count(); ++m) {
    Subset complement = u.complement(Subset{m});
    if (c(complement) == complement) {
      out.insert(Subset{m});
    }
  }
  return out;
}

}  // namespace proxal
