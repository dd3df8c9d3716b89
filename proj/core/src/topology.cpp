#include "proxal/topology.hpp"

#include <algorithm>
#include <array>

#include "assignments.hpp"

namespace proxal {

namespace {

constexpr std::array<bool, 2> kTwoSets{false, false};

bool is_topology_fast(const Universe& u, SubsetFamily f) {
  if (!f.contains(Subset{}) || !f.contains(u.full())) {
    return false;
  }
  const auto members = f.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!f.contains(members[i] | members[j]) || !f.contains(members[i] & members[j])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Verdict check_topology(const Universe& u, SubsetFamily f) {
  if (!f.contains(Subset{})) {
    return Verdict::fail("(empty)", {{"U", Subset{}}});
  }
  if (!f.contains(u.full())) {
    return Verdict::fail("(universe)", {{"U", u.full()}});
  }
  using detail::Eval;
  auto unions = detail::search_assignments(u, kTwoSets, [&](std::span<const Subset> v) {
    if (!f.contains(v[0]) || !f.contains(v[1])) return Eval::kUnmet;
    return f.contains(v[0] | v[1]) ? Eval::kHolds : Eval::kViolated;
  });
  if (unions.violation) {
    const auto& w = *unions.violation;
    return Verdict::fail("(union)", {{"U", w[0]}, {"V", w[1]}});
  }
  auto meets = detail::search_assignments(u, kTwoSets, [&](std::span<const Subset> v) {
    if (!f.contains(v[0]) || !f.contains(v[1])) return Eval::kUnmet;
    return f.contains(v[0] & v[1]) ? Eval::kHolds : Eval::kViolated;
  });
  if (meets.violation) {
    const auto& w = *meets.violation;
    return Verdict::fail("(intersection)", {{"U", w[0]}, {"V", w[1]}});
  }
  return Verdict::pass();
}

Topology Topology::validate(const Universe& u, SubsetFamily f) {
  if ((f.table() & ~family_mask(u)) != 0) {
    throw InputError("family refers to subsets outside the universe");
  }
  auto v = check_topology(u, f);
  if (!v.passed()) {
    throw InputError("not a topology: " + v.witness->format(u));
  }
  return Topology(u, f);
}

Topology Topology::discrete(const Universe& u) { return Topology(u, SubsetFamily::power_set(u)); }

Topology Topology::indiscrete(const Universe& u) {
  SubsetFamily f;
  f.insert(Subset{});
  f.insert(u.full());
  return Topology(u, f);
}

SubsetFamily Topology::closed_sets() const {
  SubsetFamily out;
  for (Subset s : opens_.members()) {
    out.insert(universe_.complement(s));
  }
  return out;
}

Subset minimal_neighborhood(const Topology& t, std::size_t element) {
  Subset out = t.universe().full();
  for (Subset s : t.opens().members()) {
    if (s.contains(element)) {
      out = out & s;
    }
  }
  return out;
}

bool is_T1(const Topology& t) {
  for (std::size_t i = 0; i < t.universe().size(); ++i) {
    if (!t.is_closed(Subset::singleton(i))) {
      return false;
    }
  }
  return true;
}

bool is_normal(const Topology& t) {
  const auto closed = t.closed_sets().members();
  const auto opens = t.opens().members();
  for (Subset e : closed) {
    for (Subset f : closed) {
      if (e.intersects(f)) {
        continue;
      }
      bool separated = false;
      for (Subset g : opens) {
        if (!e.subset_of(g)) continue;
        for (Subset h : opens) {
          if (f.subset_of(h) && !g.intersects(h)) {
            separated = true;
            break;
          }
        }
        if (separated) break;
      }
      if (!separated) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Topology> enumerate_topologies_brute(const Universe& u) {
  if (u.size() > 3) {
    throw SizeCapError("brute-force topology enumeration supports n <= 3");
  }
  std::vector<Topology> out;
  const std::uint64_t families = std::uint64_t{1} << u.subset_count();
  for (std::uint64_t t = 0; t < families; ++t) {
    if (is_topology_fast(u, SubsetFamily{t})) {
      out.push_back(Topology::validate(u, SubsetFamily{t}));
    }
  }
  return out;
}

std::vector<Topology> enumerate_topologies_generated(const Universe& u) {
  if (u.size() > 4) {
    throw SizeCapError("topology enumeration supports n <= 4");
  }
  const std::size_t n = u.size();
  // Choose U_x ∋ x for every x such that y ∈ U_x implies U_y ⊆ U_x; the
  // topology is the union closure of {U_x}. Distinct consistent systems give
  // distinct topologies (U_x is recovered as the minimal neighbourhood).
  std::vector<Subset> nbhd(n);
  std::vector<Topology> out;
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (nbhd[a].contains(b) && !nbhd[b].subset_of(nbhd[a])) {
            return;
          }
        }
      }
      SubsetFamily f;
      for (std::uint32_t pick = 0; pick < (1U << n); ++pick) {
        Subset s;
        for (std::size_t a = 0; a < n; ++a) {
          if ((pick >> a) & 1U) s = s | nbhd[a];
        }
        f.insert(s);
      }
      out.push_back(Topology::validate(u, f));
      return;
    }
    for (std::uint32_t m = 0; m < u.subset_count(); ++m) {
      if (Subset{m}.contains(x)) {
        nbhd[x] = Subset{m};
        self(self, x + 1);
      }
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const Topology& a, const Topology& b) { return a.opens() < b.opens(); });
  return out;
}

std::vector<Topology> enumerate_topologies(const Universe& u) {
  return u.size() <= 3 ? enumerate_topologies_brute(u) : enumerate_topologies_generated(u);
}

}  // namespace proxal
