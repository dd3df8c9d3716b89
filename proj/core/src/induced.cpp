#include <algorithm>
#include <stdexcept>

#include "proxal/operators.hpp"
#include "proxal/proximity.hpp"
#include "proxal/topology.hpp"

namespace proxal {

bool is_proximity_closed(const ProximityRelation& r, Subset f) {
  for (std::size_t x = 0; x < r.universe().size(); ++x) {
    if (!f.contains(x) && r.related(Subset::singleton(x), f)) {
      return false;
    }
  }
  return true;
}

SubsetFamily tau_hat_family(const ProximityRelation& r) {
  const Universe& u = r.universe();
  SubsetFamily out;
  for (std::uint32_t m = 0; m < u.subset_count(); ++m) {
    if (is_proximity_closed(r, Subset{m})) {
      out.insert(u.complement(Subset{m}));
    }
  }
  return out;
}

namespace {

Topology validated_or_throw(const Universe& u, SubsetFamily f, const char* what) {
  auto v = check_topology(u, f);
  if (!v.passed()) {
    throw std::logic_error(std::string(what) + " is not a topology: " + v.witness->format(u));
  }
  return Topology::validate(u, f);
}

}  // namespace

Topology tau_hat(const ProximityRelation& r) {
  return validated_or_throw(r.universe(), tau_hat_family(r), "tau-hat");
}

SubsetFamily tau_star_family(const ProximityRelation& r) {
  return operator_to_topology(cl_star_map(r));
}

Topology tau_star(const ProximityRelation& r) {
  return validated_or_throw(r.universe(), tau_star_family(r), "tau-star");
}

SubsetFamily tau_diamond_family(const Topology& t, const Primal& p) {
  return operator_to_topology(cl_diamond_map(t, p));
}

Topology tau_diamond(const Topology& t, const Primal& p) {
  return validated_or_throw(t.universe(), tau_diamond_family(t, p), "tau-diamond");
}

namespace {

// Some open H ⊇ lower and G ⊇ upper with (H∩G)^c ∉ P.
bool separable(const Universe& u, const std::vector<Subset>& opens, const Primal& p,
               Subset lower, Subset upper) {
  for (Subset h : opens) {
    if (!lower.subset_of(h)) continue;
    for (Subset g : opens) {
      if (upper.subset_of(g) && !p.contains(u.complement(h & g))) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

Verdict is_primal_regular(const Topology& t, const Primal& p) {
  const Universe& u = t.universe();
  const auto opens = t.opens().members();
  std::vector<Subset> diamond_closed;
  for (Subset open : tau_diamond_family(t, p).members()) diamond_closed.push_back(u.complement(open));
  std::sort(diamond_closed.begin(), diamond_closed.end());
  // Graded order: the point counts once, F by cardinality, then masks.
  std::optional<Verdict> best;
  int best_grade = 1 << 30;
  for (std::size_t x = 0; x < u.size(); ++x) {
    for (Subset f : diamond_closed) {
      Subset point = Subset::singleton(x);
      if (p.contains(u.complement(point & f))) continue;
      if (separable(u, opens, p, point, f)) continue;
      int grade = 1 + f.size();
      if (grade < best_grade) {
        best_grade = grade;
        best = Verdict::fail("primal-regular", {{"x", point, true}, {"F", f}});
      }
    }
  }
  return best ? *best : Verdict::pass();
}

Verdict is_primal_normal(const Topology& t, const Primal& p) {
  const Universe& u = t.universe();
  const auto opens = t.opens().members();
  std::vector<Subset> closed;
  for (Subset open : tau_diamond_family(t, p).members()) closed.push_back(u.complement(open));
  std::sort(closed.begin(), closed.end());
  std::optional<Verdict> best;
  int best_grade = 1 << 30;
  for (Subset f1 : closed) {
    for (Subset f2 : closed) {
      if (p.contains(u.complement(f1 & f2))) continue;
      if (separable(u, opens, p, f1, f2)) continue;
      int grade = f1.size() + f2.size();
      if (grade < best_grade) {
        best_grade = grade;
        best = Verdict::fail("primal-normal", {{"F1", f1}, {"F2", f2}});
      }
    }
  }
  return best ? *best : Verdict::pass();
}

}  // namespace proxal
