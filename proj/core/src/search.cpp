#include "proxal/search.hpp"

#include <algorithm>
#include <random>

namespace proxal {

std::vector<ProximityRelation> exhaustive_relation_search(const Universe& u, const Primal& p) {
  if (u.size() > 2) {
    throw SizeCapError("exhaustive relation search supports n <= 2");
  }
  if (!(u == p.universe())) {
    throw InputError("primal lives on a different universe");
  }
  const std::uint32_t dim = u.subset_count();
  const std::uint32_t pairs = dim * dim;
  std::vector<ProximityRelation> out;
  RelationMatrix m(u);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
    for (std::uint32_t k = 0; k < pairs; ++k) {
      m.set(Subset{k / dim}, Subset{k % dim}, ((bits >> k) & 1U) != 0);
    }
    if (check_primal_proximity(u, p.family(), m, true).passed()) {
      out.push_back(ProximityRelation::explicit_relation(u, m));
    }
  }
  std::sort(out.begin(), out.end(), [](const ProximityRelation& a, const ProximityRelation& b) {
    return a.matrix() < b.matrix();
  });
  return out;
}

std::vector<ProximityRelation> random_relation_sample(const Universe& u, const Primal& p,
                                                      std::size_t count, std::uint64_t seed) {
  if (!(u == p.universe())) {
    throw InputError("primal lives on a different universe");
  }
  const std::size_t n = u.size();
  // Points that may take part in a related pair: x with {x}^c ∈ P.
  Subset active;
  for (std::size_t x = 0; x < n; ++x) {
    if (p.contains(u.complement(Subset::singleton(x)))) active = active | Subset::singleton(x);
  }

  std::mt19937_64 engine(seed);
  std::vector<ProximityRelation> out;
  std::vector<RelationMatrix> seen;
  for (std::size_t draw = 0; draw < count; ++draw) {
    // Raw engine bits only: distributions are not portable across libraries.
    const std::uint64_t bits = engine();
    std::vector<std::uint32_t> point_row(n, 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j, ++k) {
        bool on = i == j || ((bits >> k) & 1U) != 0;
        if (on && active.contains(i) && active.contains(j)) {
          point_row[i] |= 1U << j;
          point_row[j] |= 1U << i;
        }
      }
    }
    RelationMatrix m(u);
    for (std::uint32_t a = 0; a < u.subset_count(); ++a) {
      Subset reach;
      for (std::size_t i = 0; i < n; ++i) {
        if (Subset{a}.contains(i)) reach = reach | Subset{point_row[i]};
      }
      for (std::uint32_t b = 0; b < u.subset_count(); ++b) {
        if (reach.intersects(Subset{b})) m.set(Subset{a}, Subset{b});
      }
    }
    if (!check_primal_proximity(u, p.family(), m, true).passed()) continue;
    if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
    seen.push_back(m);
    out.push_back(ProximityRelation::explicit_relation(u, m));
  }
  return out;
}

}  // namespace proxal
