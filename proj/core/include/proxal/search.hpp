#pragma once

#include <cstdint>
#include <vector>

#include "proxal/primal.hpp"
#include "proxal/proximity.hpp"

namespace proxal {

/// Every explicit relation on u passing the primal-proximity axioms for p,
/// ascending by matrix. n <= 2 (2^16 candidates at n = 2).
std::vector<ProximityRelation> exhaustive_relation_search(const Universe& u, const Primal& p);

/// Seeded candidates: a random symmetric point-level relation is restricted
/// to the points allowed by axiom (3), made reflexive there for axiom (4) and
/// extended by unions for axiom (2); candidates that then pass the full check
/// are returned, deduplicated, in draw order. Same seed, same output.
std::vector<ProximityRelation> random_relation_sample(const Universe& u, const Primal& p,
                                                      std::size_t count, std::uint64_t seed);

}  // namespace proxal
