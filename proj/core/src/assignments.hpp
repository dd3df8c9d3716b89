#pragma once

// Exhaustive quantification over tuples of subsets/points with graded-minimal
// witness selection: among violating tuples the one with the smallest total
// cardinality wins, ties broken by ascending masks (first variable most
// significant).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "proxal/finite_sets.hpp"

namespace proxal::detail {

/// Outcome of evaluating a clause body on one assignment.
enum class Eval : std::uint8_t { kUnmet, kHolds, kViolated };

struct SearchResult {
  bool hypothesis_met = false;
  std::optional<std::vector<Subset>> violation;
};

template <class Body>
SearchResult search_assignments(const Universe& u, std::span<const bool> point_vars, Body&& body) {
  const std::size_t k = point_vars.size();
  const std::uint32_t subsets = u.subset_count();
  const auto n = static_cast<std::uint32_t>(u.size());

  SearchResult result;
  std::vector<Subset> current(k);
  // Odometer digits: subset mask for set variables, element index for points.
  std::vector<std::uint32_t> digit(k, 0);
  auto radix = [&](std::size_t i) { return point_vars[i] ? n : subsets; };
  auto value = [&](std::size_t i) {
    return point_vars[i] ? Subset::singleton(digit[i]) : Subset{digit[i]};
  };

  int floor_grade = 0;
  for (bool p : point_vars) floor_grade += p ? 1 : 0;
  int best_grade = 1 << 30;

  while (true) {
    int grade = 0;
    for (std::size_t i = 0; i < k; ++i) {
      current[i] = value(i);
      grade += current[i].size();
    }
    if (grade < best_grade) {
      switch (body(std::span<const Subset>(current))) {
        case Eval::kUnmet:
          break;
        case Eval::kHolds:
          result.hypothesis_met = true;
          break;
        case Eval::kViolated:
          result.hypothesis_met = true;
          result.violation = current;
          best_grade = grade;
          break;
      }
      if (best_grade == floor_grade) {
        return result;
      }
    }

    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < radix(pos)) {
        break;
      }
      digit[pos] = 0;
      if (pos == 0) {
        return result;
      }
    }
    if (k == 0) {
      return result;
    }
  }
}

}  // namespace proxal::detail
