#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "proxal/finite_sets.hpp"

namespace testing_helpers {

/// Subset from single-character labels: set(u, "bc") = {b, c}.
inline proxal::Subset set(const proxal::Universe& u, std::string_view chars) {
  std::vector<std::string> names;
  for (char c : chars) names.emplace_back(1, c);
  return u.encode(names);
}

inline proxal::SubsetFamily family(const proxal::Universe& u,
                                   std::initializer_list<std::string_view> sets) {
  proxal::SubsetFamily f;
  for (auto s : sets) f.insert(set(u, s));
  return f;
}

}  // namespace testing_helpers
