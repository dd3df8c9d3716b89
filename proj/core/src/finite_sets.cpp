#include "proxal/finite_sets.hpp"

#include <algorithm>

#include "proxal/verdict.hpp"

namespace proxal {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw InputError("universe must contain at least one element");
  }
  if (labels_.size() > kMaxUniverse) {
    throw SizeCapError("universe of " + std::to_string(labels_.size()) +
                       " elements exceeds the cap of " + std::to_string(kMaxUniverse));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw InputError("universe labels must be non-empty");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) {
        throw InputError("duplicate universe label '" + labels_[i] + "'");
      }
    }
  }
}

Universe Universe::of_size(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.emplace_back(1, static_cast<char>('a' + i));
  }
  return Universe(std::move(labels));
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

Subset Universe::encode(std::span<const std::string> names) const {
  Subset s;
  for (const auto& name : names) {
    auto idx = index_of(name);
    if (!idx) {
      throw InputError("unknown label '" + name + "'");
    }
    if (s.contains(*idx)) {
      throw InputError("duplicate label '" + name + "'");
    }
    s = s | Subset::singleton(*idx);
  }
  return s;
}

std::vector<std::string> Universe::decode(Subset s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (s.contains(i)) {
      out.push_back(labels_[i]);
    }
  }
  return out;
}

std::string Universe::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : decode(s)) {
    if (!first) {
      out += ',';
    }
    out += label;
    first = false;
  }
  out += '}';
  return out;
}

std::uint64_t family_mask(const Universe& u) {
  const auto count = u.subset_count();
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

SubsetFamily SubsetFamily::power_set(const Universe& u) { return SubsetFamily{family_mask(u)}; }

std::vector<Subset> SubsetFamily::members() const {
  std::vector<Subset> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t t = table_; t != 0; t &= t - 1) {
    out.emplace_back(static_cast<std::uint32_t>(std::countr_zero(t)));
  }
  return out;
}

SubsetFamily SubsetFamily::complement_in(const Universe& u) const {
  return SubsetFamily{~table_ & family_mask(u)};
}

Verdict is_downward_closed(const Universe& u, SubsetFamily f) {
  for (Subset a : f.members()) {
    // Submasks of a, ascending.
    for (std::uint32_t b = 0; b <= a.mask; ++b) {
      if ((b & ~a.mask) != 0) {
        continue;
      }
      if (!f.contains(Subset{b})) {
        return Verdict::fail("downward", {{"A", a}, {"B", Subset{b}}});
      }
    }
  }
  (void)u;
  return Verdict::pass();
}

}  // namespace proxal
