#pragma once

// Universe, subset and subset-family primitives.
//
// A universe holds at most kMaxUniverse labelled elements. Subsets are bit
// masks (bit i <-> labels[i]) and families of subsets are 2^n-bit membership
// tables indexed by subset mask, so every structure in the library fits in a
// handful of machine words.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace proxal {

inline constexpr std::size_t kMaxUniverse = 5;

/// Malformed or inconsistent user input (unknown label, duplicate, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested computation exceeds the supported universe size.
class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Subset {
  std::uint32_t mask = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t m) : mask(m) {}

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.mask | b.mask}; }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.mask & b.mask}; }
  /// Set difference a \ b.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.mask & ~b.mask}; }

  [[nodiscard]] constexpr bool empty() const { return mask == 0; }
  [[nodiscard]] constexpr int size() const { return std::popcount(mask); }
  [[nodiscard]] constexpr bool contains(std::size_t element) const {
    return ((mask >> element) & 1U) != 0;
  }
  [[nodiscard]] constexpr bool subset_of(Subset other) const { return (mask & ~other.mask) == 0; }
  [[nodiscard]] constexpr bool intersects(Subset other) const { return (mask & other.mask) != 0; }

  static constexpr Subset singleton(std::size_t element) { return Subset{1U << element}; }
};

class Universe {
 public:
  /// Throws InputError on empty/duplicate labels and SizeCapError past kMaxUniverse.
  explicit Universe(std::vector<std::string> labels);

  /// Universe labelled a, b, c, ... of the given size.
  static Universe of_size(std::size_t n);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] std::uint32_t subset_count() const { return 1U << labels_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

  [[nodiscard]] Subset empty_set() const { return Subset{}; }
  [[nodiscard]] Subset full() const { return Subset{subset_count() - 1}; }
  [[nodiscard]] Subset complement(Subset s) const { return Subset{~s.mask & full().mask}; }
  [[nodiscard]] bool valid(Subset s) const { return s.mask < subset_count(); }

  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view label) const;

  /// Label list -> mask. Unknown or repeated labels raise InputError.
  [[nodiscard]] Subset encode(std::span<const std::string> names) const;
  /// Mask -> labels in canonical (universe) order.
  [[nodiscard]] std::vector<std::string> decode(Subset s) const;
  /// Human-readable "{a,c}" form.
  [[nodiscard]] std::string format(Subset s) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Family of subsets of a universe as a 2^n-bit membership table.
class SubsetFamily {
 public:
  constexpr SubsetFamily() = default;
  constexpr explicit SubsetFamily(std::uint64_t table) : table_(table) {}

  static SubsetFamily power_set(const Universe& u);

  [[nodiscard]] constexpr std::uint64_t table() const { return table_; }
  [[nodiscard]] constexpr bool contains(Subset s) const { return ((table_ >> s.mask) & 1U) != 0; }
  [[nodiscard]] constexpr bool empty() const { return table_ == 0; }
  [[nodiscard]] constexpr int size() const { return std::popcount(table_); }

  constexpr void insert(Subset s) { table_ |= std::uint64_t{1} << s.mask; }
  constexpr void erase(Subset s) { table_ &= ~(std::uint64_t{1} << s.mask); }

  /// Members in ascending mask order.
  [[nodiscard]] std::vector<Subset> members() const;

  /// Families of u not in this one (the complement inside 2^(2^X)).
  [[nodiscard]] SubsetFamily complement_in(const Universe& u) const;
  [[nodiscard]] constexpr bool subfamily_of(SubsetFamily other) const {
    return (table_ & ~other.table_) == 0;
  }

  friend constexpr bool operator==(SubsetFamily, SubsetFamily) = default;
  friend constexpr auto operator<=>(SubsetFamily, SubsetFamily) = default;

 private:
  std::uint64_t table_ = 0;
};

/// Membership-table mask covering every subset of u.
std::uint64_t family_mask(const Universe& u);

struct Verdict;

/// PASS iff every subset of a member is a member; FAIL carries (A, B) with
/// A in f, B a subset of A, B not in f.
Verdict is_downward_closed(const Universe& u, SubsetFamily f);

}  // namespace proxal
