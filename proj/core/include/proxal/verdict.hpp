#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proxal/finite_sets.hpp"

namespace proxal {

enum class Outcome { kPass, kFail, kVacuous };

std::string_view to_string(Outcome o);

/// One named variable of a witness. Point variables hold a singleton.
struct Binding {
  std::string name;
  Subset value;
  bool point = false;

  friend bool operator==(const Binding&, const Binding&) = default;
};

struct Witness {
  /// Which condition or clause was violated, e.g. "(iii)" or "(4)".
  std::string clause;
  std::vector<Binding> bindings;

  [[nodiscard]] std::optional<Subset> get(std::string_view name) const;
  [[nodiscard]] std::string format(const Universe& u) const;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  Outcome outcome = Outcome::kPass;
  std::optional<Witness> witness;

  [[nodiscard]] bool passed() const { return outcome == Outcome::kPass; }
  [[nodiscard]] bool failed() const { return outcome == Outcome::kFail; }

  static Verdict pass() { return {}; }
  static Verdict vacuous() { return {Outcome::kVacuous, std::nullopt}; }
  static Verdict fail(std::string clause, std::vector<Binding> bindings) {
    return {Outcome::kFail, Witness{std::move(clause), std::move(bindings)}};
  }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace proxal
