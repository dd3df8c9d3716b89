#include "proxal/verdict.hpp"

namespace proxal {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kPass:
      return "PASS";
    case Outcome::kFail:
      return "FAIL";
    case Outcome::kVacuous:
      return "VACUOUS";
  }
  return "?";
}

std::optional<Subset> Witness::get(std::string_view name) const {
  for (const auto& b : bindings) {
    if (b.name == name) {
      return b.value;
    }
  }
  return std::nullopt;
}

std::string Witness::format(const Universe& u) const {
  std::string out = clause;
  for (const auto& b : bindings) {
    out += ' ';
    out += b.name;
    out += '=';
    if (b.point) {
      auto labels = u.decode(b.value);
      out += labels.empty() ? std::string("?") : labels.front();
    } else {
      out += u.format(b.value);
    }
  }
  return out;
}

}  // namespace proxal
