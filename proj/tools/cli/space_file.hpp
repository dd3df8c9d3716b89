#pragma once

// SpaceFile: the JSON description of a (primal, topology, relation) instance.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "proxal/checker.hpp"

namespace proxal::cli {

/// Malformed file; what() is "path: reason", e.g. "$.primal.sets[2]: unknown label 'z'".
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

struct PrimalSpec {
  enum class Kind { kExplicit, kMaximal, kPrincipal, kEmpty };
  Kind kind = Kind::kMaximal;
  SubsetFamily sets;    // kExplicit
  std::size_t element = 0;  // kPrincipal

  friend bool operator==(const PrimalSpec&, const PrimalSpec&) = default;
};

struct TopologySpec {
  enum class Kind { kExplicit, kDiscrete, kIndiscrete };
  Kind kind = Kind::kDiscrete;
  SubsetFamily opens;  // kExplicit

  friend bool operator==(const TopologySpec&, const TopologySpec&) = default;
};

struct RelationSpec {
  RuleKind kind = RuleKind::kIntersectionComplement;
  RelationMatrix pairs;  // kExplicit

  friend bool operator==(const RelationSpec&, const RelationSpec&) = default;
};

struct SpaceFile {
  Universe universe = Universe::of_size(1);
  PrimalSpec primal;
  std::optional<TopologySpec> topology;
  RelationSpec relation;

  /// The family the primal spec denotes; not validated.
  [[nodiscard]] SubsetFamily primal_family() const;
  /// The family the topology spec denotes; not validated. Throws InputError if absent.
  [[nodiscard]] SubsetFamily topology_family() const;

  /// Validates every part. Throws InputError naming the failing part.
  [[nodiscard]] Primal build_primal() const;
  [[nodiscard]] std::optional<Topology> build_topology() const;
  [[nodiscard]] Instance build_instance() const;

  friend bool operator==(const SpaceFile&, const SpaceFile&) = default;
};

SpaceFile parse_space_file(const nlohmann::json& j);
/// Reads and parses a file; JSON syntax errors become ParseError prefixed with the path.
SpaceFile load_space_file(const std::string& path);
nlohmann::json emit_space_file(const SpaceFile& s);

/// Explicit description of an instance (rule kinds kept by name).
SpaceFile space_from_instance(const Instance& inst);

/// Subset wire format: sorted label list.
nlohmann::json subset_json(const Universe& u, Subset s);
/// Family wire format: list of subsets ascending by mask.
nlohmann::json family_json(const Universe& u, SubsetFamily f);

}  // namespace proxal::cli
