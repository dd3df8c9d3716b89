#include "space_file.hpp"

#include <fstream>
#include <sstream>

namespace proxal::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
  throw ParseError(path + ": " + reason);
}

void expect_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) fail(path + "." + key, "unknown key");
  }
}

const json& require(const json& j, const std::string& path, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing '") + key + "'");
  return *it;
}

std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Subset parse_subset(const Universe& u, const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list of labels");
  Subset s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string item = path + "[" + std::to_string(i) + "]";
    const std::string label = require_string(j[i], item);
    const auto idx = u.index_of(label);
    if (!idx) fail(item, "unknown label '" + label + "'");
    if (s.contains(*idx)) fail(item, "duplicate label '" + label + "'");
    s = s | Subset::singleton(*idx);
  }
  return s;
}

SubsetFamily parse_family(const Universe& u, const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list of sets");
  SubsetFamily f;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string item = path + "[" + std::to_string(i) + "]";
    const Subset s = parse_subset(u, j[i], item);
    if (f.contains(s)) fail(item, "duplicate set");
    f.insert(s);
  }
  return f;
}

std::size_t parse_element(const Universe& u, const json& j, const std::string& path) {
  const std::string label = require_string(j, path);
  const auto idx = u.index_of(label);
  if (!idx) fail(path, "unknown label '" + label + "'");
  return *idx;
}

Universe parse_universe(const json& j) {
  if (!j.is_array()) fail("$.universe", "expected a list of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < j.size(); ++i) {
    labels.push_back(require_string(j[i], "$.universe[" + std::to_string(i) + "]"));
  }
  try {
    return Universe(std::move(labels));
  } catch (const std::exception& e) {
    fail("$.universe", e.what());
  }
}

PrimalSpec parse_primal(const Universe& u, const json& j) {
  const std::string path = "$.primal";
  expect_keys(j, path, {"kind", "sets", "element"});
  const std::string kind = require_string(require(j, path, "kind"), path + ".kind");
  PrimalSpec p;
  if (kind == "explicit") {
    p.kind = PrimalSpec::Kind::kExplicit;
    p.sets = parse_family(u, require(j, path, "sets"), path + ".sets");
  } else if (kind == "maximal") {
    p.kind = PrimalSpec::Kind::kMaximal;
  } else if (kind == "principal") {
    p.kind = PrimalSpec::Kind::kPrincipal;
    p.element = parse_element(u, require(j, path, "element"), path + ".element");
  } else if (kind == "empty") {
    p.kind = PrimalSpec::Kind::kEmpty;
  } else {
    fail(path + ".kind", "unknown primal kind '" + kind +
                             "' (expected explicit, maximal, principal or empty)");
  }
  return p;
}

TopologySpec parse_topology(const Universe& u, const json& j) {
  const std::string path = "$.topology";
  expect_keys(j, path, {"kind", "opens"});
  const std::string kind = require_string(require(j, path, "kind"), path + ".kind");
  TopologySpec t;
  if (kind == "explicit") {
    t.kind = TopologySpec::Kind::kExplicit;
    t.opens = parse_family(u, require(j, path, "opens"), path + ".opens");
  } else if (kind == "discrete") {
    t.kind = TopologySpec::Kind::kDiscrete;
  } else if (kind == "indiscrete") {
    t.kind = TopologySpec::Kind::kIndiscrete;
  } else {
    fail(path + ".kind",
         "unknown topology kind '" + kind + "' (expected explicit, discrete or indiscrete)");
  }
  return t;
}

RelationSpec parse_relation(const Universe& u, const json& j) {
  const std::string path = "$.relation";
  expect_keys(j, path, {"kind", "pairs"});
  const std::string kind = require_string(require(j, path, "kind"), path + ".kind");
  const auto k = parse_rule_kind(kind);
  if (!k) fail(path + ".kind", "unknown relation kind '" + kind + "'");
  RelationSpec r;
  r.kind = *k;
  if (*k == RuleKind::kExplicit) {
    const json& pairs = require(j, path, "pairs");
    const std::string ppath = path + ".pairs";
    if (!pairs.is_array()) fail(ppath, "expected a list of [A, B] pairs");
    r.pairs = RelationMatrix(u);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string item = ppath + "[" + std::to_string(i) + "]";
      if (!pairs[i].is_array() || pairs[i].size() != 2) fail(item, "expected a pair [A, B]");
      const Subset a = parse_subset(u, pairs[i][0], item + "[0]");
      const Subset b = parse_subset(u, pairs[i][1], item + "[1]");
      if (r.pairs.get(a, b)) fail(item, "duplicate pair");
      r.pairs.set(a, b);
    }
  } else if (j.contains("pairs")) {
    fail(path + ".pairs", "pairs are only allowed for explicit relations");
  }
  return r;
}

}  // namespace

json subset_json(const Universe& u, Subset s) { return u.decode(s); }

json family_json(const Universe& u, SubsetFamily f) {
  json out = json::array();
  for (Subset s : f.members()) out.push_back(subset_json(u, s));
  return out;
}

SpaceFile parse_space_file(const json& j) {
  expect_keys(j, "$", {"universe", "primal", "topology", "relation"});
  SpaceFile s;
  s.universe = parse_universe(require(j, "$", "universe"));
  s.primal = parse_primal(s.universe, require(j, "$", "primal"));
  if (j.contains("topology")) s.topology = parse_topology(s.universe, j.at("topology"));
  s.relation = parse_relation(s.universe, require(j, "$", "relation"));
  return s;
}

SpaceFile load_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
  try {
    return parse_space_file(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json emit_space_file(const SpaceFile& s) {
  const Universe& u = s.universe;
  json j;
  j["universe"] = u.labels();

  json p;
  switch (s.primal.kind) {
    case PrimalSpec::Kind::kExplicit:
      p["kind"] = "explicit";
      p["sets"] = family_json(u, s.primal.sets);
      break;
    case PrimalSpec::Kind::kMaximal:
      p["kind"] = "maximal";
      break;
    case PrimalSpec::Kind::kPrincipal:
      p["kind"] = "principal";
      p["element"] = u.labels()[s.primal.element];
      break;
    case PrimalSpec::Kind::kEmpty:
      p["kind"] = "empty";
      break;
  }
  j["primal"] = p;

  if (s.topology) {
    json t;
    switch (s.topology->kind) {
      case TopologySpec::Kind::kExplicit:
        t["kind"] = "explicit";
        t["opens"] = family_json(u, s.topology->opens);
        break;
      case TopologySpec::Kind::kDiscrete:
        t["kind"] = "discrete";
        break;
      case TopologySpec::Kind::kIndiscrete:
        t["kind"] = "indiscrete";
        break;
    }
    j["topology"] = t;
  }

  json r;
  r["kind"] = std::string(to_string(s.relation.kind));
  if (s.relation.kind == RuleKind::kExplicit) {
    json pairs = json::array();
    for (const auto& [a, b] : s.relation.pairs.pairs()) {
      pairs.push_back(json::array({subset_json(u, a), subset_json(u, b)}));
    }
    r["pairs"] = pairs;
  }
  j["relation"] = r;
  return j;
}

SubsetFamily SpaceFile::primal_family() const {
  switch (primal.kind) {
    case PrimalSpec::Kind::kExplicit:
      return primal.sets;
    case PrimalSpec::Kind::kMaximal:
      return mk_maximal(universe).family();
    case PrimalSpec::Kind::kPrincipal:
      return mk_principal(universe, primal.element).family();
    case PrimalSpec::Kind::kEmpty:
      return SubsetFamily{};
  }
  return SubsetFamily{};
}

SubsetFamily SpaceFile::topology_family() const {
  if (!topology) throw InputError("$.topology: missing (this command needs a topology)");
  switch (topology->kind) {
    case TopologySpec::Kind::kExplicit:
      return topology->opens;
    case TopologySpec::Kind::kDiscrete:
      return Topology::discrete(universe).opens();
    case TopologySpec::Kind::kIndiscrete:
      return Topology::indiscrete(universe).opens();
  }
  return SubsetFamily{};
}

Primal SpaceFile::build_primal() const {
  try {
    return Primal::validate(universe, primal_family());
  } catch (const InputError& e) {
    throw InputError(std::string("$.primal: ") + e.what());
  }
}

std::optional<Topology> SpaceFile::build_topology() const {
  if (!topology) return std::nullopt;
  try {
    return Topology::validate(universe, topology_family());
  } catch (const InputError& e) {
    throw InputError(std::string("$.topology: ") + e.what());
  }
}

Instance SpaceFile::build_instance() const {
  const Primal p = build_primal();
  const auto t = build_topology();
  if (relation.kind == RuleKind::kExplicit) {
    return Instance(p, t, ProximityRelation::explicit_relation(universe, relation.pairs));
  }
  try {
    return Instance(p, t, make_relation(relation.kind, p, t));
  } catch (const InputError& e) {
    throw InputError(std::string("$.relation: ") + e.what());
  }
}

SpaceFile space_from_instance(const Instance& inst) {
  SpaceFile s;
  s.universe = inst.universe();
  const Primal& p = inst.primal();
  if (p.degenerate()) {
    s.primal.kind = PrimalSpec::Kind::kEmpty;
  } else if (p.maximal()) {
    s.primal.kind = PrimalSpec::Kind::kMaximal;
  } else {
    s.primal.kind = PrimalSpec::Kind::kExplicit;
    s.primal.sets = p.family();
  }
  if (inst.topology()) {
    s.topology = TopologySpec{TopologySpec::Kind::kExplicit, inst.topology()->opens()};
  }
  s.relation.kind = inst.relation().kind();
  if (s.relation.kind == RuleKind::kExplicit) s.relation.pairs = inst.relation().matrix();
  return s;
}

}  // namespace proxal::cli
