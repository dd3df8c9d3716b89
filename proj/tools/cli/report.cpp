#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "space_file.hpp"

namespace proxal::cli {
namespace {

using nlohmann::json;

json tally_json(const TheoremTally& t) {
  return json{{"pass", t.pass},
              {"fail", t.fail},
              {"expected_fail", t.expected_fail},
              {"vacuous", t.vacuous},
              {"not_primal_proximity", t.not_primal_proximity}};
}

json witnesses_json(const Universe& u, const std::vector<Witness>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(witness_json(u, w));
  return out;
}

json config_json(const SuiteConfig& c) {
  json relations = json::array();
  for (RuleKind k : c.relations) relations.push_back(std::string(to_string(k)));
  return json{{"sizes", c.sizes},
              {"relations", relations},
              {"topologies", std::string(to_string(c.topologies))},
              {"search", c.search_max_n},
              {"samples", c.samples},
              {"seed", c.seed}};
}

const TheoremInfo& info_of(const std::string& id) { return *find_theorem(id); }

std::string witness_lines(const Universe& u, const std::vector<Witness>& ws, const char* indent) {
  std::string out;
  for (const auto& w : ws) out += indent + w.format(u) + "\n";
  return out;
}

}  // namespace

json witness_json(const Universe& u, const Witness& w) {
  json bindings = json::object();
  for (const auto& b : w.bindings) bindings[b.name] = subset_json(u, b.value);
  json order = json::array();
  for (const auto& b : w.bindings) order.push_back(b.name);
  return json{{"clause", w.clause}, {"bindings", bindings}, {"order", order}};
}

json verdict_json(const Universe& u, const Verdict& v) {
  json j{{"outcome", std::string(to_string(v.outcome))}};
  if (v.witness) j["witness"] = witness_json(u, *v.witness);
  return j;
}

json axiom_report_json(const Universe& u, const AxiomReport& r) {
  json axioms = json::array();
  for (std::size_t i = 0; i < r.axioms.size(); ++i) {
    json a = verdict_json(u, r.axioms[i]);
    a["axiom"] = i + 1;
    axioms.push_back(a);
  }
  return json{{"axioms", axioms}, {"outcome", r.passed() ? "PASS" : "FAIL"}};
}

json theorem_verdict_json(const Universe& u, const TheoremVerdict& v) {
  json j{{"theorem", v.theorem},
         {"outcome", std::string(to_string(v.outcome))},
         {"instance", v.instance_id},
         {"witnesses", witnesses_json(u, v.witnesses)}};
  if (!v.note.empty()) j["note"] = v.note;
  if (v.failed()) j["expected"] = is_expected_failure(v);
  return j;
}

json suite_json(const SuiteReport& r, bool with_config, const Universe* verdict_universe) {
  json tallies = json::object();
  for (const auto& [id, t] : r.tallies) tallies[id] = tally_json(t);

  json failures = json::array();
  for (const auto& f : r.failures) {
    const Universe& u = f.instance.universe();
    failures.push_back(json{{"theorem", f.verdict.theorem},
                            {"expected", f.expected},
                            {"instance", f.instance.id()},
                            {"space", emit_space_file(space_from_instance(f.instance))},
                            {"witnesses", witnesses_json(u, f.verdict.witnesses)},
                            {"raw_witnesses", witnesses_json(u, f.raw.witnesses)}});
  }

  json j{{"theorems", r.theorems},
         {"tallies", tallies},
         {"failures", failures},
         {"instances", r.instances},
         {"evaluations", r.evaluations},
         {"unexpected_failures", r.unexpected_failures()},
         {"audit", json{{"audited", r.audited}, {"discrepancies", r.audit_discrepancies}}}};
  if (with_config) j["config"] = config_json(r.config);
  if (verdict_universe != nullptr) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(theorem_verdict_json(*verdict_universe, v));
    j["verdicts"] = verdicts;
  }
  return j;
}

std::string verdict_text(const Universe& u, const Verdict& v) {
  std::string out(to_string(v.outcome));
  if (v.witness) out += "  " + v.witness->format(u);
  return out;
}

std::string axiom_report_text(const Universe& u, const AxiomReport& r) {
  std::string out;
  for (std::size_t i = 0; i < r.axioms.size(); ++i) {
    out += "  (" + std::to_string(i + 1) + ") " + verdict_text(u, r.axioms[i]) + "\n";
  }
  out += std::string("result: ") + (r.passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string instance_report_text(const Instance& inst, const SuiteReport& r) {
  const Universe& u = inst.universe();
  std::ostringstream os;
  os << "instance " << inst.id() << "\n";
  for (const auto& v : r.verdicts) {
    std::string outcome(to_string(v.outcome));
    if (v.failed() && is_expected_failure(v)) outcome += " (known gap)";
    os << std::left << std::setw(7) << v.theorem << std::setw(18) << outcome
       << info_of(v.theorem).statement << "\n";
    if (!v.note.empty()) os << "         " << v.note << "\n";
    for (const auto& f : r.failures) {
      if (f.verdict.theorem == v.theorem) os << witness_lines(u, f.verdict.witnesses, "         ");
    }
  }
  os << "summary: " << r.theorems.size() << " theorems, " << r.unexpected_failures()
     << " unexpected failures, " << r.audited << " failures audited, " << r.audit_discrepancies
     << " discrepancies\n";
  return os.str();
}

std::string suite_text(const SuiteReport& r) {
  std::ostringstream os;
  const auto& c = r.config;
  os << "sweep: sizes";
  for (std::size_t n : c.sizes) os << ' ' << n;
  os << "; relations";
  for (RuleKind k : c.relations) os << ' ' << to_string(k);
  os << "; topologies " << to_string(c.topologies) << "; search " << c.search_max_n
     << "; samples " << c.samples << "; seed " << c.seed << "\n";
  os << "instances " << r.instances << ", evaluations " << r.evaluations << "\n\n";
  os << std::left << std::setw(8) << "theorem" << std::right << std::setw(8) << "pass"
     << std::setw(8) << "fail" << std::setw(10) << "expected" << std::setw(9) << "vacuous"
     << std::setw(10) << "not-prox" << "\n";
  for (const auto& id : r.theorems) {
    const TheoremTally& t = r.tallies.at(id);
    os << std::left << std::setw(8) << id << std::right << std::setw(8) << t.pass
       << std::setw(8) << t.fail << std::setw(10) << t.expected_fail << std::setw(9)
       << t.vacuous << std::setw(10) << t.not_primal_proximity << "\n";
  }

  // Every unexpected failure; the first expected one per theorem as a sample.
  std::vector<std::string> sampled;
  bool header = false;
  for (const auto& f : r.failures) {
    if (f.expected) {
      if (std::find(sampled.begin(), sampled.end(), f.verdict.theorem) != sampled.end()) continue;
      sampled.push_back(f.verdict.theorem);
    }
    if (!header) {
      os << "\nfailures:\n";
      header = true;
    }
    const SpaceFile s = space_from_instance(f.instance);
    os << "  " << f.verdict.theorem << (f.expected ? " (known gap; first instance shown)" : "")
       << " on " << f.instance.id() << " " << emit_space_file(s).dump() << "\n";
    os << witness_lines(f.instance.universe(), f.verdict.witnesses, "    ");
  }
  os << "\nunexpected failures: " << r.unexpected_failures() << "\n";
  os << "audit: " << r.audited << " failures re-checked, " << r.audit_discrepancies
     << " discrepancies\n";
  return os.str();
}

}  // namespace proxal::cli
