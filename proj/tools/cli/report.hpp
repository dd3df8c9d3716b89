#pragma once

// JSON and text renderings of verdicts and suite reports. JSON objects use
// sorted keys and subsets are label lists, so equal inputs give equal bytes.

#include <string>

#include <nlohmann/json.hpp>

#include "proxal/checker.hpp"

namespace proxal::cli {

nlohmann::json witness_json(const Universe& u, const Witness& w);
nlohmann::json verdict_json(const Universe& u, const Verdict& v);
nlohmann::json axiom_report_json(const Universe& u, const AxiomReport& r);
nlohmann::json theorem_verdict_json(const Universe& u, const TheoremVerdict& v);
/// Wall time and job count are left out so reports compare byte for byte.
/// Kept verdicts are rendered when verdict_universe is given.
nlohmann::json suite_json(const SuiteReport& r, bool with_config,
                          const Universe* verdict_universe = nullptr);

std::string verdict_text(const Universe& u, const Verdict& v);
std::string axiom_report_text(const Universe& u, const AxiomReport& r);
/// Single-instance report: one block per theorem.
std::string instance_report_text(const Instance& inst, const SuiteReport& r);
std::string suite_text(const SuiteReport& r);

}  // namespace proxal::cli
