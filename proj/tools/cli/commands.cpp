#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "proxal/operators.hpp"
#include "report.hpp"
#include "space_file.hpp"

namespace proxal::cli {
namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, std::string_view seps) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = s.find_first_of(seps, start);
    const std::string item = trim(s.substr(start, end == std::string_view::npos ? s.npos : end - start));
    if (!item.empty()) out.push_back(item);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::uint64_t parse_count(const std::string& value, const std::string& what) {
  std::uint64_t v = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw InputError(what + ": expected a non-negative integer, got '" + value + "'");
  return v;
}

std::size_t resolve_jobs(const std::optional<std::size_t>& flag, const char* env) {
  if (flag) {
    if (*flag == 0) throw InputError("--jobs must be at least 1");
    return *flag;
  }
  if (env != nullptr && *env != '\0') {
    const auto v = parse_count(env, "PROXAL_JOBS");
    if (v == 0) throw InputError("PROXAL_JOBS must be at least 1");
    return static_cast<std::size_t>(v);
  }
  return 1;
}

Subset parse_set_flag(const Universe& u, const std::string& text) {
  const auto labels = split(text, ",");
  try {
    return u.encode(labels);
  } catch (const InputError& e) {
    throw InputError(std::string("--set: ") + e.what());
  }
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_check(const std::string& target, const std::string& file, bool as_json, std::ostream& out) {
  const SpaceFile s = load_space_file(file);
  const Universe& u = s.universe;
  if (target == "proximity") {
    const Instance inst = s.build_instance();
    const AxiomReport r = check_primal_proximity(inst.relation(), inst.primal());
    if (as_json) {
      json j = axiom_report_json(u, r);
      j["check"] = "proximity";
      print_json(out, j);
    } else {
      out << "primal-proximity axioms (" << to_string(inst.relation().kind()) << "):\n"
          << axiom_report_text(u, r);
    }
    return r.passed() ? kExitOk : kExitFail;
  }

  const bool primal = target == "primal";
  const SubsetFamily f = primal ? s.primal_family() : s.topology_family();
  const Verdict v = primal ? check_primal(u, f) : check_topology(u, f);
  const bool degenerate = primal && v.passed() && f.empty();
  if (as_json) {
    json j = verdict_json(u, v);
    j["check"] = target;
    if (primal) j["degenerate"] = degenerate;
    print_json(out, j);
  } else {
    out << target << ": " << verdict_text(u, v) << "\n";
    if (degenerate) out << "note: degenerate primal (empty family)\n";
  }
  return v.passed() ? kExitOk : kExitFail;
}

int cmd_op(const std::string& op, const std::string& file, const std::optional<std::string>& set,
           bool all, bool as_json, std::ostream& out) {
  if (set.has_value() == all) throw InputError("op: give exactly one of --set or --all");
  const SpaceFile s = load_space_file(file);
  const Universe& u = s.universe;

  std::optional<ClosureMap> map;
  if (op == "point-primal" || op == "cl-star") {
    const Instance inst = s.build_instance();
    map = op == "point-primal" ? point_primal_map(inst.relation()) : cl_star_map(inst.relation());
  } else {
    const auto t = s.build_topology();
    if (!t) throw InputError("$.topology: missing (" + op + " needs a topology)");
    const Primal p = s.build_primal();
    map = op == "local-function" ? local_function_map(*t, p) : cl_diamond_map(*t, p);
  }

  if (set) {
    out << subset_json(u, (*map)(parse_set_flag(u, *set))).dump() << "\n";
    return kExitOk;
  }
  if (as_json) {
    json table = json::array();
    for (const Subset& image : map->table()) table.push_back(subset_json(u, image));
    print_json(out, table);
  } else {
    for (std::uint32_t m = 0; m < u.subset_count(); ++m) {
      out << subset_json(u, Subset{m}).dump() << " -> " << subset_json(u, (*map)(Subset{m})).dump()
          << "\n";
    }
  }
  return kExitOk;
}

int cmd_derive(const std::string& target, const std::string& file, bool as_json,
               std::ostream& out) {
  const SpaceFile s = load_space_file(file);
  const Universe& u = s.universe;
  SubsetFamily opens;
  std::optional<Verdict> kuratowski;
  if (target == "tau-diamond") {
    const auto t = s.build_topology();
    if (!t) throw InputError("$.topology: missing (tau-diamond needs a topology)");
    const Primal p = s.build_primal();
    opens = tau_diamond_family(*t, p);
    kuratowski = check_kuratowski(cl_diamond_map(*t, p));
  } else {
    const Instance inst = s.build_instance();
    if (target == "tau-hat") {
      opens = tau_hat_family(inst.relation());
    } else {
      opens = tau_star_family(inst.relation());
      kuratowski = check_kuratowski(cl_star_map(inst.relation()));
    }
  }
  const Verdict topology = check_topology(u, opens);

  if (as_json) {
    json j{{"target", target}, {"opens", family_json(u, opens)}, {"topology", verdict_json(u, topology)}};
    if (kuratowski) j["kuratowski"] = verdict_json(u, *kuratowski);
    print_json(out, j);
  } else {
    out << target << ": " << opens.size() << " open sets\n";
    for (Subset m : opens.members()) out << "  " << subset_json(u, m).dump() << "\n";
    out << "topology: " << verdict_text(u, topology) << "\n";
    if (kuratowski) out << "kuratowski: " << verdict_text(u, *kuratowski) << "\n";
  }
  const bool ok = topology.passed() && (!kuratowski || kuratowski->passed());
  return ok ? kExitOk : kExitFail;
}

int cmd_verify(const std::optional<std::string>& file, const std::optional<std::string>& sweep,
               const std::string& theorems, std::size_t jobs, std::uint64_t seed, bool as_json,
               std::ostream& out) {
  if (file.has_value() == sweep.has_value()) {
    throw InputError("verify: give either a space file or --sweep, not both or neither");
  }
  const auto ids = split(theorems, ",");
  SuiteReport report;
  if (file) {
    const SpaceFile s = load_space_file(*file);
    const Instance inst = s.build_instance();
    report = run_instances({inst}, ids, jobs, true);
    if (as_json) {
      json j = suite_json(report, false, &inst.universe());
      j["space"] = emit_space_file(s);
      print_json(out, j);
    } else {
      out << instance_report_text(inst, report);
    }
  } else {
    SuiteConfig config = parse_sweep(*sweep);
    config.theorems = ids;
    config.jobs = jobs;
    config.seed = seed;
    report = run_suite(config);
    if (as_json) {
      print_json(out, suite_json(report, true));
    } else {
      out << suite_text(report);
    }
  }
  return report.unexpected_failures() == 0 && report.audit_discrepancies == 0 ? kExitOk
                                                                              : kExitFail;
}

}  // namespace

SuiteConfig parse_sweep(const std::string& text) {
  SuiteConfig c;
  c.relations.assign(kAllRuleKinds.begin() + 1, kAllRuleKinds.end());
  bool have_n = false;
  bool listed_relations = false;
  for (const auto& item : split(text, "; \t")) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("sweep: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "n") {
      const auto parts = split(value, ",");
      if (parts.empty()) throw InputError("sweep: n needs a value");
      c.sizes.clear();
      if (parts.size() == 1) {
        const auto k = parse_count(parts[0], "sweep n");
        for (std::uint64_t i = 1; i <= k; ++i) c.sizes.push_back(static_cast<std::size_t>(i));
      } else {
        for (const auto& p : parts) c.sizes.push_back(static_cast<std::size_t>(parse_count(p, "sweep n")));
      }
      have_n = true;
    } else if (key == "relations") {
      listed_relations = true;
      c.relations.clear();
      for (const auto& name : split(value, ",")) {
        if (name == "all") {
          c.relations.assign(kAllRuleKinds.begin() + 1, kAllRuleKinds.end());
          continue;
        }
        const auto k = parse_rule_kind(name);
        if (!k) throw InputError("sweep: unknown relation kind '" + name + "'");
        c.relations.push_back(*k);
      }
    } else if (key == "topologies") {
      if (value == "none") {
        c.topologies = TopologySource::kNone;
      } else if (value == "trivial") {
        c.topologies = TopologySource::kTrivial;
      } else if (value == "all") {
        c.topologies = TopologySource::kAll;
      } else {
        throw InputError("sweep: topologies must be none, trivial or all");
      }
    } else if (key == "search") {
      c.search_max_n = static_cast<std::size_t>(parse_count(value, "sweep search"));
    } else if (key == "samples") {
      c.samples = static_cast<std::size_t>(parse_count(value, "sweep samples"));
    } else {
      throw InputError("sweep: unknown key '" + key +
                       "' (expected n, relations, topologies, search, samples)");
    }
  }
  if (!have_n) throw InputError("sweep: missing n=");
  if (c.topologies == TopologySource::kNone && !listed_relations) {
    // The default relation list shrinks to the kinds that need no topology.
    c.relations.erase(std::remove_if(c.relations.begin(), c.relations.end(), needs_topology),
                      c.relations.end());
  }
  return c;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* jobs_env) {
  CLI::App app{"Finite-model checker for primal-proximity spaces", "proxal"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string target;
  std::string file;
  auto* check = app.add_subcommand("check", "Check primal, proximity or topology axioms");
  check->add_option("target", target)->required()->check(CLI::IsMember({"primal", "proximity", "topology"}));
  check->add_option("file", file)->required();
  add_format(check);

  std::string op;
  std::optional<std::string> set;
  bool all = false;
  auto* opcmd = app.add_subcommand("op", "Apply a closure-type operator");
  opcmd->add_option("operator", op)
      ->required()
      ->check(CLI::IsMember({"point-primal", "cl-star", "local-function", "cl-diamond"}));
  opcmd->add_option("file", file)->required();
  opcmd->add_option("--set", set, "Comma-separated labels; empty for the empty set");
  opcmd->add_flag("--all", all, "Print the full table indexed by subset mask");
  add_format(opcmd);

  auto* derive = app.add_subcommand("derive", "Derive an induced topology");
  derive->add_option("target", target)->required()->check(CLI::IsMember({"tau-hat", "tau-star", "tau-diamond"}));
  derive->add_option("file", file)->required();
  add_format(derive);

  std::optional<std::string> verify_file;
  std::optional<std::string> sweep;
  std::string theorems = "all";
  std::optional<std::size_t> jobs;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Run registry theorems on a file or a sweep");
  verify->add_option("file", verify_file);
  verify->add_option("--sweep", sweep, "Sweep configuration, e.g. n=3;relations=all;search=2");
  verify->add_option("--theorems", theorems, "Comma-separated theorem ids, or all");
  verify->add_option("--jobs", jobs, "Worker threads (default: PROXAL_JOBS or 1)");
  verify->add_option("--seed", seed, "Seed for sampled relations");
  add_format(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  const bool as_json = format == "json";
  try {
    if (check->parsed()) return cmd_check(target, file, as_json, out);
    if (opcmd->parsed()) return cmd_op(op, file, set, all, as_json, out);
    if (derive->parsed()) return cmd_derive(target, file, as_json, out);
    return cmd_verify(verify_file, sweep, theorems, resolve_jobs(jobs, jobs_env), seed, as_json,
                      out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const SizeCapError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace proxal::cli
