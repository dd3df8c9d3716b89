#include "proxal/checker.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "context.hpp"
#include "proxal/search.hpp"
#include "registry.hpp"

namespace proxal {
namespace {

std::string hex(std::uint64_t v, int digits) {
  std::string s(static_cast<std::size_t>(digits), '0');
  for (int i = digits - 1; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = "0123456789abcdef"[v & 0xF];
  return s;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const detail::TheoremDef& def_or_throw(std::string_view id) {
  const detail::TheoremDef* d = detail::find_def(id);
  if (d == nullptr) {
    throw InputError("unknown theorem '" + std::string(id) + "'; valid ids: " + theorem_vocabulary());
  }
  return *d;
}

std::vector<Subset> values_of(const Witness& w) {
  std::vector<Subset> out;
  out.reserve(w.bindings.size());
  for (const auto& b : w.bindings) out.push_back(b.value);
  return out;
}

bool recheck(const detail::TheoremDef& def, const detail::EvalContext& ctx, const TheoremVerdict& v) {
  if (v.outcome != Outcome::kFail || v.witnesses.empty()) return false;
  return std::all_of(v.witnesses.begin(), v.witnesses.end(), [&](const Witness& w) {
    const auto values = values_of(w);
    return detail::evaluate_clause(def, ctx, w.clause, values) == detail::Eval::kViolated;
  });
}

TheoremVerdict minimize(const detail::TheoremDef& def, const detail::EvalContext& ctx,
                        const TheoremVerdict& v) {
  if (v.outcome != Outcome::kFail) {
    throw std::invalid_argument("minimize_witness needs a FAIL verdict");
  }
  TheoremVerdict out = v;
  const std::size_t n = ctx.u->size();
  for (auto& w : out.witnesses) {
    auto values = values_of(w);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (w.bindings[i].point) continue;
        for (std::size_t e = 0; e < n; ++e) {
          if (!values[i].contains(e)) continue;
          const Subset before = values[i];
          values[i] = before - Subset::singleton(e);
          if (detail::evaluate_clause(def, ctx, w.clause, values) == detail::Eval::kViolated) {
            changed = true;
          } else {
            values[i] = before;
          }
        }
      }
    }
    for (std::size_t i = 0; i < values.size(); ++i) w.bindings[i].value = values[i];
  }
  return out;
}

const std::vector<KnownGap>& gap_list() {
  static const std::vector<KnownGap> gaps{
      {"T5.4", "main",
       "◦ need not be extensive, while every closure is; equality fails exactly when some A "
       "is not contained in ◦A.",
       "X = {a,b,c}, P = {A : a ∉ A}, A↪B iff (A∩B)^c ∈ P; A = {b}: cl_τ̂({b}) = {b}, ◦{b} = ∅."},
      {"T5.19", "(1)",
       "cl_τ̂(B) contains B, so an unrelated pair (A, B) with A∩B ≠ ∅ breaks the inclusion; "
       "such pairs exist whenever ◦ is not extensive.",
       "X = {a,b,c}, P = {A : a ∉ A}, A↪B iff (A∩B)^c ∈ P; A = B = {b}."},
      {"C4.12", "main",
       "Unrelatedness is not transitive through a related set.",
       "X = {a,b}, P = 2^X minus {X}, A↪B iff A∩B ≠ ∅; A = {a}, B = {b}, C = {a,b}."},
  };
  return gaps;
}

struct Evaluated {
  TheoremVerdict verdict;
  std::optional<TheoremVerdict> minimized;
  bool audit_ok = true;
  bool not_primal_proximity = false;
};

std::vector<Evaluated> evaluate_instance(const Instance& inst,
                                         const std::vector<const detail::TheoremDef*>& defs) {
  std::vector<Evaluated> out;
  const detail::EvalContext ctx = detail::make_context(inst);
  for (const detail::TheoremDef* def : defs) {
    if (!detail::applies(*def, inst)) continue;
    Evaluated e;
    e.verdict = detail::evaluate(*def, ctx, inst);
    e.not_primal_proximity = def->info.scope == TheoremScope::kPrimalSpace && !ctx.validated;
    if (e.verdict.failed()) {
      e.minimized = minimize(*def, ctx, e.verdict);
      e.audit_ok = recheck(*def, ctx, e.verdict) && recheck(*def, ctx, *e.minimized);
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Instance::Instance(Primal primal, std::optional<Topology> topology, ProximityRelation relation)
    : primal_(std::move(primal)), topology_(std::move(topology)), relation_(std::move(relation)) {
  const Universe& u = primal_.universe();
  if (!(relation_.universe() == u)) throw InputError("relation lives on a different universe");
  if (topology_ && !(topology_->universe() == u)) {
    throw InputError("topology lives on a different universe");
  }
  if (relation_.kind() != RuleKind::kExplicit && relation_.primal_family() != primal_.family()) {
    throw InputError("relation was built from a different primal");
  }
  if (relation_.topology()) {
    if (!topology_) {
      topology_ = relation_.topology();
    } else if (!(*topology_ == *relation_.topology())) {
      throw InputError("relation was built from a different topology");
    }
  }
  relation_ = relation_.materialize();

  std::string canon;
  for (const auto& l : u.labels()) canon += l + ",";
  const int digits = static_cast<int>(std::max<std::uint32_t>(1, u.subset_count() / 4));
  canon += "|" + hex(primal_.family().table(), digits);
  canon += "|" + (topology_ ? hex(topology_->opens().table(), digits) : std::string("-"));
  canon += "|" + std::string(to_string(relation_.kind()));
  if (relation_.kind() == RuleKind::kExplicit) {
    const RelationMatrix m = relation_.matrix();
    for (std::uint32_t a = 0; a < u.subset_count(); ++a) canon += "|" + hex(m.row(Subset{a}), 8);
  }
  id_ = hex(fnv1a(canon), 16);
}

std::span<const TheoremInfo> theorem_registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> v;
    for (const auto& d : detail::theorem_defs()) v.push_back(d.info);
    return v;
  }();
  return infos;
}

const TheoremInfo* find_theorem(std::string_view id) {
  const detail::TheoremDef* d = detail::find_def(id);
  return d == nullptr ? nullptr : &d->info;
}

std::string theorem_vocabulary() {
  std::string out;
  for (const auto& info : theorem_registry()) {
    if (!out.empty()) out += ", ";
    out += info.id;
  }
  return out;
}

TheoremVerdict run_theorem(std::string_view id, const Instance& inst) {
  const auto& def = def_or_throw(id);
  return detail::evaluate(def, detail::make_context(inst), inst);
}

bool recheck_witness(const TheoremVerdict& v, const Instance& inst) {
  return recheck(def_or_throw(v.theorem), detail::make_context(inst), v);
}

TheoremVerdict minimize_witness(const TheoremVerdict& v, const Instance& inst) {
  if (v.outcome != Outcome::kFail) {
    throw std::invalid_argument("minimize_witness needs a FAIL verdict");
  }
  return minimize(def_or_throw(v.theorem), detail::make_context(inst), v);
}

std::span<const KnownGap> known_gaps() { return gap_list(); }

bool is_known_gap(std::string_view theorem, std::string_view clause) {
  const auto& gaps = gap_list();
  return std::any_of(gaps.begin(), gaps.end(), [&](const KnownGap& g) {
    return g.theorem == theorem && g.clause == clause;
  });
}

bool is_expected_failure(const TheoremVerdict& v) {
  return v.failed() && std::all_of(v.witnesses.begin(), v.witnesses.end(), [&](const Witness& w) {
           return is_known_gap(v.theorem, w.clause);
         });
}

std::string_view to_string(TopologySource s) {
  switch (s) {
    case TopologySource::kNone:
      return "none";
    case TopologySource::kTrivial:
      return "trivial";
    case TopologySource::kAll:
      return "all";
  }
  return "none";
}

std::vector<std::string> resolve_theorems(const std::vector<std::string>& ids) {
  if (ids.empty()) throw InputError("no theorems selected");
  std::vector<std::string> out;
  auto add = [&](const std::string& id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  for (const auto& id : ids) {
    if (id == "all") {
      for (const auto& info : theorem_registry()) add(info.id);
    } else {
      def_or_throw(id);
      add(id);
    }
  }
  return out;
}

void validate_config(const SuiteConfig& config) {
  if (config.sizes.empty()) throw InputError("sweep: no universe sizes given");
  bool topological = false;
  for (RuleKind k : config.relations) {
    if (k == RuleKind::kExplicit) {
      throw InputError("sweep: explicit relations come from search= or samples=, not relations=");
    }
    topological = topological || needs_topology(k);
  }
  for (std::size_t n : config.sizes) {
    if (n < 1 || n > kMaxUniverse) {
      throw InputError("sweep: universe size " + std::to_string(n) + " outside 1.." +
                       std::to_string(kMaxUniverse));
    }
    if (topological && config.topologies == TopologySource::kAll && n > 4) {
      throw InputError("sweep: enumerating all topologies supports n <= 4");
    }
  }
  if (config.relations.empty() && config.search_max_n == 0 && config.samples == 0) {
    throw InputError("sweep: no relation sources");
  }
  if (topological && config.topologies == TopologySource::kNone) {
    throw InputError("sweep: topological relation kinds need topologies=trivial or topologies=all");
  }
  if (config.search_max_n > 2) throw InputError("sweep: exhaustive relation search supports n <= 2");
  if (config.samples > 0 &&
      std::find(config.sizes.begin(), config.sizes.end(), 3) == config.sizes.end()) {
    throw InputError("sweep: samples= needs n = 3 among the sizes");
  }
  if (config.jobs == 0) throw InputError("sweep: jobs must be at least 1");
  resolve_theorems(config.theorems);
}

std::vector<Instance> build_instances(const SuiteConfig& config) {
  std::vector<Instance> out;
  for (std::size_t n : config.sizes) {
    const Universe u = Universe::of_size(n);
    const std::vector<Primal> primals = enumerate_primals(u);

    for (const Primal& p : primals) {
      for (RuleKind k : config.relations) {
        if (!needs_topology(k)) out.emplace_back(p, std::nullopt, make_relation(k, p, std::nullopt));
      }
    }

    std::vector<Topology> topologies;
    if (config.topologies == TopologySource::kAll) {
      topologies = enumerate_topologies(u);
    } else if (config.topologies == TopologySource::kTrivial) {
      topologies.push_back(Topology::discrete(u));
      if (n > 1) topologies.push_back(Topology::indiscrete(u));
    }
    for (const Topology& t : topologies) {
      for (const Primal& p : primals) {
        for (RuleKind k : config.relations) {
          if (needs_topology(k)) out.emplace_back(p, t, make_relation(k, p, t));
        }
      }
    }

    if (n <= config.search_max_n) {
      for (const Primal& p : primals) {
        for (auto& r : exhaustive_relation_search(u, p)) out.emplace_back(p, std::nullopt, std::move(r));
      }
    }
    if (n == 3 && config.samples > 0) {
      for (std::size_t i = 0; i < primals.size(); ++i) {
        for (auto& r : random_relation_sample(u, primals[i], config.samples, config.seed + i)) {
          out.emplace_back(primals[i], std::nullopt, std::move(r));
        }
      }
    }
  }
  return out;
}

std::size_t SuiteReport::unexpected_failures() const {
  return static_cast<std::size_t>(std::count_if(
      failures.begin(), failures.end(), [](const FailureEntry& f) { return !f.expected; }));
}

SuiteReport run_instances(const std::vector<Instance>& instances,
                          const std::vector<std::string>& theorems, std::size_t jobs,
                          bool keep_verdicts) {
  SuiteReport report;
  report.theorems = resolve_theorems(theorems);
  std::vector<const detail::TheoremDef*> defs;
  for (const auto& id : report.theorems) {
    defs.push_back(&def_or_throw(id));
    report.tallies[id] = TheoremTally{};
  }

  std::vector<std::vector<Evaluated>> results(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      results[i] = evaluate_instance(instances[i], defs);
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, instances.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  report.instances = instances.size();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (auto& e : results[i]) {
      ++report.evaluations;
      TheoremTally& tally = report.tallies[e.verdict.theorem];
      if (e.not_primal_proximity) ++tally.not_primal_proximity;
      switch (e.verdict.outcome) {
        case Outcome::kPass:
          ++tally.pass;
          break;
        case Outcome::kVacuous:
          ++tally.vacuous;
          break;
        case Outcome::kFail: {
          const bool expected = is_expected_failure(e.verdict);
          ++(expected ? tally.expected_fail : tally.fail);
          ++report.audited;
          if (!e.audit_ok) ++report.audit_discrepancies;
          report.failures.push_back(FailureEntry{instances[i], *e.minimized, e.verdict, expected});
          break;
        }
      }
      if (keep_verdicts) report.verdicts.push_back(std::move(e.verdict));
    }
  }
  return report;
}

SuiteReport run_suite(const SuiteConfig& config) {
  validate_config(config);
  const auto start = std::chrono::steady_clock::now();
  const auto instances = build_instances(config);
  SuiteReport report = run_instances(instances, config.theorems, config.jobs, false);
  report.config = config;
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace proxal
