#include <benchmark/benchmark.h>

#include "proxal/checker.hpp"
#include "proxal/operators.hpp"
#include "proxal/search.hpp"

using namespace proxal;

static void BM_EnumeratePrimalsBrute(benchmark::State& state) {
  const auto u = Universe::of_size(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_primals_brute(u));
}
BENCHMARK(BM_EnumeratePrimalsBrute)->DenseRange(2, 4);

static void BM_EnumeratePrimalsDownsets(benchmark::State& state) {
  const auto u = Universe::of_size(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_primals_downsets(u));
}
BENCHMARK(BM_EnumeratePrimalsDownsets)->DenseRange(2, 5);

static void BM_EnumerateTopologies(benchmark::State& state) {
  const auto u = Universe::of_size(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_topologies(u));
}
BENCHMARK(BM_EnumerateTopologies)->DenseRange(2, 4);

static void BM_CheckPrimalProximity(benchmark::State& state) {
  const auto u = Universe::of_size(static_cast<std::size_t>(state.range(0)));
  const auto p = mk_maximal(u);
  const auto r = from_intersection_complement(p).materialize();
  for (auto _ : state) benchmark::DoNotOptimize(check_primal_proximity(r, p));
}
BENCHMARK(BM_CheckPrimalProximity)->DenseRange(2, 4);

static void BM_ExhaustiveRelationSearch(benchmark::State& state) {
  const auto u = Universe::of_size(2);
  const auto p = mk_maximal(u);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_relation_search(u, p));
}
BENCHMARK(BM_ExhaustiveRelationSearch)->Unit(benchmark::kMillisecond);

static void BM_RandomRelationSample(benchmark::State& state) {
  const auto u = Universe::of_size(3);
  const auto p = mk_maximal(u);
  for (auto _ : state) benchmark::DoNotOptimize(random_relation_sample(u, p, 50, 1));
}
BENCHMARK(BM_RandomRelationSample)->Unit(benchmark::kMillisecond);

static void BM_ClStarKuratowski(benchmark::State& state) {
  const auto u = Universe::of_size(static_cast<std::size_t>(state.range(0)));
  const auto r = from_double_complement(mk_principal(u, std::size_t{0})).materialize();
  for (auto _ : state) benchmark::DoNotOptimize(check_kuratowski(cl_star_map(r)));
}
BENCHMARK(BM_ClStarKuratowski)->DenseRange(2, 5);

static void BM_Sweep(benchmark::State& state) {
  SuiteConfig c;
  for (std::size_t n = 1; n <= static_cast<std::size_t>(state.range(0)); ++n) c.sizes.push_back(n);
  c.relations = {RuleKind::kDoubleComplement, RuleKind::kIntersectionComplement,
                 RuleKind::kClosureOverlap,   RuleKind::kPointClosure,
                 RuleKind::kPointDiamond,     RuleKind::kDiamondOverlap};
  c.topologies = TopologySource::kAll;
  c.theorems = {"all"};
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(c));
}
BENCHMARK(BM_Sweep)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
