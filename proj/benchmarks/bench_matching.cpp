#include <benchmark/benchmark.h>

#include "keg/critical.hpp"
#include "keg/fixtures.hpp"
#include "keg/matching.hpp"

namespace {

void BM_Edmonds(benchmark::State& state) {
  keg::Rng rng(keg::kDefaultSeed);
  const auto n = static_cast<std::size_t>(state.range(0));
  const keg::Graph g = keg::random_graph(n, 4.0 / static_cast<double>(n), rng);
  for (auto _ : state) benchmark::DoNotOptimize(keg::maximum_matching(g).size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Edmonds)->RangeMultiplier(2)->Range(32, 1024)->Complexity();

void BM_HopcroftKarp(benchmark::State& state) {
  keg::Rng rng(keg::kDefaultSeed);
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto bg = keg::random_bipartite(side, side, 4.0 / static_cast<double>(side), rng);
  for (auto _ : state) benchmark::DoNotOptimize(keg::maximum_bipartite_matching(bg.graph, bg.left).size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HopcroftKarp)->RangeMultiplier(2)->Range(32, 1024)->Complexity();

void BM_DoubleCover(benchmark::State& state) {
  keg::Rng rng(keg::kDefaultSeed);
  const keg::Graph g = keg::random_graph(static_cast<std::size_t>(state.range(0)), 0.1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(keg::critical_difference(g));
}
BENCHMARK(BM_DoubleCover)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
