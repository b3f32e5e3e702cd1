#include <benchmark/benchmark.h>

#include "keg/critical.hpp"
#include "keg/fixtures.hpp"
#include "keg/koenig.hpp"

namespace {

void BM_MaxCriticalSet(benchmark::State& state) {
  keg::Rng rng(keg::kDefaultSeed);
  const auto n = static_cast<std::size_t>(state.range(0));
  const keg::Graph g = keg::random_graph(n, 3.0 / static_cast<double>(n), rng);
  for (auto _ : state) benchmark::DoNotOptimize(keg::max_critical_independent_set(g).set.size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxCriticalSet)->RangeMultiplier(2)->Range(25, 400)->Complexity();

void BM_RecognizeBipartite(benchmark::State& state) {
  keg::Rng rng(keg::kDefaultSeed);
  const auto side = static_cast<std::size_t>(state.range(0));
  const keg::Graph g = keg::random_bipartite(side, side, 3.0 / static_cast<double>(side), rng).graph;
  for (auto _ : state) benchmark::DoNotOptimize(keg::recognize_ke(g).is_ke);
}
BENCHMARK(BM_RecognizeBipartite)->Arg(25)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
