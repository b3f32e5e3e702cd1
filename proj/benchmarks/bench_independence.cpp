#include <benchmark/benchmark.h>

#include "keg/fixtures.hpp"
#include "keg/independence.hpp"

namespace {

// range(0) = n, range(1) = edge probability in percent
void BM_Alpha(benchmark::State& state) {
  keg::Rng rng(keg::kDefaultSeed);
  const keg::Graph g = keg::random_graph(static_cast<std::size_t>(state.range(0)),
                                         static_cast<double>(state.range(1)) / 100.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(keg::alpha(g).size);
}
BENCHMARK(BM_Alpha)->Args({30, 20})->Args({45, 20})->Args({60, 20})->Args({60, 50})->Args({60, 5});

void BM_AlphaBipartite(benchmark::State& state) {
  keg::Rng rng(keg::kDefaultSeed);
  const auto side = static_cast<std::size_t>(state.range(0));
  const keg::Graph g = keg::random_bipartite(side, side, 0.1, rng).graph;
  for (auto _ : state) benchmark::DoNotOptimize(keg::alpha(g).size);
}
BENCHMARK(BM_AlphaBipartite)->Arg(10)->Arg(20)->Arg(30);

void BM_Core(benchmark::State& state) {
  keg::Rng rng(keg::kDefaultSeed);
  const keg::Graph g = keg::random_graph(static_cast<std::size_t>(state.range(0)), 0.2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(keg::core(g).size());
}
BENCHMARK(BM_Core)->Arg(20)->Arg(40);

void BM_EnumerateOmega(benchmark::State& state) {
  keg::Rng rng(keg::kDefaultSeed);
  const keg::Graph g = keg::random_graph(static_cast<std::size_t>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(keg::collect_maximum_independent_sets(g).sets.size());
}
BENCHMARK(BM_EnumerateOmega)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
