#include <benchmark/benchmark.h>

#include <string>

#include "keg/batch.hpp"
#include "keg/fixtures.hpp"
#include "keg/formats.hpp"

namespace {

std::string corpus(std::size_t count, std::size_t n) {
  keg::Rng rng(keg::kDefaultSeed);
  std::string text;
  for (std::size_t i = 0; i < count; ++i)
    text += keg::emit_graph6(keg::random_graph(n, 0.1 * static_cast<double>(1 + i % 5), rng)) + "\n";
  return text;
}

void BM_BatchPolynomial(benchmark::State& state) {
  const std::string text = corpus(200, 50);
  keg::BatchOptions opt;
  opt.analysis.polynomial_only = true;
  opt.jobs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(keg::run_batch(text, opt).reports.size());
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_BatchPolynomial)->Arg(1)->Arg(4)->UseRealTime();

void BM_BatchExact(benchmark::State& state) {
  const std::string text = corpus(50, 14);
  keg::BatchOptions opt;
  opt.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(keg::run_batch(text, opt).reports.size());
  state.SetItemsProcessed(state.iterations() * 50);
}
BENCHMARK(BM_BatchExact);

}  // namespace

BENCHMARK_MAIN();
