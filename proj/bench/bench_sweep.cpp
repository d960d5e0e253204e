// Serial reference loop vs. the OpenMP sweep over the same corpus.

#include <benchmark/benchmark.h>

#include "invdom/corpus.hpp"
#include "invdom/sweep.hpp"

namespace {

const std::vector<invdom::Graph>& corpus() {
  static const std::vector<invdom::Graph> graphs = invdom::all_graphs_up_to(7, true);
  return graphs;
}

void BM_AnalyzeSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(invdom::analyze_serial(corpus()));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(corpus().size()));
}
BENCHMARK(BM_AnalyzeSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_AnalyzeParallel(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invdom::analyze_parallel(corpus(), {}, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(corpus().size()));
}
BENCHMARK(BM_AnalyzeParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_GammaRandom16(benchmark::State& state) {
  invdom::Rng rng(7);
  std::vector<invdom::Graph> graphs;
  for (int i = 0; i < 64; ++i) graphs.push_back(invdom::random_graph(16, 0.2, rng));
  for (auto _ : state)
    for (const auto& g : graphs) benchmark::DoNotOptimize(invdom::gamma(g));
}
BENCHMARK(BM_GammaRandom16)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
