#include "ccnsim/engine.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace ccnsim;

void BM_AllPairsShortestPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = generate_random_graph(n, 3 * n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_shortest_paths(g));
}
BENCHMARK(BM_AllPairsShortestPaths)->Arg(50)->Arg(100)->Arg(200);

void BM_BetweennessCentrality(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = generate_random_graph(n, 3 * n, 42);
  const auto spt = all_pairs_shortest_paths(g);
  for (auto _ : state) benchmark::DoNotOptimize(betweenness_centrality(g, spt));
}
BENCHMARK(BM_BetweennessCentrality)->Arg(50)->Arg(100)->Arg(200);

void BM_EigenvectorCentrality(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = generate_random_graph(n, 3 * n, 42);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvector_centrality(g));
}
BENCHMARK(BM_EigenvectorCentrality)->Arg(50)->Arg(100)->Arg(200);

void BM_ZipfSample(benchmark::State& state) {
  const ZipfMandelbrot zipf(10000, 0.7, 0.0);
  std::mt19937_64 rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(zipf.sample(rng));
}
BENCHMARK(BM_ZipfSample);

void BM_EngineRun(benchmark::State& state) {
  const Graph g = generate_random_graph(50, 150, 42);
  const auto spt = all_pairs_shortest_paths(g);
  const auto centrality = compute_centrality(g, spt, Weights{});
  std::mt19937_64 prng(9);
  RunInputs in;
  in.graph = &g;
  in.spt = &spt;
  in.centrality = &centrality;
  in.strategy.kind = static_cast<StrategyKind>(state.range(0));
  in.workload = {10000, 0.7, 0.0, 100.0, 18, 5.0};
  in.cache_capacity = 1000;
  in.seed = 7;
  in.placement = place_consumers_and_server(g, 18, prng);
  for (auto _ : state) benchmark::DoNotOptimize(run(in));
}
BENCHMARK(BM_EngineRun)
    ->Arg(static_cast<int>(StrategyKind::Nvcp))
    ->Arg(static_cast<int>(StrategyKind::Lce));

}  // namespace

BENCHMARK_MAIN();
