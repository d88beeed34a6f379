// Wall-clock coverage of the pipeline stages on generated networks. Not part
// of the test suite; build with HYPERLAP_BUILD_BENCHMARKS and run directly.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "hyperlap/generator.hpp"
#include "hyperlap/line_graph.hpp"
#include "hyperlap/metrics.hpp"
#include "hyperlap/spectral.hpp"

namespace {

using namespace hyperlap;

Hypergraph grow_steps(std::uint64_t steps) {
  GrowthConfig config;
  config.steps = steps;
  config.rng_seed = 1;
  return grow(config);
}

const LineGraph& grown_line_graph() {
  static LineGraph g = LineGraph::from_hypergraph(grow_steps(336));
  return g;
}

void BM_Grow(benchmark::State& state) {
  std::uint64_t steps = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(grow_steps(steps));
  }
}
BENCHMARK(BM_Grow)->Arg(50)->Arg(336)->Arg(1000);

void BM_LineGraphConstruction(benchmark::State& state) {
  Hypergraph h = grow_steps(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(LineGraph::from_hypergraph(h));
  }
}
BENCHMARK(BM_LineGraphConstruction)->Arg(336)->Arg(1000);

void BM_Clustering(benchmark::State& state) {
  const LineGraph& g = grown_line_graph();
  int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(clustering_coefficient(g, threads));
  }
}
BENCHMARK(BM_Clustering)->Arg(1)->Arg(4);

void BM_PathLength(benchmark::State& state) {
  const LineGraph& g = grown_line_graph();
  int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(average_path_length(g, {}, threads));
  }
}
BENCHMARK(BM_PathLength)->Arg(1)->Arg(4);

void BM_DenseSpectrum(benchmark::State& state) {
  // Small enough for the full dense solve.
  LineGraph g = LineGraph::from_hypergraph(grow_steps(100));
  for (auto _ : state) {
    benchmark::DoNotOptimize(smallest_eigenvalue(g));
  }
}
BENCHMARK(BM_DenseSpectrum);

void BM_IterativeSpectrum(benchmark::State& state) {
  // Past the dense cutoff: exercises the restarted Lanczos path.
  LineGraph g = LineGraph::from_hypergraph(grow_steps(800));
  for (auto _ : state) {
    benchmark::DoNotOptimize(smallest_eigenvalue(g));
  }
}
BENCHMARK(BM_IterativeSpectrum);

}  // namespace

BENCHMARK_MAIN();
