#include <benchmark/benchmark.h>

#include "hyperb/boundary_metrics.hpp"
#include "hyperb/generators.hpp"
#include "hyperb/hyperbolicity.hpp"

using namespace hyperb;

// Graph construction includes the all-pairs table below the dense limit.
static void BM_DenseDistances(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Graph g = grid_graph(side, side);
    benchmark::DoNotOptimize(g.dist(0, g.vertex_count() - 1));
  }
  state.SetComplexityN(static_cast<std::int64_t>(side) * side);
}
BENCHMARK(BM_DenseDistances)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_BfsRow(benchmark::State& state) {
  const Graph g = free_group(2, static_cast<int>(state.range(0)));
  Vertex v = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.row(v));
    v = (v + 7919) % g.vertex_count();
  }
}
BENCHMARK(BM_BfsRow)->DenseRange(8, 10);

static void BM_FourPoint(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(delta_four_point(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FourPoint)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_RhoRowChain(benchmark::State& state) {
  const Graph g = grid_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    state.PauseTiming();
    const auto t = inner_metric(g, g.base(), 0.1);
    state.ResumeTiming();
    benchmark::DoNotOptimize(t.rho_row(t.size() / 2));
  }
}
BENCHMARK(BM_RhoRowChain)->Arg(8)->Arg(16)->Arg(24);

static void BM_RhoRowUltrametric(benchmark::State& state) {
  const Graph g = regular_tree(3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    state.PauseTiming();
    const auto t = inner_metric(g, g.base(), 2.0 / 15.0);
    state.ResumeTiming();
    benchmark::DoNotOptimize(t.rho_row(t.size() / 2));
  }
}
BENCHMARK(BM_RhoRowUltrametric)->Arg(6)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
