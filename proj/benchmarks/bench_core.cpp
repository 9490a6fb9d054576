#include <benchmark/benchmark.h>

#include "cyc/graphs.hpp"
#include "cyc/io.hpp"
#include "cyc/minors.hpp"
#include "cyc/polytope.hpp"
#include "cyc/toric.hpp"

using namespace cyc;

static void BM_FanoCircuits(benchmark::State& state) {
  matroid fano = fixture_matroid("fano");
  for (auto _ : state) benchmark::DoNotOptimize(circuits(fano));
}
BENCHMARK(BM_FanoCircuits);

static void BM_CutSetsK5(benchmark::State& state) {
  multigraph k5 = fixture_graph("k5");
  for (auto _ : state) benchmark::DoNotOptimize(cut_sets(k5));
}
BENCHMARK(BM_CutSetsK5);

static void BM_MuK4Saturation(benchmark::State& state) {
  matroid k4 = fixture_matroid("k4");
  for (auto _ : state) benchmark::DoNotOptimize(mu_report(k4, markov_method::saturation, 8));
}
BENCHMARK(BM_MuK4Saturation);

static void BM_MuC4DualFiber(benchmark::State& state) {
  matroid m = fixture_matroid("c4dual");
  for (auto _ : state) benchmark::DoNotOptimize(mu_report(m, markov_method::fiber, 8));
}
BENCHMARK(BM_MuC4DualFiber);

static void BM_MuThetaDualSaturation(benchmark::State& state) {
  matroid m = fixture_matroid("thetadual");
  for (auto _ : state) benchmark::DoNotOptimize(mu_report(m, markov_method::saturation, 8));
}
BENCHMARK(BM_MuThetaDualSaturation);

static void BM_GSeriesSearchFano(benchmark::State& state) {
  matroid fano = fixture_matroid("fano");
  matroid target = contract_elements(fano, 0b100011);  // {1,2,6}
  for (auto _ : state)
    benchmark::DoNotOptimize(g_series_minor_search(fano.as_binary(), target));
}
BENCHMARK(BM_GSeriesSearchFano);

static void BM_DimensionCutK5(benchmark::State& state) {
  cycle_polytope p = cycle_polytope_of(fixture_matroid("k5dual"));
  for (auto _ : state) benchmark::DoNotOptimize(dimension(p));
}
BENCHMARK(BM_DimensionCutK5);

BENCHMARK_MAIN();
