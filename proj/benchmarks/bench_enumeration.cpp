#include <benchmark/benchmark.h>

#include "graphreg/connectivity.hpp"
#include "graphreg/enumerate.hpp"
#include "graphreg/quadric.hpp"
#include "graphreg/subgraph.hpp"

using namespace graphreg;

static void BM_EnumerateGraphs(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(n).size());
}
BENCHMARK(BM_EnumerateGraphs)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTypes_2_6(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_types(2, 6).size());
}
BENCHMARK(BM_EnumerateTypes_2_6)->Unit(benchmark::kMillisecond);

static void BM_K4eFreeIrreducible_3_7(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(irreducible_k4e_free_types(7).size());
}
BENCHMARK(BM_K4eFreeIrreducible_3_7)->Unit(benchmark::kMillisecond);

static void BM_EllipticQuadric(benchmark::State& state) {
  int q = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(elliptic_quadric_gq(q).lines.size());
}
BENCHMARK(BM_EllipticQuadric)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
