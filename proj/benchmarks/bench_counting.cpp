#include <benchmark/benchmark.h>

#include "graphreg/cameron.hpp"
#include "graphreg/catalog.hpp"
#include "graphreg/counting.hpp"
#include "graphreg/quadric.hpp"
#include "graphreg/regularity.hpp"

using namespace graphreg;

static void BM_CountExtensions_K7_into_gq24(benchmark::State& state) {
  Graph gq = catalog("gq24");
  GraphType t(Graph::complete(7), {0, 1, 2});
  auto kappas = base_embeddings(gq, t);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_extensions(gq, t, kappas[i % kappas.size()]));
    ++i;
  }
}
BENCHMARK(BM_CountExtensions_K7_into_gq24);

static void BM_CountExtensions_K33_into_clebsch(benchmark::State& state) {
  Graph cleb = catalog("clebsch");
  Graph k33(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  GraphType t(k33, {0, 3});
  auto kappas = base_embeddings(cleb, t);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_extensions(cleb, t, kappas[i % kappas.size()]));
    ++i;
  }
}
BENCHMARK(BM_CountExtensions_K33_into_clebsch);

static void BM_TypeRegularity_mu_on_gq24(benchmark::State& state) {
  Graph gq = catalog("gq24");
  Graph mu3(3);
  mu3.add_edge(0, 2);
  mu3.add_edge(1, 2);
  GraphType t(mu3, {0, 1});
  CheckOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(is_type_regular(gq, t, opts).holds);
}
BENCHMARK(BM_TypeRegularity_mu_on_gq24);

static void BM_Tvc5_gq24(benchmark::State& state) {
  Graph gq = catalog("gq24");
  for (auto _ : state)
    benchmark::DoNotOptimize(t_vertex_condition(gq, 5, Mode::reduced).holds);
}
BENCHMARK(BM_Tvc5_gq24)->Unit(benchmark::kMillisecond);

static void BM_Mn37_clebsch(benchmark::State& state) {
  Graph cleb = catalog("clebsch");
  for (auto _ : state)
    benchmark::DoNotOptimize(is_mn_regular(cleb, 3, 7, Mode::reduced).holds);
}
BENCHMARK(BM_Mn37_clebsch)->Unit(benchmark::kMillisecond);

// 112-vertex stretch target: the GQ(3,9) point graph
static void BM_SrgParams_gq39(benchmark::State& state) {
  Graph pg = point_graph(elliptic_quadric_gq(3));
  for (auto _ : state) benchmark::DoNotOptimize(srg_parameters(pg).has_value());
}
BENCHMARK(BM_SrgParams_gq39)->Unit(benchmark::kMillisecond);

static void BM_TypeRegularity_mu_on_gq39(benchmark::State& state) {
  Graph pg = point_graph(elliptic_quadric_gq(3));
  Graph mu3(3);
  mu3.add_edge(0, 2);
  mu3.add_edge(1, 2);
  GraphType t(mu3, {0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(is_type_regular(pg, t).holds);
}
BENCHMARK(BM_TypeRegularity_mu_on_gq39)->Unit(benchmark::kMillisecond);
