#include <benchmark/benchmark.h>

#include <random>

#include "graphreg/canonical.hpp"
#include "graphreg/catalog.hpp"
#include "graphreg/graph_type.hpp"

using namespace graphreg;

static void BM_Canonical_random(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937 rng(13);
  std::vector<Graph> graphs;
  for (int i = 0; i < 64; ++i) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) g.add_edge(u, v);
    graphs.push_back(std::move(g));
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(graphs[i % graphs.size()]).key.size());
    ++i;
  }
}
BENCHMARK(BM_Canonical_random)->Arg(7)->Arg(8)->Arg(12)->Arg(16);

static void BM_Canonical_clebsch(benchmark::State& state) {
  Graph cleb = catalog("clebsch");  // strongly regular, the hard case
  for (auto _ : state)
    benchmark::DoNotOptimize(canonical_form(cleb).key.size());
}
BENCHMARK(BM_Canonical_clebsch)->Unit(benchmark::kMillisecond);

static void BM_TypeCanonical_order_2_7(benchmark::State& state) {
  std::mt19937 rng(29);
  std::vector<GraphType> types;
  for (int i = 0; i < 64; ++i) {
    Graph g(7);
    for (int u = 0; u < 7; ++u)
      for (int v = u + 1; v < 7; ++v)
        if (rng() & 1) g.add_edge(u, v);
    types.emplace_back(g, std::vector<int>{0, 1});
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(type_canonical_form(types[i % types.size()]).key.size());
    ++i;
  }
}
BENCHMARK(BM_TypeCanonical_order_2_7);
