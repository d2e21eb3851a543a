#include <doctest.h>

#include <stdexcept>

#include "graphreg/catalog.hpp"
#include "graphreg/cliques.hpp"
#include "graphreg/connectivity.hpp"
#include "graphreg/enumerate.hpp"
#include "graphreg/subgraph.hpp"
#include "support/oracles.hpp"

using namespace graphreg;

TEST_SUITE_BEGIN("connectivity");

TEST_CASE("decomposability of named graphs") {
  Graph k4 = Graph::complete(4);
  CHECK_FALSE(is_k_decomposable(k4, 0));
  CHECK_FALSE(is_k_decomposable(k4, 1));
  CHECK_FALSE(is_k_decomposable(k4, 2));  // remainder too small to split

  CHECK(is_k_decomposable(Graph::path(3), 1));  // middle vertex
  CHECK_FALSE(is_k_decomposable(Graph::cycle(5), 1));
  CHECK(is_k_decomposable(Graph::cycle(5), 2));
}

TEST_CASE("connectivity under the decomposability reading") {
  CHECK(is_k_connected(Graph::complete(4), 3));
  CHECK(is_k_connected(Graph::complete(4), 4));  // complete graphs never split
  CHECK(is_k_connected(Graph::complete(5), 4));

  Graph octahedron(6);  // K2,2,2
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (u % 3 != v % 3) octahedron.add_edge(u, v);
  CHECK(is_k_connected(octahedron, 4));
  CHECK_FALSE(is_k_connected(Graph::cycle(6), 3));
}

TEST_CASE("menger route agrees with subset search on all graphs up to 7") {
  for (int n = 0; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      for (int k = 0; k <= n + 1; ++k)
        CHECK(is_k_connected(g, k) == is_k_connected_menger(g, k));
    }
  }
}

TEST_CASE("vertex connectivity values") {
  CHECK(vertex_connectivity_menger(Graph::cycle(6)) == 2);
  CHECK(vertex_connectivity_menger(Graph::complete(5)) == 4);
  CHECK(vertex_connectivity_menger(catalog("petersen")) == 3);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("cliques_subgraph");

TEST_CASE("maximal cliques of named graphs") {
  auto k4 = maximal_cliques(Graph::complete(4));
  REQUIRE(k4.size() == 1);
  CHECK(k4[0] == std::vector<int>{0, 1, 2, 3});

  auto rook = maximal_cliques(catalog("rook3x3"));
  CHECK(rook.size() == 6);
  for (const auto& c : rook) CHECK(c.size() == 3);

  Graph gq = catalog("gq24");
  auto lines = maximal_cliques(gq);
  CHECK(lines.size() == 45);  // (t+1) * v / (s+1) = 5*27/3
  for (const auto& c : lines) CHECK(c.size() == 3);
}

TEST_CASE("clique lists verified against subset enumeration up to order 8") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = oracles::random_graph(rng, n);
    CHECK(oracles::clique_list_valid_bruteforce(g, maximal_cliques(g)));
  }
  CHECK(oracles::clique_list_valid_bruteforce(Graph::empty(5),
                                              maximal_cliques(Graph::empty(5))));
}

TEST_CASE("contains_induced") {
  Graph k4e = k4_minus_edge();
  CHECK_FALSE(contains_induced(Graph::complete(4), k4e));
  CHECK_FALSE(contains_induced(catalog("rook3x3"), k4e));
  CHECK_FALSE(contains_induced(catalog("gq24"), k4e));

  Graph wheel5(6);  // C5 plus a dominating vertex
  for (int i = 0; i < 5; ++i) {
    wheel5.add_edge(i, (i + 1) % 5);
    wheel5.add_edge(i, 5);
  }
  CHECK(contains_induced(wheel5, k4e));

  // complete tripartite K3,3,3 contains K4-e
  Graph k333(9);
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      if (u / 3 != v / 3) k333.add_edge(u, v);
  CHECK(contains_induced(k333, k4e));
}

TEST_SUITE_END();
