#include <doctest.h>

#include <stdexcept>

#include "graphreg/canonical.hpp"
#include "graphreg/catalog.hpp"
#include "graphreg/graph.hpp"
#include "graphreg/graph_io.hpp"
#include "support/oracles.hpp"

using namespace graphreg;

TEST_SUITE_BEGIN("graph_core");

TEST_CASE("induced subgraphs") {
  SUBCASE("K4 restricted to three vertices is K3") {
    auto sub = induced_subgraph(Graph::complete(4), std::vector<int>{0, 1, 2});
    CHECK(sub.graph == Graph::complete(3));
    CHECK(sub.new_to_old == std::vector<int>{0, 1, 2});
  }
  SUBCASE("three consecutive vertices of C5 induce P3") {
    auto sub = induced_subgraph(Graph::cycle(5), std::vector<int>{1, 2, 3});
    CHECK(are_isomorphic(sub.graph, Graph::path(3)));
  }
  SUBCASE("petersen: non-neighborhood of a vertex induces C6") {
    Graph pet = catalog("petersen");
    std::vector<int> nonnbrs;
    for (int u = 1; u < 10; ++u)
      if (!pet.has_edge(0, u)) nonnbrs.push_back(u);
    auto sub = induced_subgraph(pet, nonnbrs);
    // brute-force adjacency lookup
    for (size_t i = 0; i < nonnbrs.size(); ++i)
      for (size_t j = i + 1; j < nonnbrs.size(); ++j)
        CHECK(sub.graph.has_edge(static_cast<int>(i), static_cast<int>(j)) ==
              pet.has_edge(nonnbrs[i], nonnbrs[j]));
    CHECK(are_isomorphic(sub.graph, Graph::cycle(6)));
    CHECK(sub.graph == subconstituent(pet, 0, Subconstituent::second));
  }
  SUBCASE("out of range vertex throws") {
    CHECK_THROWS_AS(induced_subgraph(Graph::complete(3), std::vector<int>{0, 5}),
                    std::out_of_range);
  }
}

TEST_CASE("complement is an involution") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracles::random_graph(rng, 1 + static_cast<int>(rng() % 10));
    CHECK(g.complement().complement() == g);
  }
}

TEST_CASE("common neighbors exclude the set itself") {
  CHECK(common_neighbors(Graph::complete(3), std::vector<int>{0, 1}) ==
        std::vector<int>{2});

  Graph pet = catalog("petersen");
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v)
      if (!pet.has_edge(u, v))
        CHECK(common_neighbors(pet, std::vector<int>{u, v}).size() == 1);

  Graph cleb = catalog("clebsch");
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v)
      if (!cleb.has_edge(u, v))
        CHECK(common_neighbors(cleb, std::vector<int>{u, v}).size() == 2);
}

TEST_CASE("subconstituents") {
  Graph pet = catalog("petersen");
  for (int v = 0; v < 10; ++v) {
    Graph first = subconstituent(pet, v, Subconstituent::first);
    Graph second = subconstituent(pet, v, Subconstituent::second);
    CHECK(first.order() == pet.degree(v));
    CHECK(second.order() == 10 - 1 - pet.degree(v));
    CHECK(first == Graph::empty(3));  // triangle-free
    CHECK(are_isomorphic(second, Graph::cycle(6)));
  }
  CHECK_THROWS_AS(subconstituent(pet, 10, Subconstituent::first), std::out_of_range);

  Graph gq = catalog("gq24");
  Graph cleb = catalog("clebsch");
  for (int v = 0; v < gq.order(); ++v)
    CHECK(are_isomorphic(subconstituent(gq, v, Subconstituent::second), cleb));
}

TEST_CASE("degree sequences") {
  CHECK(degree_sequence(Graph::path(3)) == std::vector<int>{2, 1, 1});
  CHECK(is_regular(catalog("clebsch")));
  CHECK_FALSE(is_regular(Graph::path(3)));
}

TEST_CASE("graph6 format") {
  SUBCASE("pinned encodings") {
    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK(to_graph6(k2) == "A_");
    CHECK(to_graph6(Graph::path(3)) == "Bg");
    CHECK(to_graph6(Graph::empty(0)) == "?");
  }
  SUBCASE("round trip across the catalog") {
    for (const auto& name : catalog_names()) {
      Graph g = catalog(name);
      if (g.order() <= 62) CHECK(from_graph6(to_graph6(g)) == g);
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS(to_graph6(Graph(63)));
    CHECK_THROWS(from_graph6("~??"));  // long-form header
    CHECK_THROWS(from_graph6(""));
    CHECK_THROWS(from_graph6("B"));  // truncated
  }
}

TEST_CASE("edge list format") {
  Graph g = catalog("rook3x3");
  Graph back = from_edge_list(to_edge_list(g));
  CHECK(back == g);
  CHECK_THROWS(from_edge_list(std::string("not a header")));
  CHECK_THROWS(from_edge_list(std::string("2 1\n0")));
}

TEST_CASE("vertex cap") {
  CHECK_NOTHROW(Graph(128));
  CHECK_THROWS_AS(Graph(129), std::out_of_range);
}

TEST_SUITE_END();
