#include "graphreg/catalog.hpp"

#include <bit>
#include <stdexcept>

#include "graphreg/incidence.hpp"
#include "graphreg/quadric.hpp"

namespace graphreg {

namespace {

Graph kneser_5_2() {
  // vertices: 2-subsets of {0..4} in lexicographic order, edges: disjoint
  std::vector<std::pair<int, int>> sets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) sets.emplace_back(a, b);
  Graph g(static_cast<int>(sets.size()));
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j) {
      auto [a, b] = sets[i];
      auto [c, d] = sets[j];
      if (a != c && a != d && b != c && b != d)
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

Graph folded_5_cube() {
  Graph g(16);
  for (int x = 0; x < 16; ++x)
    for (int y = x + 1; y < 16; ++y) {
      int w = std::popcount(static_cast<unsigned>(x ^ y));
      if (w == 1 || w == 4) g.add_edge(x, y);
    }
  return g;
}

Graph rook_3x3() {
  Graph g(9);
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      if (u / 3 == v / 3 || u % 3 == v % 3) g.add_edge(u, v);
  return g;
}

}  // namespace

Graph catalog(const std::string& name) {
  if (name == "petersen") return kneser_5_2();
  if (name == "clebsch") return folded_5_cube();
  if (name == "c5") return Graph::cycle(5);
  if (name == "rook3x3") return rook_3x3();
  if (name == "gq24" || name == "schlafli_complement")
    return point_graph(elliptic_quadric_gq(2));
  throw std::invalid_argument("unknown catalog graph: " + name);
}

std::vector<std::string> catalog_names() {
  return {"petersen", "clebsch", "c5", "rook3x3", "gq24", "schlafli_complement"};
}

}  // namespace graphreg
