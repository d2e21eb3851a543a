#include "graphreg/cliques.hpp"

#include <algorithm>

namespace graphreg {

namespace {

// Bron-Kerbosch with pivoting.
void expand(const Graph& g, Bits128 r, Bits128 p, Bits128 x,
            std::vector<std::vector<int>>& out) {
  if (p.none() && x.none()) {
    std::vector<int> clique;
    r.for_each([&](int v) { clique.push_back(v); });
    out.push_back(std::move(clique));
    return;
  }
  // pivot: vertex of p|x with most neighbors in p
  int pivot = -1, best = -1;
  (p | x).for_each([&](int u) {
    int d = (g.row(u) & p).count();
    if (d > best) {
      best = d;
      pivot = u;
    }
  });
  Bits128 candidates = p.minus(g.row(pivot));
  candidates.for_each([&](int v) {
    Bits128 r2 = r;
    r2.set(v);
    expand(g, r2, p & g.row(v), x & g.row(v), out);
    p.reset(v);
    x.set(v);
  });
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<int>> out;
  if (g.order() == 0) return out;
  expand(g, Bits128{}, g.vertex_mask(), Bits128{}, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace graphreg
