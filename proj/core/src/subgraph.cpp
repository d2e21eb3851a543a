#include "graphreg/subgraph.hpp"

#include <vector>

namespace graphreg {

namespace {

// Places pattern vertices in a most-constrained-first static order; the
// candidate set of each vertex is filtered against all placed neighbors and
// non-neighbors, so any completion induces an isomorphic copy.
struct InducedSearch {
  const Graph& host;
  const Graph& pattern;
  std::vector<int> order;       // pattern vertices in placement order
  std::vector<int> image;       // image[p] = host vertex, -1 if unplaced
  Bits128 used;

  InducedSearch(const Graph& g, const Graph& h) : host(g), pattern(h) {
    int k = pattern.order();
    std::vector<bool> placed(k, false);
    for (int step = 0; step < k; ++step) {
      int best = -1, best_links = -1;
      for (int v = 0; v < k; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (int u = 0; u < k; ++u)
          if (placed[u] && pattern.has_edge(u, v)) ++links;
        if (links > best_links) {
          best_links = links;
          best = v;
        }
      }
      order.push_back(best);
      placed[best] = true;
    }
    image.assign(k, -1);
  }

  bool find(int depth) {
    if (depth == pattern.order()) return true;
    int v = order[depth];
    Bits128 cand = host.vertex_mask().minus(used);
    for (int d = 0; d < depth; ++d) {
      int u = order[d];
      if (pattern.has_edge(u, v))
        cand &= host.row(image[u]);
      else
        cand = cand.minus(host.row(image[u]));
    }
    bool found = false;
    cand.for_each([&](int w) {
      if (found) return;
      image[v] = w;
      used.set(w);
      if (find(depth + 1)) found = true;
      used.reset(w);
      image[v] = -1;
    });
    return found;
  }
};

}  // namespace

bool contains_induced(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return false;
  if (h.order() == 0) return true;
  InducedSearch s(g, h);
  return s.find(0);
}

}  // namespace graphreg
