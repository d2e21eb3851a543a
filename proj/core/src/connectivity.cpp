#include "graphreg/connectivity.hpp"

#include <vector>

namespace graphreg {

namespace {

// Number of components of the subgraph induced by `alive`.
int component_count(const Graph& g, Bits128 alive) {
  int comps = 0;
  while (alive.any()) {
    ++comps;
    Bits128 frontier = Bits128::single(alive.lowest());
    Bits128 seen = frontier;
    while (frontier.any()) {
      Bits128 next;
      frontier.for_each([&](int v) { next |= g.row(v); });
      next &= alive;
      next = next.minus(seen);
      seen |= next;
      frontier = next;
    }
    alive = alive.minus(seen);
  }
  return comps;
}

bool any_cut_of_size(const Graph& g, int k, Bits128 chosen, int first, int left) {
  if (left == 0) {
    Bits128 alive = g.vertex_mask().minus(chosen);
    return alive.count() >= 2 && component_count(g, alive) >= 2;
  }
  for (int v = first; v <= g.order() - left; ++v) {
    Bits128 c = chosen;
    c.set(v);
    if (any_cut_of_size(g, k, c, v + 1, left - 1)) return true;
  }
  return false;
}

}  // namespace

bool is_connected(const Graph& g) {
  return component_count(g, g.vertex_mask()) <= 1;
}

bool is_k_decomposable(const Graph& g, int k) {
  if (k < 0 || k > g.order() - 2) return false;
  return any_cut_of_size(g, k, Bits128{}, 0, k);
}

bool is_k_connected(const Graph& g, int k) {
  for (int l = 0; l < k; ++l)
    if (is_k_decomposable(g, l)) return false;
  return true;
}

namespace {

// Max vertex-disjoint s-t paths for non-adjacent s, t: unit-capacity max
// flow on the split graph (v_in -> v_out). Arcs are stored pairwise, so the
// reverse of arc e is e^1 and tail(e) == to[e^1].
int max_disjoint_paths(const Graph& g, int s, int t) {
  int n = g.order();
  auto in_node = [](int v) { return 2 * v; };
  auto out_node = [](int v) { return 2 * v + 1; };
  int nodes = 2 * n;

  std::vector<int> to, cap;
  std::vector<std::vector<int>> out_arcs(nodes);
  auto add_arc = [&](int a, int b, int c) {
    out_arcs[a].push_back(static_cast<int>(to.size()));
    to.push_back(b);
    cap.push_back(c);
    out_arcs[b].push_back(static_cast<int>(to.size()));
    to.push_back(a);
    cap.push_back(0);
  };
  for (int v = 0; v < n; ++v)
    add_arc(in_node(v), out_node(v), v == s || v == t ? n : 1);
  for (auto [u, v] : edges_of(g)) {
    add_arc(out_node(u), in_node(v), n);
    add_arc(out_node(v), in_node(u), n);
  }

  int flow = 0;
  const int src = out_node(s), dst = in_node(t);
  while (true) {
    std::vector<int> prev_arc(nodes, -1);
    std::vector<int> queue{src};
    prev_arc[src] = -2;
    for (size_t qi = 0; qi < queue.size() && prev_arc[dst] == -1; ++qi) {
      int a = queue[qi];
      for (int e : out_arcs[a]) {
        int b = to[e];
        if (prev_arc[b] == -1 && cap[e] > 0) {
          prev_arc[b] = e;
          queue.push_back(b);
        }
      }
    }
    if (prev_arc[dst] == -1) break;
    for (int b = dst; b != src;) {
      int e = prev_arc[b];
      cap[e] -= 1;
      cap[e ^ 1] += 1;
      b = to[e ^ 1];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity_menger(const Graph& g) {
  int n = g.order();
  int best = n - 1;
  bool found_pair = false;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t)) {
        found_pair = true;
        int f = max_disjoint_paths(g, s, t);
        if (f < best) best = f;
      }
  if (!found_pair) return n > 0 ? n - 1 : 0;
  return best;
}

bool is_k_connected_menger(const Graph& g, int k) {
  int n = g.order();
  bool has_nonadjacent = false;
  for (int s = 0; s < n && !has_nonadjacent; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t)) {
        has_nonadjacent = true;
        break;
      }
  if (!has_nonadjacent) return true;  // no separating set exists at all
  return vertex_connectivity_menger(g) >= k;
}

}  // namespace graphreg
