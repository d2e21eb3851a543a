#include "graphreg/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphreg {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > max_vertices)
    throw std::out_of_range("graph order must be in 0.." +
                            std::to_string(max_vertices));
  rows_.assign(n_, Bits128{});
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

long long Graph::edge_count() const {
  long long d = 0;
  for (int v = 0; v < n_; ++v) d += rows_[v].count();
  return d / 2;
}

Graph Graph::complement() const {
  Graph c(n_);
  Bits128 all = vertex_mask();
  for (int v = 0; v < n_; ++v) {
    c.rows_[v] = all.minus(rows_[v]);
    c.rows_[v].reset(v);
  }
  return c;
}

Graph Graph::induced_ordered(std::span<const int> verts) const {
  int k = static_cast<int>(verts.size());
  Graph h(k);
  for (int i = 0; i < k; ++i) {
    check_vertex(verts[i]);
    for (int j = i + 1; j < k; ++j) {
      if (verts[i] == verts[j])
        throw std::invalid_argument("repeated vertex in induced set");
      if (rows_[verts[i]].test(verts[j])) h.add_edge(i, j);
    }
  }
  return h;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  if (n >= 3)
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  else if (n == 2)
    g.add_edge(0, 1);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
  std::vector<int> verts(s.begin(), s.end());
  std::sort(verts.begin(), verts.end());
  InducedSubgraph out;
  out.graph = g.induced_ordered(verts);
  out.new_to_old = verts;
  out.old_to_new.assign(g.order(), -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    out.old_to_new[verts[i]] = i;
  return out;
}

Graph subconstituent(const Graph& g, int v, Subconstituent which) {
  Bits128 sel = g.row(v);
  if (which == Subconstituent::second) {
    sel = g.vertex_mask().minus(sel);
    sel.reset(v);
  }
  std::vector<int> verts;
  sel.for_each([&](int u) { verts.push_back(u); });
  return g.induced_ordered(verts);
}

Bits128 common_neighbors_mask(const Graph& g, std::span<const int> s) {
  Bits128 acc = g.vertex_mask();
  for (int v : s) acc &= g.row(v);
  for (int v : s) acc.reset(v);
  return acc;
}

std::vector<int> common_neighbors(const Graph& g, std::span<const int> s) {
  std::vector<int> out;
  common_neighbors_mask(g, s).for_each([&](int u) { out.push_back(u); });
  return out;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

bool is_regular(const Graph& g) {
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) != g.degree(0)) return false;
  return true;
}

std::vector<std::pair<int, int>> edges_of(const Graph& g) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) e.emplace_back(u, v);
  return e;
}

}  // namespace graphreg
