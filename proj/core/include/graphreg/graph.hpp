#pragma once

#include <span>
#include <string>
#include <vector>

#include "graphreg/bits.hpp"

namespace graphreg {

// Finite simple undirected graph on vertices 0..n-1. Adjacency rows are
// 128-bit sets; construction is the only mutating phase, afterwards all
// operations are pure and safe for concurrent reads.
class Graph {
 public:
  static constexpr int max_vertices = Bits128::capacity;

  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  long long edge_count() const;

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u].test(v);
  }
  const Bits128& row(int v) const {
    check_vertex(v);
    return rows_[v];
  }
  int degree(int v) const { return row(v).count(); }

  Bits128 vertex_mask() const { return Bits128::lower(n_); }

  Graph complement() const;

  // Induced subgraph on the vertices in the given order; verts[i] becomes
  // vertex i of the result. Throws on out-of-range or repeated entries.
  Graph induced_ordered(std::span<const int> verts) const;

  friend bool operator==(const Graph&, const Graph&) = default;

  static Graph empty(int n) { return Graph(n); }
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Bits128> rows_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> new_to_old;  // vertex i of graph is new_to_old[i] in the host
  std::vector<int> old_to_new;  // -1 for vertices outside the set
};

// Induced subgraph on a vertex set; vertices are relabelled in ascending
// order of their original ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s);

enum class Subconstituent { first, second };

// First subconstituent: induced on the neighbors of v. Second: induced on
// the non-neighbors of v, excluding v itself.
Graph subconstituent(const Graph& g, int v, Subconstituent which);

// Common neighbors of all vertices in s, excluding the members of s.
std::vector<int> common_neighbors(const Graph& g, std::span<const int> s);
Bits128 common_neighbors_mask(const Graph& g, std::span<const int> s);

// Degrees sorted descending.
std::vector<int> degree_sequence(const Graph& g);

bool is_regular(const Graph& g);

std::vector<std::pair<int, int>> edges_of(const Graph& g);

}  // namespace graphreg
