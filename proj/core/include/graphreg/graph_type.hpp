#pragma once

#include <span>
#include <string>
#include <vector>

#include "graphreg/canonical.hpp"
#include "graphreg/graph.hpp"

namespace graphreg {

// A graph theta with a distinguished ordered base tuple. The base-induced
// subgraph (in tuple order) plays the role of the embedded base graph; the
// order of the type is (|base|, |theta|).
struct GraphType {
  Graph theta;
  std::vector<int> base;

  GraphType() = default;
  GraphType(Graph th, std::vector<int> b);

  int base_size() const { return static_cast<int>(base.size()); }
  int order_n() const { return theta.order(); }

  // The base graph: vertex i corresponds to base[i].
  Graph base_graph() const { return theta.induced_ordered(base); }

  Bits128 base_mask() const {
    Bits128 m;
    for (int v : base) m.set(v);
    return m;
  }

  void validate() const;  // throws on out-of-range or repeated base entries
};

// Equal keys iff the types are isomorphic: an isomorphism of the thetas
// mapping base set to base set. Implemented as the colored canonical form
// with the base/non-base 2-coloring (base vertices colored 0, so they occupy
// the leading canonical positions).
CanonicalForm type_canonical_form(const GraphType& t);

// Relabels to the canonical representative; its base tuple is 0..m-1.
GraphType canonical_type(const GraphType& t);

bool types_isomorphic(const GraphType& a, const GraphType& b);

// Theta with all base pairs made adjacent.
Graph closure_cl(const GraphType& t);

// Free sum t1 (+)_e t2: glues theta2 onto theta1 along the embedding e of
// t2's base graph into theta1 (e[i] = image of t2.base position i). The
// result keeps t1's base; fresh vertices of theta2 get no edges towards
// theta1 beyond the glued ones. Throws if e is not an embedding.
GraphType free_sum(const GraphType& t1, const GraphType& t2,
                   std::span<const int> e);

// True iff map is an embedding of the base graph of t into g
// (injective, adjacency and non-adjacency preserving).
bool is_base_embedding(const Graph& g, const GraphType& t,
                       std::span<const int> map);

// Text format: "<graph6 of theta> <comma-separated base ids>".
std::string type_to_text(const GraphType& t);
GraphType type_from_text(const std::string& line);

}  // namespace graphreg
