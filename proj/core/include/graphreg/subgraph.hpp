#pragma once

#include "graphreg/graph.hpp"

namespace graphreg {

// True iff some vertex subset of g induces a graph isomorphic to h.
bool contains_induced(const Graph& g, const Graph& h);

inline Graph k4_minus_edge() {
  Graph h(4);
  h.add_edge(0, 2);
  h.add_edge(0, 3);
  h.add_edge(1, 2);
  h.add_edge(1, 3);
  h.add_edge(2, 3);
  return h;
}

}  // namespace graphreg
