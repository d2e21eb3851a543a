#pragma once

#include "graphreg/graph.hpp"

namespace graphreg {

bool is_connected(const Graph& g);

// True iff deleting some vertex set of size exactly k leaves at least two
// vertices falling into at least two components.
bool is_k_decomposable(const Graph& g, int k);

// k-connected means l-indecomposable for every l < k. Note that under this
// definition complete graphs are k-connected for every k.
bool is_k_connected(const Graph& g, int k);

// Minimum vertex cut size via Menger (max vertex-disjoint paths over all
// non-adjacent pairs). Returns n-1 for complete graphs.
int vertex_connectivity_menger(const Graph& g);

// Same predicate as is_k_connected, decided through the max-flow route.
bool is_k_connected_menger(const Graph& g, int k);

}  // namespace graphreg
