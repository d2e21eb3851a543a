#pragma once

#include <vector>

#include "graphreg/graph.hpp"

namespace graphreg {

// All inclusion-maximal cliques, each as an ascending vertex list, the list
// sorted lexicographically. Isolated vertices yield singleton cliques.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

}  // namespace graphreg
