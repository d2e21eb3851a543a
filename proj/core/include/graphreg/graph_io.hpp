#pragma once

#include <iosfwd>
#include <string>

#include "graphreg/graph.hpp"

namespace graphreg {

// graph6 encoding, short form only (n <= 62). Longer headers are rejected.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// Edge-list text format: first line "n m", then m lines "u v", 0-based.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);
Graph from_edge_list(const std::string& text);

}  // namespace graphreg
