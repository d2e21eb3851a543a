#pragma once

#include <string>
#include <vector>

#include "graphreg/graph_type.hpp"

namespace graphreg {

// Duplicate-free list of canonical graph-type representatives, deterministic
// order (ascending theta order, then canonical key).
struct TypeTransversal {
  int m = 0;
  int n = 0;
  std::vector<std::string> filters;
  std::vector<GraphType> members;

  size_t size() const { return members.size(); }
};

}  // namespace graphreg
