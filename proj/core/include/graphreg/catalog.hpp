#pragma once

#include <string>
#include <vector>

#include "graphreg/graph.hpp"

namespace graphreg {

// Named test graphs, each from an independent direct construction:
//   petersen            Kneser graph K(5,2)
//   clebsch             folded 5-cube: GF(2)^4, difference of weight 1 or 4
//   c5                  pentagon
//   rook3x3             K3 x K3 (rows and columns of a 3x3 grid)
//   gq24                point graph of the elliptic quadric GQ(2,4)
//   schlafli_complement alias of gq24
// Throws on unknown names.
Graph catalog(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace graphreg
