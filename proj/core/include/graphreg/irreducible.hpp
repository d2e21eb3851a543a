#pragma once

#include "graphreg/graph_type.hpp"

namespace graphreg {

// Decides whether t splits as a free sum t1 (+)_e t2 with t2 of order
// (k <= m, l <= n) and neither summand isomorphic to t. The search runs over
// partitions M1 / M2 / M3 of the vertices of theta with the base inside
// M1 u M3, no edges between M1 and M2, and M3 the glued base of t2.
bool is_mn_reducible(const GraphType& t, int m, int n);

inline bool is_mn_irreducible(const GraphType& t, int m, int n) {
  return !is_mn_reducible(t, m, n);
}

// Equivalent route through the closure: an (m,n)-type with m+2 <= n is
// (m,n)-irreducible iff Cl(t) is (m+1)-connected. Only valid when the base
// size is exactly m and m+2 <= |theta| <= n; throws otherwise.
bool is_mn_irreducible_via_connectivity(const GraphType& t, int m, int n);

// (m, |theta|)-irreducibility for a type with base size exactly m, taking
// the connectivity fast path when it applies.
bool is_level_irreducible(const GraphType& t, int m);

}  // namespace graphreg
