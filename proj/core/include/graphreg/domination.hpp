#pragma once

#include <optional>

#include "graphreg/graph_type.hpp"
#include "graphreg/transversal.hpp"

namespace graphreg {

// Witness for t1 <= t2 in the domination quasi-order: a base isomorphism f
// together with a surjective homomorphism g from theta2 onto the vertices of
// theta1 such that g restricted to the base realizes f.
struct TypeMorphismWitness {
  std::vector<int> base_map;    // f: base position of t2 -> base position of t1
  std::vector<int> vertex_map;  // g: vertex of theta2 -> vertex of theta1
  bool strict = false;          // set when the two types are not isomorphic
};

// Witness iff t1 <= t2 (t2 dominates t1). Homomorphisms may merge
// non-adjacent vertices and may map non-edges onto edges; only edges are
// required to be preserved.
std::optional<TypeMorphismWitness> dominates(const GraphType& t1,
                                             const GraphType& t2);

// Canonical representatives of every type dominated by t. Finite by the
// order bound: every dominated type has base size |base| and at most
// |theta| vertices.
TypeTransversal dominated_transversal(const GraphType& t);

}  // namespace graphreg
