#pragma once

#include <span>
#include <string>
#include <vector>

#include "graphreg/graph.hpp"

namespace graphreg {

// Total-order key identifying the isomorphism class of a (optionally
// vertex-colored) graph. Equal keys iff the graphs are isomorphic by a
// color-preserving isomorphism.
struct CanonicalForm {
  std::string key;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.key <=> b.key;
  }

  std::string hex() const;
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> position_of;  // position_of[v] = canonical position of v
};

// Canonical form via partition refinement plus backtracking over color
// classes. Colors, when given, must be one value per vertex; relabelings are
// restricted to color-preserving ones and the color class sizes are part of
// the key.
CanonicalForm canonical_form(const Graph& g, std::span<const int> coloring = {});
CanonicalLabeling canonical_labeling(const Graph& g,
                                     std::span<const int> coloring = {});

bool are_isomorphic(const Graph& a, const Graph& b);

// Relabels g so that vertex v moves to canonical position position_of[v].
Graph apply_labeling(const Graph& g, std::span<const int> position_of);

}  // namespace graphreg
