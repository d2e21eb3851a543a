#pragma once

#include <functional>

#include "graphreg/transversal.hpp"

namespace graphreg {

using GraphPredicate = std::function<bool(const Graph&)>;
using TypePredicate = std::function<bool(const GraphType&)>;

inline constexpr int max_enumeration_order = 8;

// One canonical representative per isomorphism class of graphs on n
// vertices, built by canonical augmentation: each parent is extended by one
// vertex per automorphism class of neighborhoods, and a child survives only
// when the new vertex lies in the canonical-deletion orbit. `filter`
// restricts the output; `hereditary_prune` (when set) must be a property
// closed under taking induced subgraphs and discards failing children along
// with their whole subtree. Subtrees are explored in parallel over the
// parents of each level; the merge deduplicates by canonical key and the
// output is sorted by it, so results are deterministic.
std::vector<Graph> enumerate_graphs(int n, const GraphPredicate& filter = {},
                                    const GraphPredicate& hereditary_prune = {},
                                    int threads = 0);

// All isomorphism classes of graph-types of order exactly (m, n) passing
// the filters. theta_filter restricts the underlying graph (and doubles as
// the hereditary pruning predicate when hereditary_theta is set).
TypeTransversal enumerate_types(int m, int n,
                                const GraphPredicate& theta_filter = {},
                                const TypePredicate& type_filter = {},
                                std::vector<std::string> filter_names = {},
                                bool hereditary_theta = false, int threads = 0);

// All (3,l)-irreducible types of order (3,l) whose theta has no induced
// K4 minus an edge.
TypeTransversal irreducible_k4e_free_types(int l);

// Types of order (2,t+1) whose closure is 3-connected: the reduced
// candidate list for upgrading the t-vertex condition to t+1.
TypeTransversal reduced_tvc_list(int t);

// Memoized unfiltered transversal of order (m, n).
const TypeTransversal& all_types_cached(int m, int n);

// Memoized (m,n)-irreducible types of order (m, n) with base size exactly m.
const TypeTransversal& irreducible_level_types_cached(int m, int n);

}  // namespace graphreg
