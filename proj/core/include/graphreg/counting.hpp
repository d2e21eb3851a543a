#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "graphreg/graph_type.hpp"

namespace graphreg {

// Number of embeddings of theta into gamma extending the base embedding
// kappa (kappa[i] is the image of base position i). Embeddings are ordered
// injective maps preserving adjacency and non-adjacency. Throws when kappa
// is not an embedding of the base graph.
std::uint64_t count_extensions(const Graph& gamma, const GraphType& t,
                               std::span<const int> kappa);

// All embeddings of the base graph of t into gamma, as ordered tuples in
// lexicographic order.
std::vector<std::vector<int>> base_embeddings(const Graph& gamma,
                                              const GraphType& t);

// Calls fn with the full image (theta vertex -> gamma vertex) of every
// extension of kappa.
void for_each_extension(const Graph& gamma, const GraphType& t,
                        std::span<const int> kappa,
                        const std::function<void(std::span<const int>)>& fn);

// Total number of embeddings of pattern into gamma (all ordered maps).
std::uint64_t count_embeddings(const Graph& gamma, const Graph& pattern);

// Number of pairs (mu1, mu2) where mu1 embeds theta1 extending kappa and
// mu2 embeds theta2 with mu2 agreeing with mu1 on the glued base: mu2 of
// base position i equals mu1(e[i]). Computed by nested extension search.
std::uint64_t quotient_cocone_count(const Graph& gamma, const GraphType& t1,
                                    const GraphType& t2, std::span<const int> e,
                                    std::span<const int> kappa);

// Complements theta while keeping the base tuple.
GraphType complement_type(const GraphType& t);

}  // namespace graphreg
