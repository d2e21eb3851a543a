#pragma once

// Independent brute-force oracles for the test suites. Everything here
// enumerates raw label space and never calls the pruned production paths it
// is checking.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "graphreg/graph.hpp"
#include "graphreg/graph_type.hpp"

namespace oracles {

using graphreg::Graph;
using graphreg::GraphType;

// Minimal adjacency bitstring over all color-respecting relabelings.
std::string min_matrix_key(const Graph& g, std::span<const int> colors = {});

// Isomorphism by exhaustive bijection search.
bool iso_bruteforce(const Graph& a, const Graph& b);

// All embeddings of pattern into host as ordered tuples, full pattern check
// at the leaves only.
std::vector<std::vector<int>> embeddings_bruteforce(const Graph& host,
                                                    const Graph& pattern);

// Extensions of kappa along the base of t, by filtering embeddings_bruteforce.
std::uint64_t count_extensions_bruteforce(const Graph& gamma, const GraphType& t,
                                          std::span<const int> kappa);

// Pairs (mu1, mu2) with mu1 extending kappa and mu2 agreeing on the glued
// base, both enumerated independently.
std::uint64_t cocone_pairs_bruteforce(const Graph& gamma, const GraphType& t1,
                                      const GraphType& t2, std::span<const int> e,
                                      std::span<const int> kappa);

// t-vertex condition straight from its definition: counts of <= t-vertex
// induced subgraphs over a fixed vertex pair, per isomorphism type fixing
// the pair, compared across the three pair classes (equal / adjacent /
// non-adjacent).
bool t_vertex_direct(const Graph& g, int t);

// Domination by exhaustive search over all vertex maps.
bool dominates_bruteforce(const GraphType& t1, const GraphType& t2);

// Verifies a clique list: every entry maximal, every maximal clique present.
bool clique_list_valid_bruteforce(const Graph& g,
                                  const std::vector<std::vector<int>>& cliques);

Graph random_graph(std::mt19937& rng, int n, double edge_probability = 0.5);

}  // namespace oracles
