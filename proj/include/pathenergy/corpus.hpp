#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pathenergy/graph.hpp"

namespace pathenergy {

/// Canonical graph6 string: two graphs get the same string iff they are
/// isomorphic. Colour refinement followed by an exhaustive search over
/// orderings within the refined cells, so intended for small orders
/// (n <= 12).
std::string canonical_graph6(const Graph& g);

/// Relabelled copy of g in canonical order.
Graph canonical_form(const Graph& g);

// Isomorphism classes built by vertex augmentation with canonical
// deduplication. Output is sorted by canonical graph6 string.

/// All connected graphs on n vertices (1 <= n <= 9).
std::vector<Graph> connected_graphs(int n);

/// All trees on n vertices (n >= 1).
std::vector<Graph> trees(int n);

/// All connected unicyclic graphs on n vertices (n >= 3).
std::vector<Graph> unicyclic_graphs(int n);

using Rng = std::mt19937_64;

/// Uniform random labelled tree (Pruefer sequence).
Graph random_tree(int n, Rng& rng);

/// Erdos-Renyi G(n, p).
Graph random_graph(int n, double edge_probability, Rng& rng);

/// Random spanning tree plus each remaining pair with the given probability.
Graph random_connected_graph(int n, double extra_probability, Rng& rng);

/// Uniformly random permutation of 0..n-1.
std::vector<Vertex> random_permutation(int n, Rng& rng);

}  // namespace pathenergy
