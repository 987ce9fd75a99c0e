#pragma once

#include <vector>

#include "pathenergy/graph.hpp"

namespace pathenergy {

/// Maximal 2-connected subgraphs and bridges of a graph.
struct BlockDecomposition {
  /// Sorted vertex set per block. Bridges are 2-vertex blocks; isolated
  /// vertices belong to no block.
  std::vector<std::vector<Vertex>> blocks;
  /// Edges of each block, parallel to `blocks`.
  std::vector<std::vector<Edge>> block_edges;
  std::vector<Vertex> articulation_points;
  /// Blocks with at least 3 vertices.
  int nontrivial_block_count = 0;

  [[nodiscard]] int block_count() const noexcept { return static_cast<int>(blocks.size()); }
};

/// Lowpoint DFS (Hopcroft-Tarjan). Blocks are ordered by their smallest
/// edge so the result does not depend on traversal details.
BlockDecomposition block_decomposition(const Graph& g);

/// Connected, at least 3 vertices and no articulation point.
bool is_biconnected(const Graph& g);

}  // namespace pathenergy
