#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace pathenergy {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are stored normalized (u < v) and
/// sorted; adjacency lists are sorted and derived from the edge set, so two
/// graphs with the same edge set compare equal regardless of input order.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on loops, duplicate edges or endpoints
  /// outside [0, n).
  Graph(int n, std::vector<Edge> edges);

  /// Edgeless graph on n vertices.
  static Graph empty(int n) { return Graph(n, {}); }

  [[nodiscard]] int order() const noexcept { return n_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(edges_.size()); }

  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;

  /// Relabels vertex v as perm[v].
  [[nodiscard]] Graph relabeled(std::span<const Vertex> perm) const;

  /// Returns a copy with edge {u, v} added; throws if it already exists.
  [[nodiscard]] Graph with_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

std::vector<int> degrees(const Graph& g);

/// 0 for the graph without vertices.
int max_degree(const Graph& g);

bool is_connected(const Graph& g);

/// Vertex sets of the connected components, each sorted, ordered by
/// smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Component id per vertex, numbered as in connected_components().
std::vector<int> component_labels(const Graph& g);

/// Length of a shortest cycle, 0 when the graph is acyclic.
int girth(const Graph& g);

}  // namespace pathenergy
