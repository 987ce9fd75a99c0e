#pragma once

#include <vector>

#include "pathenergy/graph.hpp"

namespace pathenergy {

/// Symmetric n x n matrix of pairwise maximum internally vertex-disjoint
/// path counts, zero on the diagonal. Stored dense, row-major.
class PathMatrix {
 public:
  PathMatrix() = default;
  explicit PathMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {}

  [[nodiscard]] int order() const noexcept { return n_; }
  [[nodiscard]] int at(int i, int j) const { return entries_.at(index(i, j)); }
  void set(int i, int j, int value) {
    entries_.at(index(i, j)) = value;
    entries_.at(index(j, i)) = value;
  }
  [[nodiscard]] int row_sum(int i) const;
  [[nodiscard]] int max_entry() const;
  [[nodiscard]] const std::vector<int>& entries() const noexcept { return entries_; }
  [[nodiscard]] std::vector<std::vector<int>> rows() const;

  friend bool operator==(const PathMatrix&, const PathMatrix&) = default;

 private:
  [[nodiscard]] std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<int> entries_;
};

/// Maximum number of u-v paths that share only their endpoints.
///
/// Every vertex is split into an in/out pair joined by a unit arc and each
/// edge {a, b} becomes unit arcs out(a)->in(b) and out(b)->in(a); the answer
/// is the max flow from out(u) to in(v). A direct edge u-v carries one unit on
/// its own arc, so adjacent pairs need no special case even though Menger's
/// theorem is usually stated for non-adjacent vertices. Vertices in different
/// components return 0 without running the flow.
///
/// Throws std::invalid_argument when u == v or either vertex is out of range.
int max_disjoint_paths(const Graph& g, Vertex u, Vertex v);

/// Path matrix; pairs are distributed over OpenMP threads when available.
/// The result is identical to path_matrix_serial().
PathMatrix path_matrix(const Graph& g);

/// Single-threaded reference for path_matrix().
PathMatrix path_matrix_serial(const Graph& g);

/// Order limit for brute_force_disjoint_paths().
inline constexpr int kBruteForceMaxOrder = 12;

/// Exhaustive search over families of internally disjoint u-v paths.
/// Shares no code with the flow formulation; used as its test oracle.
/// Throws std::invalid_argument when g.order() > 12, u == v, or a vertex
/// is out of range.
int brute_force_disjoint_paths(const Graph& g, Vertex u, Vertex v);

}  // namespace pathenergy
