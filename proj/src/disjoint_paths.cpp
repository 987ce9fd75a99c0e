#include "pathenergy/disjoint_paths.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace pathenergy {

int PathMatrix::row_sum(int i) const {
  int s = 0;
  for (int j = 0; j < n_; ++j) s += at(i, j);
  return s;
}

int PathMatrix::max_entry() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

std::vector<std::vector<int>> PathMatrix::rows() const {
  std::vector<std::vector<int>> out(n_);
  for (int i = 0; i < n_; ++i) out[i].assign(entries_.begin() + i * n_, entries_.begin() + (i + 1) * n_);
  return out;
}

namespace {

/// Unit-capacity network on the split graph; built once per graph and reused
/// for every terminal pair.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : head_(2 * g.order(), -1) {
    for (Vertex w = 0; w < g.order(); ++w) add_arc(in(w), out(w));
    for (const auto& [a, b] : g.edges()) {
      add_arc(out(a), in(b));
      add_arc(out(b), in(a));
    }
    parent_arc_.resize(head_.size());
    queue_.reserve(head_.size());
  }

  /// The split arcs of u and v are never on an augmenting path: out(u) is the
  /// source and in(v) the sink, so in(u) and out(v) are dead ends.
  int max_flow(Vertex u, Vertex v, int limit) {
    std::fill(flow_.begin(), flow_.end(), 0);
    const int source = out(u);
    const int sink = in(v);
    int total = 0;
    while (total < limit && augment(source, sink)) ++total;
    return total;
  }

 private:
  static int in(Vertex w) { return 2 * w; }
  static int out(Vertex w) { return 2 * w + 1; }

  void add_arc(int from, int to) {
    // Forward arc at even index, residual twin at odd index.
    for (auto [a, b, cap] : {std::tuple{from, to, 1}, std::tuple{to, from, 0}}) {
      to_.push_back(b);
      cap_.push_back(cap);
      flow_.push_back(0);
      next_.push_back(head_[a]);
      head_[a] = static_cast<int>(to_.size()) - 1;
    }
  }

  bool augment(int source, int sink) {
    std::fill(parent_arc_.begin(), parent_arc_.end(), -1);
    queue_.clear();
    queue_.push_back(source);
    parent_arc_[source] = -2;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const int x = queue_[qi];
      for (int arc = head_[x]; arc >= 0; arc = next_[arc]) {
        const int y = to_[arc];
        if (parent_arc_[y] != -1 || cap_[arc] - flow_[arc] <= 0) continue;
        parent_arc_[y] = arc;
        if (y == sink) {
          for (int node = sink; node != source;) {
            const int a = parent_arc_[node];
            flow_[a] += 1;
            flow_[a ^ 1] -= 1;
            node = to_[a ^ 1];
          }
          return true;
        }
        queue_.push_back(y);
      }
    }
    return false;
  }

  std::vector<int> head_;
  std::vector<int> to_, cap_, flow_, next_;
  std::vector<int> parent_arc_;
  std::vector<int> queue_;
};

void check_pair(const Graph& g, Vertex u, Vertex v) {
  const int n = g.order();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw std::invalid_argument("vertex pair (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for n=" + std::to_string(n));
  }
  if (u == v) throw std::invalid_argument("disjoint paths need distinct endpoints");
}

int pair_value(const Graph& g, SplitNetwork& net, const std::vector<int>& comp, Vertex u, Vertex v) {
  if (comp[u] != comp[v]) return 0;
  return net.max_flow(u, v, std::min(g.degree(u), g.degree(v)));
}

}  // namespace

int max_disjoint_paths(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  SplitNetwork net(g);
  return pair_value(g, net, component_labels(g), u, v);
}

PathMatrix path_matrix_serial(const Graph& g) {
  const int n = g.order();
  PathMatrix pm(n);
  SplitNetwork net(g);
  const auto comp = component_labels(g);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pm.set(i, j, pair_value(g, net, comp, i, j));
  return pm;
}

PathMatrix path_matrix(const Graph& g) {
  const int n = g.order();
  PathMatrix pm(n);
  const auto comp = component_labels(g);
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  std::vector<int> values(static_cast<std::size_t>(std::max(0LL, pairs)));

#pragma omp parallel if (pairs > 64)
  {
    SplitNetwork net(g);
#pragma omp for schedule(dynamic, 16)
    for (long long k = 0; k < pairs; ++k) {
      // Unrank k into (i, j), i < j, row-major over the upper triangle.
      long long i = 0, rem = k;
      while (rem >= n - 1 - i) {
        rem -= n - 1 - i;
        ++i;
      }
      const long long j = i + 1 + rem;
      values[k] = pair_value(g, net, comp, static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }

  long long k = 0;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pm.set(i, j, values[k++]);
  return pm;
}

}  // namespace pathenergy
