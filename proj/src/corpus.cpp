#include "pathenergy/corpus.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

#include "pathenergy/generators.hpp"
#include "pathenergy/graph6.hpp"

namespace pathenergy {

namespace {

using Row = std::uint32_t;

/// Stable colouring by iterated neighbour-colour multisets, starting from
/// degrees. Colours are ranks of signatures, so the result is invariant
/// under relabelling.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    const int now = static_cast<int>(sorted.size());
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

/// Finds the vertex order (respecting the colour cells) whose sequence of
/// back-adjacency rows is lexicographically largest.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.order()), adj_(g.order(), 0) {
    if (n_ > 31) throw std::invalid_argument("canonical labelling limited to n <= 31");
    for (const auto& [u, v] : g.edges()) {
      adj_[u] |= Row{1} << v;
      adj_[v] |= Row{1} << u;
    }
    const auto colour = refine_colours(g);
    std::vector<Vertex> by_colour(n_);
    for (Vertex v = 0; v < n_; ++v) by_colour[v] = v;
    std::stable_sort(by_colour.begin(), by_colour.end(),
                     [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });
    cell_of_position_.resize(n_);
    for (int k = 0; k < n_; ++k) cell_of_position_[k] = colour[by_colour[k]];
    colour_ = colour;
    order_.resize(n_);
    rows_.resize(n_);
    best_rows_.resize(n_);
  }

  std::vector<Vertex> run() {
    if (n_ > 0) search(0, 0);
    return best_order_;
  }

 private:
  // -1, 0, 1 as rows_[0..k) compares to best_rows_[0..k).
  int compare_prefix(int k) const {
    for (int j = 0; j < k; ++j)
      if (rows_[j] != best_rows_[j]) return rows_[j] < best_rows_[j] ? -1 : 1;
    return 0;
  }

  void search(int k, Row used) {
    if (k == n_) {
      if (best_order_.empty() || compare_prefix(n_) > 0) {
        best_rows_ = rows_;
        best_order_ = order_;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if ((used >> v) & 1 || colour_[v] != cell_of_position_[k]) continue;
      Row row = 0;
      for (int j = 0; j < k; ++j)
        if ((adj_[v] >> order_[j]) & 1) row |= Row{1} << (k - 1 - j);
      if (!best_order_.empty()) {
        // best_rows_ may have changed in an earlier sibling, so recompare.
        const int prefix = compare_prefix(k);
        if (prefix < 0) return;
        if (prefix == 0 && row < best_rows_[k]) continue;
      }
      rows_[k] = row;
      order_[k] = v;
      search(k + 1, used | (Row{1} << v));
    }
  }

  int n_;
  std::vector<Row> adj_;
  std::vector<int> colour_;
  std::vector<int> cell_of_position_;
  std::vector<Vertex> order_;
  std::vector<Row> rows_;
  std::vector<Row> best_rows_;
  std::vector<Vertex> best_order_;
};

void check_order(const char* what, int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw std::invalid_argument(std::string(what) + ": n must be in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
}

/// Deduplicates by canonical string and returns canonical representatives.
class ClassSet {
 public:
  void add(const Graph& g) { seen_.insert(canonical_graph6(g)); }
  std::vector<Graph> graphs() const {
    std::vector<Graph> out;
    out.reserve(seen_.size());
    for (const auto& s : seen_) out.push_back(parse_graph6(s));
    return out;
  }

 private:
  std::set<std::string> seen_;
};

Graph add_vertex(const Graph& g, std::uint32_t neighbour_mask) {
  auto edges = g.edges();
  const int n = g.order();
  for (Vertex v = 0; v < n; ++v)
    if ((neighbour_mask >> v) & 1) edges.emplace_back(v, n);
  return Graph(n + 1, std::move(edges));
}

}  // namespace

Graph canonical_form(const Graph& g) {
  const auto order = CanonicalSearch(g).run();
  std::vector<Vertex> perm(g.order());
  for (int k = 0; k < g.order(); ++k) perm[order[k]] = k;
  return g.relabeled(perm);
}

std::string canonical_graph6(const Graph& g) { return emit_graph6(canonical_form(g)); }

std::vector<Graph> connected_graphs(int n) {
  check_order("connected_graphs", n, 1, 9);
  // Every connected graph has a vertex whose removal leaves it connected.
  std::vector<Graph> level{complete_graph(1)};
  for (int k = 2; k <= n; ++k) {
    ClassSet next;
    for (const auto& g : level)
      for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << g.order()); ++mask) next.add(add_vertex(g, mask));
    level = next.graphs();
  }
  return level;
}

std::vector<Graph> trees(int n) {
  check_order("trees", n, 1, 16);
  std::vector<Graph> level{complete_graph(1)};
  for (int k = 2; k <= n; ++k) {
    ClassSet next;
    for (const auto& g : level)
      for (Vertex v = 0; v < g.order(); ++v) next.add(add_vertex(g, std::uint32_t{1} << v));
    level = next.graphs();
  }
  return level;
}

std::vector<Graph> unicyclic_graphs(int n) {
  check_order("unicyclic_graphs", n, 3, 16);
  // Removing a leaf keeps a unicyclic graph unicyclic; only the cycle has none.
  std::vector<Graph> level{cycle(3)};
  for (int k = 4; k <= n; ++k) {
    ClassSet next;
    next.add(cycle(k));
    for (const auto& g : level)
      for (Vertex v = 0; v < g.order(); ++v) next.add(add_vertex(g, std::uint32_t{1} << v));
    level = next.graphs();
  }
  return level;
}

Graph random_tree(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_tree: n >= 1");
  if (n <= 2) return path_graph(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  std::vector<int> count(n, 0);
  for (auto& c : code) ++count[c = pick(rng)];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (count[v] == 0) leaves.push(v);
  std::vector<Edge> edges;
  for (int c : code) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--count[c] == 0) leaves.push(c);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph(n, std::move(edges));
}

Graph random_graph(int n, double edge_probability, Rng& rng) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph random_connected_graph(int n, double extra_probability, Rng& rng) {
  const Graph tree = random_tree(n, rng);
  std::bernoulli_distribution coin(extra_probability);
  auto edges = tree.edges();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (!tree.has_edge(i, j) && coin(rng)) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

std::vector<Vertex> random_permutation(int n, Rng& rng) {
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  // Fisher-Yates with an explicit distribution; std::shuffle's draw sequence
  // is implementation-defined.
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(perm[i], perm[pick(rng)]);
  }
  return perm;
}

}  // namespace pathenergy
