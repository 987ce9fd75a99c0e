#include "pathenergy/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pathenergy {

namespace {

void require_min(const char* family, int value, int min) {
  if (value < min) {
    throw std::invalid_argument(std::string(family) + " requires parameter >= " + std::to_string(min) +
                                ", got " + std::to_string(value));
  }
}

void add_cycle(std::vector<Edge>& edges, int first, int len) {
  for (int i = 0; i < len; ++i) edges.emplace_back(first + i, first + (i + 1) % len);
}

}  // namespace

Graph complete_graph(int p) {
  require_min("complete", p, 1);
  std::vector<Edge> edges;
  for (int j = 1; j < p; ++j)
    for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
  return Graph(p, std::move(edges));
}

Graph complete_bipartite(int p, int q) {
  require_min("complete_bipartite", p, 1);
  require_min("complete_bipartite", q, 1);
  if (p > q) std::swap(p, q);
  std::vector<Edge> edges;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b) edges.emplace_back(a, p + b);
  return Graph(p + q, std::move(edges));
}

Graph cycle(int p) {
  require_min("cycle", p, 3);
  std::vector<Edge> edges;
  add_cycle(edges, 0, p);
  return Graph(p, std::move(edges));
}

Graph path_graph(int p) {
  require_min("path", p, 1);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < p; ++i) edges.emplace_back(i, i + 1);
  return Graph(p, std::move(edges));
}

Graph star(int p) {
  require_min("star", p, 1);
  std::vector<Edge> edges;
  for (int i = 1; i < p; ++i) edges.emplace_back(0, i);
  return Graph(p, std::move(edges));
}

Graph hypercube(int d) {
  require_min("hypercube", d, 1);
  if (d > 20) throw std::invalid_argument("hypercube dimension too large");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int bit = 0; bit < d; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph(n, std::move(edges));
}

Graph wheel(int p) {
  require_min("wheel", p, 4);
  std::vector<Edge> edges;
  add_cycle(edges, 1, p - 1);
  for (int i = 1; i < p; ++i) edges.emplace_back(0, i);
  return Graph(p, std::move(edges));
}

Graph prism(int p) {
  require_min("prism", p, 3);
  std::vector<Edge> edges;
  add_cycle(edges, 0, p);
  add_cycle(edges, p, p);
  for (int i = 0; i < p; ++i) edges.emplace_back(i, p + i);
  return Graph(2 * p, std::move(edges));
}

Graph antiprism(int p) {
  require_min("antiprism", p, 3);
  std::vector<Edge> edges;
  add_cycle(edges, 0, p);
  add_cycle(edges, p, p);
  for (int i = 0; i < p; ++i) {
    edges.emplace_back(i, p + i);
    edges.emplace_back(i, p + (i + 1) % p);
  }
  return Graph(2 * p, std::move(edges));
}

Graph harary_graph(int r, int k) {
  require_min("harary", r, 1);
  if (k <= r) throw std::invalid_argument("harary graph needs k > r");
  if ((r * k) % 2 != 0) throw std::invalid_argument("harary graph needs r * k even");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int jump = 1; jump <= r / 2; ++jump) edges.emplace_back(i, (i + jump) % k);
  if (r % 2 == 1)
    for (int i = 0; i < k / 2; ++i) edges.emplace_back(i, i + k / 2);
  return Graph(k, std::move(edges));
}

Graph line_graph(const Graph& g) {
  const auto& e = g.edges();
  std::vector<std::vector<int>> incident(g.order());
  for (int k = 0; k < static_cast<int>(e.size()); ++k) {
    incident[e[k].first].push_back(k);
    incident[e[k].second].push_back(k);
  }
  std::vector<Edge> edges;
  for (const auto& list : incident)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) edges.emplace_back(list[a], list[b]);
  // Two distinct edges of a simple graph share at most one endpoint, so no
  // pair is emitted twice.
  return Graph(static_cast<int>(e.size()), std::move(edges));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int hn = h.order();
  std::vector<Edge> edges;
  for (int a = 0; a < g.order(); ++a)
    for (const auto& [x, y] : h.edges()) edges.emplace_back(a * hn + x, a * hn + y);
  for (const auto& [a, b] : g.edges())
    for (int x = 0; x < hn; ++x) edges.emplace_back(a * hn + x, b * hn + x);
  return Graph(g.order() * hn, std::move(edges));
}

}  // namespace pathenergy
