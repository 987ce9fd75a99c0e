#include "pathenergy/blocks.hpp"

#include <algorithm>

namespace pathenergy {

namespace {

struct LowpointSearch {
  const Graph& g;
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<bool> is_cut;
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> blocks;
  int timer = 0;

  explicit LowpointSearch(const Graph& graph)
      : g(graph), disc(graph.order(), -1), low(graph.order(), 0), is_cut(graph.order(), false) {}

  void pop_block(const Edge& until) {
    std::vector<Edge> block;
    while (true) {
      Edge e = stack.back();
      stack.pop_back();
      block.push_back(e);
      if (e == until) break;
    }
    blocks.push_back(std::move(block));
  }

  void visit(Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(v)) {
      if (disc[w] < 0) {
        ++children;
        stack.emplace_back(v, w);
        visit(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent >= 0 || children > 1) is_cut[v] = true;
          pop_block({v, w});
        }
      } else if (w != parent && disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  LowpointSearch search(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (search.disc[v] < 0) search.visit(v, -1);

  for (auto& block : search.blocks) {
    for (auto& [u, v] : block)
      if (u > v) std::swap(u, v);
    std::sort(block.begin(), block.end());
  }
  std::sort(search.blocks.begin(), search.blocks.end());

  BlockDecomposition out;
  for (auto& block : search.blocks) {
    std::vector<Vertex> verts;
    for (const auto& [u, v] : block) {
      verts.push_back(u);
      verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() >= 3) ++out.nontrivial_block_count;
    out.blocks.push_back(std::move(verts));
    out.block_edges.push_back(std::move(block));
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (search.is_cut[v]) out.articulation_points.push_back(v);
  return out;
}

bool is_biconnected(const Graph& g) {
  if (g.order() < 3) return false;
  const auto bd = block_decomposition(g);
  return bd.block_count() == 1 && static_cast<int>(bd.blocks.front().size()) == g.order();
}

}  // namespace pathenergy
