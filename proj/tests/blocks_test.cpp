#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "pathenergy/blocks.hpp"
#include "pathenergy/corpus.hpp"
#include "pathenergy/generators.hpp"

using namespace pathenergy;

namespace {

Graph compact(const std::vector<Vertex>& vertices, const std::vector<Edge>& edges) {
  std::vector<Edge> local;
  auto index = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  for (const auto& [u, v] : edges) local.emplace_back(index(u), index(v));
  return Graph(static_cast<int>(vertices.size()), local);
}

}  // namespace

TEST_CASE("small block decompositions") {
  SUBCASE("path") {
    const auto bd = block_decomposition(path_graph(4));
    CHECK(bd.block_count() == 3);
    CHECK(bd.articulation_points == std::vector<Vertex>{1, 2});
    CHECK(bd.nontrivial_block_count == 0);
  }
  SUBCASE("cycle") {
    const auto bd = block_decomposition(cycle(5));
    CHECK(bd.block_count() == 1);
    CHECK(bd.articulation_points.empty());
    CHECK(bd.nontrivial_block_count == 1);
  }
  SUBCASE("bowtie") {
    const Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    const auto bd = block_decomposition(bowtie);
    CHECK(bd.block_count() == 2);
    CHECK(bd.articulation_points == std::vector<Vertex>{2});
    CHECK(bd.nontrivial_block_count == 2);
    CHECK(bd.blocks[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(bd.blocks[1] == std::vector<Vertex>{2, 3, 4});
  }
  SUBCASE("isolated vertices belong to no block") {
    const Graph g(4, {{0, 1}});
    const auto bd = block_decomposition(g);
    CHECK(bd.block_count() == 1);
    CHECK(bd.articulation_points.empty());
  }
  SUBCASE("triangle with pendant edge") {
    const Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    const auto bd = block_decomposition(g);
    CHECK(bd.block_count() == 2);
    CHECK(bd.nontrivial_block_count == 1);
    CHECK(bd.articulation_points == std::vector<Vertex>{2});
  }
}

TEST_CASE("biconnectivity") {
  CHECK(is_biconnected(cycle(3)));
  CHECK(is_biconnected(complete_graph(5)));
  CHECK(is_biconnected(prism(4)));
  CHECK_FALSE(is_biconnected(complete_graph(2)));
  CHECK_FALSE(is_biconnected(complete_graph(1)));
  CHECK_FALSE(is_biconnected(path_graph(3)));
  CHECK_FALSE(is_biconnected(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
}

TEST_CASE("random trees decompose into bridges") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 20);
    const Graph t = random_tree(n, rng);
    const auto bd = block_decomposition(t);
    CHECK(bd.block_count() == n - 1);
    CHECK(bd.nontrivial_block_count == 0);
    int internal = 0;
    for (Vertex v = 0; v < n; ++v) internal += t.degree(v) > 1;
    CHECK(static_cast<int>(bd.articulation_points.size()) == internal);
  }
}

TEST_CASE("blocks partition the edges") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const Graph g = random_graph(n, 0.25, rng);
    const auto bd = block_decomposition(g);
    std::size_t edges = 0;
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
      edges += bd.block_edges[b].size();
      if (bd.blocks[b].size() >= 3) CHECK(is_biconnected(compact(bd.blocks[b], bd.block_edges[b])));
    }
    CHECK(edges == static_cast<std::size_t>(g.size()));
    // An articulation point lies in at least two blocks.
    for (Vertex a : bd.articulation_points) {
      int count = 0;
      for (const auto& block : bd.blocks) count += std::binary_search(block.begin(), block.end(), a);
      CHECK(count >= 2);
    }
  }
}
