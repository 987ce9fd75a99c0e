#include <doctest.h>

#include <set>

#include "pathenergy/blocks.hpp"
#include "pathenergy/corpus.hpp"
#include "pathenergy/generators.hpp"
#include "pathenergy/graph6.hpp"

using namespace pathenergy;

// Reference counts of unlabeled graphs (OEIS A001349, A000055, A001429).
TEST_CASE("connected graph counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(connected_graphs(n).size() == expected[n - 1]);
}

TEST_CASE("tree counts") {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
  for (int n = 1; n <= 11; ++n) CHECK(trees(n).size() == expected[n - 1]);
}

TEST_CASE("unicyclic graph counts") {
  const std::vector<std::size_t> expected{1, 2, 5, 13, 33, 89, 240};
  for (int n = 3; n <= 9; ++n) CHECK(unicyclic_graphs(n).size() == expected[n - 3]);
}

TEST_CASE("biconnected counts on the connected corpus") {
  const std::vector<int> expected{1, 3, 10, 56, 468};
  for (int n = 3; n <= 7; ++n) {
    int count = 0;
    for (const Graph& g : connected_graphs(n)) count += is_biconnected(g);
    CHECK(count == expected[n - 3]);
  }
}

TEST_CASE("corpus members are distinct and well formed") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> seen;
    for (const Graph& g : connected_graphs(n)) {
      CHECK(is_connected(g));
      CHECK(seen.insert(canonical_graph6(g)).second);
    }
  }
  for (const Graph& t : trees(8)) CHECK(t.size() == 7);
  for (const Graph& u : unicyclic_graphs(7)) {
    CHECK(is_connected(u));
    CHECK(u.size() == 7);
  }
}

TEST_CASE("canonical form is a relabeling invariant") {
  Rng rng(314);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = random_graph(n, 0.4, rng);
    const Graph h = g.relabeled(random_permutation(n, rng));
    CHECK(canonical_graph6(g) == canonical_graph6(h));
    CHECK(emit_graph6(canonical_form(g)) == canonical_graph6(g));
  }
  CHECK(canonical_graph6(cycle(6)) != canonical_graph6(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
  CHECK(canonical_graph6(prism(3)) != canonical_graph6(complete_bipartite(3, 3)));
}

TEST_CASE("random generators") {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph t = random_tree(n, rng);
    CHECK(t.size() == n - 1);
    CHECK(is_connected(t));
    CHECK(is_connected(random_connected_graph(n, 0.2, rng)));
    auto perm = random_permutation(n, rng);
    std::sort(perm.begin(), perm.end());
    for (int i = 0; i < n; ++i) CHECK(perm[i] == i);
  }
  Rng a(9);
  Rng b(9);
  CHECK(random_graph(15, 0.5, a) == random_graph(15, 0.5, b));
  CHECK(random_graph(6, 0.0, a).size() == 0);
  CHECK(random_graph(6, 1.0, a).size() == 15);
}
