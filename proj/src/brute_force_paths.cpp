#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pathenergy/disjoint_paths.hpp"

namespace pathenergy {

namespace {

using Mask = std::uint32_t;

/// Enumerates u-v paths through free vertices and maximizes the number of
/// pairwise internally disjoint ones, memoized on the set of used vertices.
///
/// Only paths without chords are tried (the u-v edge excepted). Any path with
/// a chord can be shortcut to one whose internal vertices are a nonempty
/// subset of the original, so restricting to chordless paths never lowers
/// the optimum.
class PathFamilySearch {
 public:
  PathFamilySearch(const Graph& g, Vertex u, Vertex v) : u_(u), v_(v), adj_(g.order(), 0) {
    for (const auto& [a, b] : g.edges()) {
      adj_[a] |= Mask{1} << b;
      adj_[b] |= Mask{1} << a;
    }
  }

  int solve() {
    const int direct = (adj_[u_] >> v_) & 1;
    return direct + best(bit(u_) | bit(v_));
  }

 private:
  static Mask bit(Vertex w) { return Mask{1} << w; }

  // Upper bound on further indirect paths given the used-vertex set.
  int bound(Mask used) const {
    const int from_u = __builtin_popcount(adj_[u_] & ~used);
    const int from_v = __builtin_popcount(adj_[v_] & ~used);
    return from_u < from_v ? from_u : from_v;
  }

  int best(Mask used) {
    if (auto it = memo_.find(used); it != memo_.end()) return it->second;
    const int cap = bound(used);
    int result = 0;
    if (cap > 0) {
      std::vector<Mask> interiors;
      collect(used, bit(u_), u_, 0, interiors);
      for (Mask interior : interiors) {
        result = std::max(result, 1 + best(used | interior));
        if (result == cap) break;
      }
    }
    memo_.emplace(used, result);
    return result;
  }

  // Depth-first extension of the path ending at `last`. `prefix` holds the
  // path vertices before `last`; `interior` the internal vertices so far.
  void collect(Mask used, Mask path, Vertex last, Mask interior, std::vector<Mask>& out) const {
    const Mask prefix = path & ~bit(last);
    for (Vertex y = 0; y < static_cast<Vertex>(adj_.size()); ++y) {
      if (!((adj_[last] >> y) & 1)) continue;
      if (y == v_) {
        // Reaching v straight from u is the direct edge, counted separately.
        if (last != u_ && (adj_[y] & prefix & ~bit(u_)) == 0) out.push_back(interior);
        continue;
      }
      if ((used | path) & bit(y)) continue;
      if (adj_[y] & prefix) continue;
      collect(used, path | bit(y), y, interior | bit(y), out);
    }
  }

  Vertex u_, v_;
  std::vector<Mask> adj_;
  std::unordered_map<Mask, int> memo_;
};

}  // namespace

int brute_force_disjoint_paths(const Graph& g, Vertex u, Vertex v) {
  const int n = g.order();
  if (n > kBruteForceMaxOrder) {
    throw std::invalid_argument("brute-force oracle limited to n <= " + std::to_string(kBruteForceMaxOrder));
  }
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("disjoint paths need distinct endpoints");
  return PathFamilySearch(g, u, v).solve();
}

}  // namespace pathenergy
