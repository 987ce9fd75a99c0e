#include "pathenergy/graph6.hpp"

#include <algorithm>
#include <vector>

namespace pathenergy {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error(0, "empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kMaxByte) {
      throw Graph6Error(i, "character " + std::to_string(c) + " outside printable range 63..126");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n > kGraph6MaxOrder) throw Graph6Error(0, "long form (n >= 63) is not supported");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() != body + 1) {
    throw Graph6Error(std::min(text.size(), body + 1),
                      "expected " + std::to_string(body + 1) + " bytes for n=" + std::to_string(n) +
                          ", got " + std::to_string(text.size()));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
      if (chunk & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  if (body > 0 && bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text[body]) - kBias;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw Graph6Error(body, "nonzero padding bits");
  }
  return Graph(n, std::move(edges));
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw std::invalid_argument("graph6 short form supports n <= 62, got " + std::to_string(n));
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string out(1 + (bits + 5) / 6, '\0');
  out[0] = static_cast<char>(n + kBias);
  std::vector<int> chunks((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.has_edge(i, j)) chunks[k / 6] |= 1 << (5 - k % 6);
    }
  }
  for (std::size_t c = 0; c < chunks.size(); ++c) out[1 + c] = static_cast<char>(chunks[c] + kBias);
  return out;
}

}  // namespace pathenergy
