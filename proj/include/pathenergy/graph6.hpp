#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pathenergy/graph.hpp"

namespace pathenergy {

/// Largest order representable in the short (single length byte) form.
inline constexpr int kGraph6MaxOrder = 62;

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(std::size_t offset, const std::string& what)
      : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one short-form graph6 string (no header, no newline).
/// The long form (n >= 63) is rejected.
Graph parse_graph6(std::string_view text);

/// Encodes g in short form with zero padding; throws std::invalid_argument
/// when g.order() > 62.
std::string emit_graph6(const Graph& g);

}  // namespace pathenergy
