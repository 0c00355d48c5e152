#pragma once

#include <string_view>
#include <vector>

#include "semicat/matrix.hpp"

namespace semicat {

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  Scalar weight;
};

/// Weighted directed graph: `n` on the first line, then `src dst weight`
/// lines. Blank lines and lines starting with `#` are skipped.
struct GraphSpec {
  std::size_t nodes = 0;
  std::vector<Edge> edges;
};

GraphSpec parse_graph(std::string_view text, SemiringKind kind = SemiringKind::Tropical);

/// Entry (i,j) is the sum of the weights of all edges i -> j.
ScalarMatrix adjacency_matrix(const GraphSpec& g, SemiringKind kind = SemiringKind::Tropical);

/// A^0 + A^1 + ... + A^k: over the tropical semiring, the least weight of a
/// path with at most k edges.
ScalarMatrix bounded_paths(const ScalarMatrix& adjacency, std::size_t max_hops);

}  // namespace semicat
