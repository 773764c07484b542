#pragma once

#include <cstdint>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar {

/// Per-edge summand of the Mostar index. n_u counts vertices strictly closer
/// to u than to v, u itself included; equidistant vertices count for neither.
struct EdgeContribution {
  Edge edge;
  std::uint64_t n_u = 0;
  std::uint64_t n_v = 0;
  std::uint64_t contribution = 0;  // |n_u - n_v|

  friend bool operator==(const EdgeContribution&, const EdgeContribution&) = default;
};

/// One record per edge, in g.edges() order. O(t*s) given the matrix.
std::vector<EdgeContribution> edge_contributions(const Graph& g, const DistanceMatrix& d);

/// Same result without materializing the matrix: one BFS per source, O(s+t)
/// memory. Throws Error(kDisconnected).
std::vector<EdgeContribution> edge_contributions(const Graph& g);

/// Sum of |n_u - n_v| over all edges. Throws Error(kDisconnected).
std::int64_t mostar(const Graph& g);

/// Sum over edges of |deg(u) - deg(v)|. Defined for disconnected graphs.
std::int64_t albertson_irregularity(const Graph& g);

/// Sum over unordered vertex pairs of |deg(u) - deg(v)|.
std::int64_t total_irregularity(const Graph& g);

}  // namespace mostar
