#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "mostar/error.hpp"

namespace mostar {

using Vertex = std::uint32_t;

// Unordered vertex pair. Graph always stores edges with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph on vertices 0..order-1.
///
/// Edges are kept in canonical form (u < v, sorted lexicographically) and
/// adjacency is stored as compressed rows with each neighbor list sorted.
/// Construct through Graph::build; every operator returns a fresh Graph.
class Graph {
 public:
  /// Validates and normalizes an edge list. Pairs may be given in either
  /// orientation and may repeat; repeats collapse to one edge.
  /// Throws Error with kEmptyGraph (order 0), kSelfLoop or kVertexOutOfRange.
  static Graph build(std::uint32_t order, std::span<const Edge> edges);

  std::uint32_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  std::uint32_t degree(Vertex v) const noexcept {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  std::vector<std::uint32_t> degrees() const;

  bool has_edge(Vertex a, Vertex b) const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  std::uint32_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

/// Single-source BFS hop counts written into `dist` (size order()).
/// Unreached vertices get kUnreached. Returns the number of reached vertices.
/// `queue` is scratch space, resized as needed.
std::uint32_t bfs(const Graph& g, Vertex source, std::span<std::uint32_t> dist,
                  std::vector<Vertex>& queue);

/// K0 and K1 count as connected.
bool is_connected(const Graph& g);

/// All-pairs hop counts of a connected graph, row-major order x order.
class DistanceMatrix {
 public:
  std::uint32_t order() const noexcept { return order_; }

  std::uint32_t at(Vertex a, Vertex b) const noexcept {
    return dist_[static_cast<std::size_t>(a) * order_ + b];
  }

  std::span<const std::uint32_t> row(Vertex a) const noexcept {
    return {dist_.data() + static_cast<std::size_t>(a) * order_, order_};
  }

  std::uint32_t max_entry() const noexcept;

 private:
  friend DistanceMatrix all_pairs_distances(const Graph& g);

  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> dist_;
};

/// One BFS per source, O(s(s+t)). Throws Error(kDisconnected).
DistanceMatrix all_pairs_distances(const Graph& g);

/// b's vertex ids are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// |adj(u) ∩ adj(v)|. For an edge uv this is the number of triangles on uv.
std::uint32_t common_neighbors(const Graph& g, Vertex u, Vertex v);

/// r if every vertex has degree r, otherwise -1.
std::int64_t regular_degree(const Graph& g);

}  // namespace mostar
