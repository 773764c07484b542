#include "mostar/graph.hpp"

#include <algorithm>
#include <string>

namespace mostar {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kSelfLoop: return "SelfLoop";
    case Errc::kVertexOutOfRange: return "VertexOutOfRange";
    case Errc::kEmptyGraph: return "EmptyGraph";
    case Errc::kDisconnected: return "Disconnected";
    case Errc::kBadArity: return "BadArity";
    case Errc::kBadParam: return "BadParam";
    case Errc::kUnknownClaim: return "UnknownClaim";
    case Errc::kParse: return "Parse";
    case Errc::kNotDivisible: return "NotDivisible";
  }
  return "Unknown";
}

Graph Graph::build(std::uint32_t order, std::span<const Edge> edges) {
  if (order == 0) throw Error(Errc::kEmptyGraph, "graph order must be at least 1");

  Graph g;
  g.order_ = order;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= order || e.v >= order) {
      throw Error(Errc::kVertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") out of range for order " + std::to_string(order));
    }
    if (e.u == e.v) {
      throw Error(Errc::kSelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.offsets_.assign(static_cast<std::size_t>(order) + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];

  g.neighbors_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Canonical edge order fills every row in ascending order except for the
  // entries contributed as the larger endpoint, so sort each row afterwards.
  for (const Edge& e : g.edges_) {
    g.neighbors_[cursor[e.u]++] = e.v;
    g.neighbors_[cursor[e.v]++] = e.u;
  }
  for (Vertex v = 0; v < order; ++v) {
    std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

std::vector<std::uint32_t> Graph::degrees() const {
  std::vector<std::uint32_t> out(order_);
  for (Vertex v = 0; v < order_; ++v) out[v] = degree(v);
  return out;
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
  if (a >= order_ || b >= order_) return false;
  auto row = neighbors(a);
  return std::binary_search(row.begin(), row.end(), b);
}

std::uint32_t bfs(const Graph& g, Vertex source, std::span<std::uint32_t> dist,
                  std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.resize(g.order());
  std::size_t head = 0;
  std::size_t tail = 0;
  dist[source] = 0;
  queue[tail++] = source;
  while (head < tail) {
    const Vertex x = queue[head++];
    const std::uint32_t next = dist[x] + 1;
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreached) {
        dist[y] = next;
        queue[tail++] = y;
      }
    }
  }
  return static_cast<std::uint32_t>(tail);
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<std::uint32_t> dist(g.order());
  std::vector<Vertex> queue;
  return bfs(g, 0, dist, queue) == g.order();
}

std::uint32_t DistanceMatrix::max_entry() const noexcept {
  return dist_.empty() ? 0 : *std::max_element(dist_.begin(), dist_.end());
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix d;
  const std::uint32_t n = g.order();
  d.order_ = n;
  d.dist_.resize(static_cast<std::size_t>(n) * n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    auto row = std::span<std::uint32_t>(d.dist_).subspan(static_cast<std::size_t>(s) * n, n);
    if (bfs(g, s, row, queue) != n) {
      throw Error(Errc::kDisconnected, "graph is disconnected");
    }
  }
  return d;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  edges.reserve(a.size() + b.size());
  const Vertex shift = a.order();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph::build(a.order() + b.order(), edges);
}

std::uint32_t common_neighbors(const Graph& g, Vertex u, Vertex v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::uint32_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::int64_t regular_degree(const Graph& g) {
  const std::uint32_t r = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != r) return -1;
  }
  return r;
}

}  // namespace mostar
