#include "mostar/invariants.hpp"

#include <algorithm>
#include <cstdlib>

namespace mostar {
namespace {

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

}  // namespace

std::vector<EdgeContribution> edge_contributions(const Graph& g, const DistanceMatrix& d) {
  std::vector<EdgeContribution> out;
  out.reserve(g.size());
  for (const Edge& e : g.edges()) {
    auto du = d.row(e.u);
    auto dv = d.row(e.v);
    std::uint64_t nu = 0;
    std::uint64_t nv = 0;
    for (std::size_t w = 0; w < du.size(); ++w) {
      nu += du[w] < dv[w];
      nv += dv[w] < du[w];
    }
    out.push_back({e, nu, nv, abs_diff(nu, nv)});
  }
  return out;
}

std::vector<EdgeContribution> edge_contributions(const Graph& g) {
  const std::uint32_t n = g.order();
  const std::size_t t = g.size();
  // Structure-of-arrays copy of the endpoints keeps the per-source sweep tight.
  std::vector<Vertex> eu(t);
  std::vector<Vertex> ev(t);
  for (std::size_t i = 0; i < t; ++i) {
    eu[i] = g.edges()[i].u;
    ev[i] = g.edges()[i].v;
  }
  std::vector<std::uint32_t> nu(t, 0);
  std::vector<std::uint32_t> nv(t, 0);
  std::vector<std::uint32_t> dist(n);
  std::vector<Vertex> queue;

  // d(w,u) < d(w,v) is read off the BFS tree rooted at w, so each source
  // settles its vote on every edge at once.
  for (Vertex w = 0; w < n; ++w) {
    if (bfs(g, w, dist, queue) != n) throw Error(Errc::kDisconnected, "graph is disconnected");
    for (std::size_t i = 0; i < t; ++i) {
      const std::uint32_t a = dist[eu[i]];
      const std::uint32_t b = dist[ev[i]];
      nu[i] += a < b;
      nv[i] += b < a;
    }
  }

  std::vector<EdgeContribution> out;
  out.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    out.push_back({g.edges()[i], nu[i], nv[i], abs_diff(nu[i], nv[i])});
  }
  return out;
}

std::int64_t mostar(const Graph& g) {
  std::int64_t total = 0;
  for (const auto& c : edge_contributions(g)) total += static_cast<std::int64_t>(c.contribution);
  return total;
}

std::int64_t albertson_irregularity(const Graph& g) {
  std::int64_t total = 0;
  for (const Edge& e : g.edges()) {
    total += std::abs(static_cast<std::int64_t>(g.degree(e.u)) - g.degree(e.v));
  }
  return total;
}

std::int64_t total_irregularity(const Graph& g) {
  // With degrees sorted ascending, the i-th smallest appears i times as the
  // larger element of a pair and (n-1-i) times as the smaller one.
  std::vector<std::uint32_t> deg = g.degrees();
  std::sort(deg.begin(), deg.end());
  const auto n = static_cast<std::int64_t>(deg.size());
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < n; ++i) total += static_cast<std::int64_t>(deg[i]) * (2 * i - (n - 1));
  return total;
}

}  // namespace mostar
