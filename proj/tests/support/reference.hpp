#pragma once

// Slow, independent re-implementations used as test oracles. Everything here
// works on a dense adjacency matrix and never calls into the library except
// to read or produce a mostar::Graph.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "mostar/graph.hpp"

namespace ref {

struct Dense {
  int n = 0;
  std::vector<std::vector<char>> adj;

  explicit Dense(int order) : n(order), adj(order, std::vector<char>(order, 0)) {}

  void link(int a, int b) {
    adj[a][b] = 1;
    adj[b][a] = 1;
  }

  int degree(int v) const {
    int d = 0;
    for (int w = 0; w < n; ++w) d += adj[v][w];
    return d;
  }
};

inline Dense from_graph(const mostar::Graph& g) {
  Dense d(static_cast<int>(g.order()));
  for (const auto& e : g.edges()) d.link(static_cast<int>(e.u), static_cast<int>(e.v));
  return d;
}

inline mostar::Graph to_graph(const Dense& d) {
  std::vector<mostar::Edge> edges;
  for (int a = 0; a < d.n; ++a) {
    for (int b = a + 1; b < d.n; ++b) {
      if (d.adj[a][b]) edges.push_back({static_cast<mostar::Vertex>(a), static_cast<mostar::Vertex>(b)});
    }
  }
  return mostar::Graph::build(static_cast<std::uint32_t>(d.n), edges);
}

// Build a graph from an adjacency predicate over 0..n-1.
inline mostar::Graph from_predicate(int n, const std::function<bool(int, int)>& adjacent) {
  Dense d(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (adjacent(a, b)) d.link(a, b);
    }
  }
  return to_graph(d);
}

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline std::vector<std::vector<int>> floyd_warshall(const Dense& g) {
  std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, kInf));
  for (int a = 0; a < g.n; ++a) {
    d[a][a] = 0;
    for (int b = 0; b < g.n; ++b) {
      if (g.adj[a][b]) d[a][b] = 1;
    }
  }
  for (int k = 0; k < g.n; ++k) {
    for (int i = 0; i < g.n; ++i) {
      for (int j = 0; j < g.n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

inline bool connected(const Dense& g) {
  const auto d = floyd_warshall(g);
  for (int v = 0; v < g.n; ++v) {
    if (d[0][v] >= kInf) return false;
  }
  return true;
}

// Straight from the definition: for every edge count the vertices strictly
// closer to either end.
inline std::optional<std::int64_t> mostar(const Dense& g) {
  const auto d = floyd_warshall(g);
  for (int v = 0; v < g.n; ++v) {
    if (d[0][v] >= kInf) return std::nullopt;
  }
  std::int64_t total = 0;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (!g.adj[u][v]) continue;
      std::int64_t nu = 0;
      std::int64_t nv = 0;
      for (int w = 0; w < g.n; ++w) {
        nu += d[w][u] < d[w][v];
        nv += d[w][v] < d[w][u];
      }
      total += std::llabs(nu - nv);
    }
  }
  return total;
}

inline std::int64_t irr(const Dense& g) {
  std::int64_t total = 0;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.adj[u][v]) total += std::abs(g.degree(u) - g.degree(v));
    }
  }
  return total;
}

inline std::int64_t irr_t(const Dense& g) {
  std::int64_t total = 0;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) total += std::abs(g.degree(u) - g.degree(v));
  }
  return total;
}

// ---- products from their adjacency definitions, in the library's id layout.

inline mostar::Graph corona(const Dense& g, const Dense& h) {
  const int s1 = g.n, s2 = h.n;
  // Vertex x of copy i sits at s1 + i*s2 + x.
  auto owner = [=](int v) { return (v - s1) / s2; };
  auto local = [=](int v) { return (v - s1) % s2; };
  return from_predicate(s1 + s1 * s2, [&](int a, int b) {
    if (a < s1 && b < s1) return g.adj[a][b] != 0;
    if (a < s1) return owner(b) == a;
    return owner(a) == owner(b) && h.adj[local(a)][local(b)] != 0;
  });
}

inline mostar::Graph cartesian(const Dense& g, const Dense& h) {
  const int s2 = h.n;
  return from_predicate(g.n * s2, [&](int x, int y) {
    const int a = x / s2, b = x % s2, c = y / s2, d = y % s2;
    return (a == c && h.adj[b][d]) || (b == d && g.adj[a][c]);
  });
}

inline mostar::Graph join(const Dense& g, const Dense& h) {
  const int s1 = g.n;
  return from_predicate(s1 + h.n, [&](int a, int b) {
    if (a < s1 && b < s1) return g.adj[a][b] != 0;
    if (a >= s1 && b >= s1) return h.adj[a - s1][b - s1] != 0;
    return true;
  });
}

inline mostar::Graph lexicographic(const Dense& g, const Dense& h) {
  const int s2 = h.n;
  return from_predicate(g.n * s2, [&](int x, int y) {
    const int a = x / s2, b = x % s2, c = y / s2, d = y % s2;
    return g.adj[a][c] || (a == c && h.adj[b][d]);
  });
}

inline mostar::Graph indu_bala(const Dense& g, const Dense& h) {
  const int s1 = g.n, m = g.n + h.n;
  const Dense j = from_graph(join(g, h));
  return from_predicate(2 * m, [&](int a, int b) {
    if (a < m && b < m) return j.adj[a][b] != 0;
    if (a >= m && b >= m) return j.adj[a - m][b - m] != 0;
    // a in copy 1, b in copy 2: matched H-vertices only.
    return a >= s1 && b == a + m;
  });
}

// Edges of g in canonical (u < v, lexicographic) order.
inline std::vector<std::pair<int, int>> edge_order(const Dense& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (g.adj[u][v]) out.emplace_back(u, v);
    }
  }
  return out;
}

inline mostar::Graph subdivision(const Dense& g) {
  const auto e = edge_order(g);
  const int s1 = g.n;
  return from_predicate(s1 + static_cast<int>(e.size()), [&](int a, int b) {
    if (b < s1 || a >= s1) return false;
    const auto& [u, v] = e[b - s1];
    return a == u || a == v;
  });
}

// null factors are absent.
inline mostar::Graph sve_join(const Dense& g1, const Dense* g2, const Dense* g3) {
  const auto e = edge_order(g1);
  const int s1 = g1.n;
  const int t1 = static_cast<int>(e.size());
  const int s2 = g2 ? g2->n : 0;
  const int s3 = g3 ? g3->n : 0;
  const int base2 = s1 + t1;
  const int base3 = base2 + s2;
  auto block = [&](int v) { return v < s1 ? 0 : v < base2 ? 1 : v < base3 ? 2 : 3; };
  return from_predicate(base3 + s3, [&](int a, int b) {
    const int ba = block(a), bb = block(b);
    if (ba == 0 && bb == 1) {
      const auto& [u, v] = e[b - s1];
      return a == u || a == v;
    }
    if (ba == 0 && bb == 2) return true;
    if (ba == 1 && bb == 3) return true;
    if (ba == 2 && bb == 2) return g2->adj[a - base2][b - base2] != 0;
    if (ba == 3 && bb == 3) return g3->adj[a - base3][b - base3] != 0;
    return false;
  });
}

}  // namespace ref
