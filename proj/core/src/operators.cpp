#include "mostar/operators.hpp"

#include "mostar/families.hpp"

namespace mostar {

Graph corona(const Graph& g, const Graph& h) {
  const Vertex s1 = g.order();
  const Vertex s2 = h.order();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.reserve(g.size() + static_cast<std::size_t>(s1) * (h.size() + s2));
  for (Vertex i = 0; i < s1; ++i) {
    const Vertex base = s1 + i * s2;
    for (const Edge& e : h.edges()) edges.push_back({base + e.u, base + e.v});
    for (Vertex j = 0; j < s2; ++j) edges.push_back({i, base + j});
  }
  return Graph::build(s1 * (1 + s2), edges);
}

Graph thorn(const Graph& g, std::uint32_t m) {
  if (m == 0) return g;
  return corona(g, empty_graph(m));
}

Graph cartesian(const Graph& g, const Graph& h) {
  const Vertex s1 = g.order();
  const Vertex s2 = h.order();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(s1) * h.size() + static_cast<std::size_t>(s2) * g.size());
  for (Vertex a = 0; a < s1; ++a) {
    for (const Edge& e : h.edges()) edges.push_back({a * s2 + e.u, a * s2 + e.v});
  }
  for (const Edge& e : g.edges()) {
    for (Vertex b = 0; b < s2; ++b) edges.push_back({e.u * s2 + b, e.v * s2 + b});
  }
  return Graph::build(s1 * s2, edges);
}

Graph cartesian_n(std::span<const Graph> factors) {
  if (factors.empty()) throw Error(Errc::kBadArity, "cartesian_n needs at least one factor");
  Graph acc = factors.front();
  for (const Graph& f : factors.subspan(1)) acc = cartesian(acc, f);
  return acc;
}

Graph cartesian_power(const Graph& g, std::uint32_t k) {
  if (k == 0) throw Error(Errc::kBadParam, "cartesian_power needs k >= 1");
  Graph acc = g;
  for (std::uint32_t i = 1; i < k; ++i) acc = cartesian(acc, g);
  return acc;
}

Graph join(const Graph& g, const Graph& h) {
  const Vertex s1 = g.order();
  const Vertex s2 = h.order();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.reserve(g.size() + h.size() + static_cast<std::size_t>(s1) * s2);
  for (const Edge& e : h.edges()) edges.push_back({s1 + e.u, s1 + e.v});
  for (Vertex a = 0; a < s1; ++a) {
    for (Vertex b = 0; b < s2; ++b) edges.push_back({a, s1 + b});
  }
  return Graph::build(s1 + s2, edges);
}

Graph lexicographic(const Graph& g, const Graph& h) {
  const Vertex s1 = g.order();
  const Vertex s2 = h.order();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(s1) * h.size() +
                g.size() * static_cast<std::size_t>(s2) * s2);
  for (Vertex a = 0; a < s1; ++a) {
    for (const Edge& e : h.edges()) edges.push_back({a * s2 + e.u, a * s2 + e.v});
  }
  for (const Edge& e : g.edges()) {
    for (Vertex x = 0; x < s2; ++x) {
      for (Vertex y = 0; y < s2; ++y) edges.push_back({e.u * s2 + x, e.v * s2 + y});
    }
  }
  return Graph::build(s1 * s2, edges);
}

Graph indu_bala(const Graph& g, const Graph& h) {
  const Graph half = join(g, h);
  const Vertex s1 = g.order();
  const Vertex shift = half.order();
  std::vector<Edge> edges;
  edges.reserve(2 * half.size() + h.order());
  for (const Edge& e : half.edges()) {
    edges.push_back(e);
    edges.push_back({e.u + shift, e.v + shift});
  }
  for (Vertex j = 0; j < h.order(); ++j) edges.push_back({s1 + j, shift + s1 + j});
  return Graph::build(2 * shift, edges);
}

Graph subdivision(const Graph& g) {
  const Vertex s1 = g.order();
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  Vertex w = s1;
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, w});
    edges.push_back({w, e.v});
    ++w;
  }
  return Graph::build(w, edges);
}

Graph sve_join(const Graph& g1, OptionalGraphRef g2, OptionalGraphRef g3) {
  const Vertex s1 = g1.order();
  const Vertex t1 = static_cast<Vertex>(g1.size());
  const Graph base = subdivision(g1);
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  Vertex next = base.order();

  if (g2) {
    const Graph& h = g2->get();
    for (const Edge& e : h.edges()) edges.push_back({next + e.u, next + e.v});
    for (Vertex a = 0; a < s1; ++a) {
      for (Vertex b = 0; b < h.order(); ++b) edges.push_back({a, next + b});
    }
    next += h.order();
  }
  if (g3) {
    const Graph& h = g3->get();
    for (const Edge& e : h.edges()) edges.push_back({next + e.u, next + e.v});
    for (Vertex i = 0; i < t1; ++i) {
      for (Vertex b = 0; b < h.order(); ++b) edges.push_back({s1 + i, next + b});
    }
    next += h.order();
  }
  return Graph::build(next, edges);
}

std::string_view product_op_name(ProductOp op) noexcept {
  switch (op) {
    case ProductOp::kCorona: return "corona";
    case ProductOp::kCartesian: return "cartesian";
    case ProductOp::kJoin: return "join";
    case ProductOp::kLexicographic: return "lexicographic";
    case ProductOp::kInduBala: return "indu-bala";
    case ProductOp::kSubdivision: return "subdivision";
    case ProductOp::kSveJoin: return "sve";
    case ProductOp::kThorn: return "thorn";
  }
  return "unknown";
}

std::uint32_t ProductLayout::order() const noexcept {
  std::uint32_t n = 0;
  for (const auto& b : blocks) n += b.count;
  return n;
}

ProductLayout describe_layout(ProductOp op, std::span<const FactorShape> f) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (f.size() < lo || f.size() > hi) {
      throw Error(Errc::kBadArity, std::string(product_op_name(op)) + ": wrong number of factors");
    }
  };
  ProductLayout layout{op, {}};
  auto& blocks = layout.blocks;
  auto push = [&](std::string name, std::uint32_t count) {
    const std::uint32_t first = blocks.empty() ? 0 : blocks.back().first + blocks.back().count;
    blocks.push_back({std::move(name), first, count});
  };

  switch (op) {
    case ProductOp::kCorona:
    case ProductOp::kThorn:
      need(2, 2);
      push("G", f[0].order);
      for (std::uint32_t i = 0; i < f[0].order; ++i) push("H[" + std::to_string(i) + "]", f[1].order);
      break;
    case ProductOp::kCartesian:
    case ProductOp::kLexicographic:
      need(2, 2);
      for (std::uint32_t a = 0; a < f[0].order; ++a) push("(" + std::to_string(a) + ",*)", f[1].order);
      break;
    case ProductOp::kJoin:
      need(2, 2);
      push("G", f[0].order);
      push("H", f[1].order);
      break;
    case ProductOp::kInduBala:
      need(2, 2);
      push("G.1", f[0].order);
      push("H.1", f[1].order);
      push("G.2", f[0].order);
      push("H.2", f[1].order);
      break;
    case ProductOp::kSubdivision:
      need(1, 1);
      push("V", f[0].order);
      push("I", f[0].size);
      break;
    case ProductOp::kSveJoin:
      need(1, 3);
      push("V", f[0].order);
      push("I", f[0].size);
      if (f.size() > 1 && f[1].order > 0) push("G2", f[1].order);
      if (f.size() > 2 && f[2].order > 0) push("G3", f[2].order);
      break;
  }
  return layout;
}

}  // namespace mostar
