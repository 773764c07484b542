#include "mostar/families.hpp"

#include <array>
#include <utility>

#include "mostar/operators.hpp"

namespace mostar {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 16> kNames{{
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kComplete, "complete"},
    {Family::kCompleteBipartite, "complete-bipartite"},
    {Family::kEmpty, "empty"},
    {Family::kStar, "star"},
    {Family::kWheel, "wheel"},
    {Family::kFan, "fan"},
    {Family::kHypercube, "hypercube"},
    {Family::kHamming, "hamming"},
    {Family::kGrid, "grid"},
    {Family::kLadder, "ladder"},
    {Family::kFriendship, "friendship"},
    {Family::kCone, "cone"},
    {Family::kBridgePath, "bridge-path"},
    {Family::kBridgeCycle, "bridge-cycle"},
}};

void bad_param(const FamilySpec& spec, const char* why) {
  throw Error(Errc::kBadParam, to_string(spec) + ": " + why);
}

// Hub 0 joined to `rim` placed on ids 1..rim.order().
Graph suspension(const Graph& rim) { return join(complete_graph(1), rim); }

}  // namespace

std::string_view family_name(Family f) noexcept {
  for (const auto& [family, name] : kNames) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (const auto& [family, n] : kNames) {
    if (n == name) return family;
  }
  return std::nullopt;
}

std::string to_string(const FamilySpec& spec) {
  std::string out(family_name(spec.family));
  out += '(';
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.params[i]);
  }
  out += ')';
  return out;
}

Graph path_graph(std::uint32_t s) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < s; ++v) edges.push_back({v - 1, v});
  return Graph::build(s, edges);
}

Graph cycle_graph(std::uint32_t s) {
  if (s < 3) throw Error(Errc::kBadParam, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < s; ++v) edges.push_back({v - 1, v});
  edges.push_back({s - 1, 0});
  return Graph::build(s, edges);
}

Graph complete_graph(std::uint32_t s) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < s; ++u) {
    for (Vertex v = u + 1; v < s; ++v) edges.push_back({u, v});
  }
  return Graph::build(s, edges);
}

Graph complete_bipartite_graph(std::uint32_t r, std::uint32_t s) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < r; ++a) {
    for (Vertex b = 0; b < s; ++b) edges.push_back({a, r + b});
  }
  return Graph::build(r + s, edges);
}

Graph empty_graph(std::uint32_t s) { return Graph::build(s, {}); }

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t n) {
    if (p.size() != n) {
      throw Error(Errc::kBadArity, to_string(spec) + ": expected " + std::to_string(n) +
                                       " parameter(s), got " + std::to_string(p.size()));
    }
  };
  for (std::uint32_t x : p) {
    if (x == 0) bad_param(spec, "parameters must be positive");
  }

  switch (spec.family) {
    case Family::kPath:
      arity(1);
      return path_graph(p[0]);
    case Family::kCycle:
      arity(1);
      if (p[0] < 3) bad_param(spec, "cycle needs s >= 3");
      return cycle_graph(p[0]);
    case Family::kComplete:
      arity(1);
      return complete_graph(p[0]);
    case Family::kCompleteBipartite:
      arity(2);
      return complete_bipartite_graph(p[0], p[1]);
    case Family::kEmpty:
      arity(1);
      return empty_graph(p[0]);
    case Family::kStar:
      arity(1);
      if (p[0] < 2) bad_param(spec, "star needs at least 2 vertices");
      return complete_bipartite_graph(1, p[0] - 1);
    case Family::kWheel:
      arity(1);
      if (p[0] < 3) bad_param(spec, "wheel rim needs s >= 3");
      return suspension(cycle_graph(p[0]));
    case Family::kFan:
      arity(1);
      return suspension(path_graph(p[0]));
    case Family::kHypercube:
      arity(1);
      return cartesian_power(complete_graph(2), p[0]);
    case Family::kHamming: {
      if (p.empty()) throw Error(Errc::kBadArity, to_string(spec) + ": needs k >= 1 coordinates");
      std::vector<Graph> factors;
      for (std::uint32_t s : p) {
        if (s < 2) bad_param(spec, "each coordinate needs s >= 2");
        factors.push_back(complete_graph(s));
      }
      return cartesian_n(factors);
    }
    case Family::kGrid:
      arity(2);
      return cartesian(path_graph(p[0]), path_graph(p[1]));
    case Family::kLadder:
      arity(1);
      return cartesian(path_graph(2), path_graph(p[0] + 1));
    case Family::kFriendship: {
      arity(1);
      Graph blades = complete_graph(2);
      for (std::uint32_t i = 1; i < p[0]; ++i) blades = disjoint_union(blades, complete_graph(2));
      return suspension(blades);
    }
    case Family::kCone:
      arity(2);
      if (p[0] < 3) bad_param(spec, "cone needs f >= 3");
      return join(cycle_graph(p[0]), empty_graph(p[1]));
    case Family::kBridgePath: {
      arity(1);
      const std::vector<Graph> parts(p[0], path_graph(3));
      const std::vector<Vertex> anchors(p[0], 1);
      return bridge_graph(parts, anchors);
    }
    case Family::kBridgeCycle: {
      arity(2);
      if (p[1] < 3) bad_param(spec, "bridge-cycle needs c >= 3");
      const std::vector<Graph> parts(p[0], cycle_graph(p[1]));
      const std::vector<Vertex> anchors(p[0], 0);
      return bridge_graph(parts, anchors);
    }
  }
  throw Error(Errc::kBadParam, "unknown family");
}

Graph bridge_graph(std::span<const Graph> parts, std::span<const Vertex> anchors) {
  if (parts.empty() || parts.size() != anchors.size()) {
    throw Error(Errc::kBadArity, "bridge_graph needs one anchor per part and at least one part");
  }
  std::vector<Edge> edges;
  std::vector<Vertex> global_anchor;
  Vertex offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (anchors[i] >= parts[i].order()) {
      throw Error(Errc::kVertexOutOfRange, "anchor " + std::to_string(anchors[i]) +
                                               " out of range for part " + std::to_string(i));
    }
    for (const Edge& e : parts[i].edges()) edges.push_back({offset + e.u, offset + e.v});
    global_anchor.push_back(offset + anchors[i]);
    offset += parts[i].order();
  }
  for (std::size_t i = 1; i < global_anchor.size(); ++i) {
    edges.push_back({global_anchor[i - 1], global_anchor[i]});
  }
  return Graph::build(offset, edges);
}

}  // namespace mostar
