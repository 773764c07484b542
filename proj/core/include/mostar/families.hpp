#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar {

enum class Family {
  kPath,
  kCycle,
  kComplete,
  kCompleteBipartite,
  kEmpty,
  kStar,
  kWheel,
  kFan,
  kHypercube,
  kHamming,
  kGrid,
  kLadder,
  kFriendship,
  kCone,
  kBridgePath,
  kBridgeCycle,
};

// Parameters, in order:
//   path(s) cycle(s>=3) complete(s) empty(s)
//   complete-bipartite(r, s)     part A = 0..r-1
//   star(n)                      n vertices, hub 0 (= complete-bipartite(1, n-1))
//   wheel(s>=3) fan(s)           hub 0 joined to cycle(s) / path(s) on 1..s
//   hypercube(k)                 k-fold Cartesian power of K2
//   hamming(s1, ..., sk)         Cartesian product of complete(si), si >= 2
//   grid(a, b)                   path(a) □ path(b)
//   ladder(a)                    path(2) □ path(a+1)
//   friendship(g)                K1 + g disjoint copies of K2, hub 0
//   cone(f>=3, g)                cycle(f) + empty(g)
//   bridge-path(k)               k copies of P3 linked at their centers
//   bridge-cycle(k, c>=3)        k copies of C_c linked at vertex 0
struct FamilySpec {
  Family family;
  std::vector<std::uint32_t> params;
};

std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

/// "path(4)", "complete-bipartite(2,3)".
std::string to_string(const FamilySpec& spec);

/// Throws Error(kBadArity) or Error(kBadParam).
Graph generate(const FamilySpec& spec);

/// Disjoint union of parts plus an edge between anchors[i] and anchors[i+1]
/// for each consecutive pair. Part i keeps its internal ids, shifted by the
/// total order of parts 0..i-1.
Graph bridge_graph(std::span<const Graph> parts, std::span<const Vertex> anchors);

Graph path_graph(std::uint32_t s);
Graph cycle_graph(std::uint32_t s);
Graph complete_graph(std::uint32_t s);
Graph complete_bipartite_graph(std::uint32_t r, std::uint32_t s);
Graph empty_graph(std::uint32_t s);

}  // namespace mostar
