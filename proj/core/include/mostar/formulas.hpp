#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "mostar/claims.hpp"
#include "mostar/graph.hpp"

namespace mostar {

/// A formula evaluated at concrete parameters. kind always comes from the
/// claim registry.
struct FormulaValue {
  std::string_view claim_id;
  std::int64_t value = 0;
  ClaimKind kind = ClaimKind::kExact;
};

/// Order, size and invariants of one operand. mo is empty for a disconnected
/// graph; regularity is empty unless every vertex has the same degree.
struct FactorStats {
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::optional<std::int64_t> mo;
  std::int64_t irr = 0;
  std::int64_t irr_t = 0;
  std::optional<std::int64_t> regularity;

  static FactorStats of(const Graph& g);

  // The null graph, used for a missing factor of the vertex-edge join.
  static FactorStats absent() { return {}; }
};

enum class Prop1Family { kComplete, kCycle, kBalancedBipartite, kPath };
enum class BridgeKind { kB, kT, kJ };
enum class CartesianFamily { kNanotorus, kNanotube, kGrid, kLadder, kHamming, kHypercube };
enum class InduBalaExample { kPathPath, kPathCycle, kCyclePath };

// Basic families and the total-irregularity bound.
FormulaValue prop1(Prop1Family family, std::int64_t s);
FormulaValue prop2_bound(std::int64_t s);

// Corona.
FormulaValue thm_corona_bound(const FactorStats& g, const FactorStats& h);
/// Requires g.mo (connected G). Throws Error(kDisconnected).
FormulaValue corona_exact(const FactorStats& g, const FactorStats& h);
FormulaValue cor_thorn_bound(const FactorStats& g, std::int64_t m);
FormulaValue ex_bottleneck(const FactorStats& g);
/// kB, kT take {k}; kJ takes {j, k} for P_j o C_k.
FormulaValue ex_bridge(BridgeKind kind, std::span<const std::int64_t> params);

// Cartesian.
/// Sum of Mo(G_i) times the squared orders of the other factors. Every
/// factor needs mo set.
FormulaValue thm_cartesian(std::span<const FactorStats> factors);
FormulaValue cor_cartesian_power(const FactorStats& g, std::int64_t k);
/// kNanotorus {a,b}, kNanotube {a,b} for P_a x C_b, kGrid {a,b}, kLadder {a},
/// kHamming {s1..sk}, kHypercube {k}.
FormulaValue ex_cartesian_family(CartesianFamily kind, std::span<const std::int64_t> params);

// Join.
FormulaValue thm_join_bound(const FactorStats& g, const FactorStats& h);
FormulaValue join_exact(const Graph& g, const Graph& h);
FormulaValue cor_join_regular(std::int64_t s1, std::int64_t r1, std::int64_t s2, std::int64_t r2);
FormulaValue ex_cone(std::int64_t f, std::int64_t g);
FormulaValue ex_cone_corollary(std::int64_t f, std::int64_t g);
FormulaValue ex_suspension_bound(const FactorStats& g);
FormulaValue ex_suspension_regular(std::int64_t s, std::int64_t r);
FormulaValue ex_star(std::int64_t s);
FormulaValue ex_wheel(std::int64_t s);
FormulaValue ex_fan_bound(std::int64_t s);
FormulaValue ex_flower_bound(std::int64_t g);

// Lexicographic.
FormulaValue thm_lex_bound(const FactorStats& g, const FactorStats& h);
/// g connected with at least 2 vertices (kDisconnected / kBadParam).
FormulaValue lex_exact(const Graph& g, const Graph& h);
FormulaValue ex_fence_closed(std::int64_t g);
FormulaValue ex_fence_bound(std::int64_t g);
FormulaValue ex_lex_paths_bound(std::int64_t g, std::int64_t h);

// Indu-Bala.
FormulaValue thm_indu_bala_bound(const FactorStats& g, const FactorStats& h);
FormulaValue ex_indu_bala(InduBalaExample kind, std::int64_t g, std::int64_t h);

// Subdivision vertex-edge join. Pass FactorStats::absent() for a missing
// factor.
FormulaValue thm_sve_bound(const FactorStats& g1, const FactorStats& g2, const FactorStats& g3);

}  // namespace mostar
