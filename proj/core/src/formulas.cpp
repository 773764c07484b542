#include "mostar/formulas.hpp"

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "mostar/error.hpp"
#include "mostar/invariants.hpp"

namespace mostar {
namespace {

FormulaValue value_of(std::string_view id, std::int64_t value) {
  return {id, value, find_claim(id).kind};
}

void require(bool ok, std::string_view id, const char* what) {
  if (!ok) throw Error(Errc::kBadParam, std::string(id) + ": " + what);
}

void require_arity(std::span<const std::int64_t> p, std::size_t n, std::string_view id) {
  if (p.size() != n) {
    throw Error(Errc::kBadArity, std::string(id) + ": expected " + std::to_string(n) +
                                     " parameter(s), got " + std::to_string(p.size()));
  }
}

std::int64_t exact_div(std::int64_t num, std::int64_t den, std::string_view id) {
  if (num % den != 0) {
    throw Error(Errc::kNotDivisible, std::string(id) + ": " + std::to_string(num) +
                                         " is not divisible by " + std::to_string(den));
  }
  return num / den;
}

std::int64_t mo_of(const FactorStats& f, std::string_view id) {
  if (!f.mo) throw Error(Errc::kDisconnected, std::string(id) + ": factor is disconnected");
  return *f.mo;
}

// Mo(P_s) = floor((s-1)^2 / 2).
std::int64_t path_mo(std::int64_t s) { return (s - 1) * (s - 1) / 2; }

// 2s^3 - 3s^2 - 2s, plus 3 when s is odd. Shared by the irr_t and
// lexicographic bounds.
std::int64_t cubic_numerator(std::int64_t s) {
  return 2 * s * s * s - 3 * s * s - 2 * s + (s % 2 != 0 ? 3 : 0);
}

// Degree -> multiplicity.
std::map<std::int64_t, std::int64_t> degree_histogram(const Graph& g) {
  std::map<std::int64_t, std::int64_t> h;
  for (std::uint32_t d : g.degrees()) ++h[d];
  return h;
}

}  // namespace

FactorStats FactorStats::of(const Graph& g) {
  FactorStats f;
  f.s = g.order();
  f.t = static_cast<std::int64_t>(g.size());
  if (is_connected(g)) f.mo = mostar(g);
  f.irr = albertson_irregularity(g);
  f.irr_t = total_irregularity(g);
  if (const std::int64_t r = regular_degree(g); r >= 0) f.regularity = r;
  return f;
}

FormulaValue prop1(Prop1Family family, std::int64_t s) {
  switch (family) {
    case Prop1Family::kComplete:
      require(s >= 1, claim::kProp1Complete, "s >= 1");
      return value_of(claim::kProp1Complete, 0);
    case Prop1Family::kCycle:
      require(s >= 3, claim::kProp1Cycle, "s >= 3");
      return value_of(claim::kProp1Cycle, 0);
    case Prop1Family::kBalancedBipartite:
      require(s >= 1, claim::kProp1BalancedBipartite, "s >= 1");
      return value_of(claim::kProp1BalancedBipartite, 0);
    case Prop1Family::kPath:
      require(s >= 1, claim::kProp1Path, "s >= 1");
      return value_of(claim::kProp1Path, path_mo(s));
  }
  throw Error(Errc::kBadParam, "unknown family");
}

FormulaValue prop2_bound(std::int64_t s) {
  require(s >= 1, claim::kProp2Bound, "s >= 1");
  return value_of(claim::kProp2Bound, exact_div(cubic_numerator(s), 12, claim::kProp2Bound));
}

FormulaValue thm_corona_bound(const FactorStats& g, const FactorStats& h) {
  const std::int64_t v = g.s * h.irr + (h.s + 1) * mo_of(g, claim::kCoronaBound) +
                         g.s * h.s * std::abs(2 - g.s - g.s * h.s) + 2 * g.s * h.t;
  return value_of(claim::kCoronaBound, v);
}

FormulaValue corona_exact(const FactorStats& g, const FactorStats& h) {
  // A cross edge from G-vertex i to x in copy i has n = 1 on the copy side and
  // s1(1+s2) - 1 - deg(x) on the G side. The difference stays non-negative
  // because deg(x) <= s2 - 1 and s1 >= 1.
  const std::int64_t slack = (g.s - 1) * (h.s + 1);
  if (slack < 0) throw Error(Errc::kBadParam, "corona cross-edge sign check failed");
  const std::int64_t v = g.s * h.irr + (h.s + 1) * mo_of(g, claim::kCoronaExact) +
                         g.s * h.s * (g.s * (1 + h.s) - 2) - 2 * g.s * h.t;
  return value_of(claim::kCoronaExact, v);
}

FormulaValue cor_thorn_bound(const FactorStats& g, std::int64_t m) {
  require(m >= 1, claim::kThornBound, "m >= 1");
  const std::int64_t v =
      (m + 1) * mo_of(g, claim::kThornBound) + g.s * m * std::abs(2 - g.s - g.s * m);
  return value_of(claim::kThornBound, v);
}

FormulaValue ex_bottleneck(const FactorStats& g) {
  return value_of(claim::kBottleneck, 2 * g.irr + 4 * (g.s + g.t));
}

FormulaValue ex_bridge(BridgeKind kind, std::span<const std::int64_t> p) {
  switch (kind) {
    case BridgeKind::kB:
    case BridgeKind::kT: {
      const auto id = kind == BridgeKind::kB ? claim::kBridgeB : claim::kBridgeT;
      require_arity(p, 1, id);
      const std::int64_t k = p[0];
      require(k >= 1, id, "k >= 1");
      return value_of(id, 3 * path_mo(k) + 2 * k * (3 * k - 1));
    }
    case BridgeKind::kJ: {
      require_arity(p, 2, claim::kBridgeJ);
      const std::int64_t j = p[0];
      const std::int64_t k = p[1];
      require(j >= 1 && k >= 3, claim::kBridgeJ, "j >= 1, k >= 3");
      return value_of(claim::kBridgeJ,
                      (k + 1) * path_mo(j) + j * k * std::abs(2 - j - j * k) + 2 * j * k);
    }
  }
  throw Error(Errc::kBadParam, "unknown bridge kind");
}

FormulaValue thm_cartesian(std::span<const FactorStats> factors) {
  if (factors.empty()) throw Error(Errc::kBadArity, "thm.cartesian: needs at least one factor");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::int64_t term = mo_of(factors[i], claim::kCartesian);
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j != i) term *= factors[j].s * factors[j].s;
    }
    total += term;
  }
  return value_of(claim::kCartesian, total);
}

FormulaValue cor_cartesian_power(const FactorStats& g, std::int64_t k) {
  require(k >= 1, claim::kCartesianPower, "k >= 1");
  std::int64_t scale = k;
  for (std::int64_t i = 0; i < 2 * (k - 1); ++i) scale *= g.s;
  return value_of(claim::kCartesianPower, scale * mo_of(g, claim::kCartesianPower));
}

FormulaValue ex_cartesian_family(CartesianFamily kind, std::span<const std::int64_t> p) {
  switch (kind) {
    case CartesianFamily::kNanotorus:
      require_arity(p, 2, claim::kNanotorus);
      require(p[0] >= 3 && p[1] >= 3, claim::kNanotorus, "a, b >= 3");
      return value_of(claim::kNanotorus, 0);
    case CartesianFamily::kNanotube:
      require_arity(p, 2, claim::kNanotube);
      require(p[0] >= 1 && p[1] >= 3, claim::kNanotube, "a >= 1, b >= 3");
      return value_of(claim::kNanotube, p[1] * p[1] * path_mo(p[0]));
    case CartesianFamily::kGrid:
      require_arity(p, 2, claim::kGrid);
      require(p[0] >= 1 && p[1] >= 1, claim::kGrid, "a, b >= 1");
      return value_of(claim::kGrid, p[0] * p[0] * path_mo(p[1]) + p[1] * p[1] * path_mo(p[0]));
    case CartesianFamily::kLadder:
      require_arity(p, 1, claim::kLadder);
      require(p[0] >= 1, claim::kLadder, "a >= 1");
      return value_of(claim::kLadder, 4 * (p[0] * p[0] / 2));
    case CartesianFamily::kHamming:
      if (p.empty()) throw Error(Errc::kBadArity, "ex.hamming: needs at least one coordinate");
      for (std::int64_t s : p) require(s >= 2, claim::kHamming, "s_i >= 2");
      return value_of(claim::kHamming, 0);
    case CartesianFamily::kHypercube:
      require_arity(p, 1, claim::kHypercube);
      require(p[0] >= 1, claim::kHypercube, "k >= 1");
      return value_of(claim::kHypercube, 0);
  }
  throw Error(Errc::kBadParam, "unknown cartesian family");
}

FormulaValue thm_join_bound(const FactorStats& g, const FactorStats& h) {
  const std::int64_t v =
      g.irr + h.irr + g.s * h.s * std::abs(h.s - g.s) + 2 * (h.s * g.t + g.s * h.t);
  return value_of(claim::kJoinBound, v);
}

FormulaValue join_exact(const Graph& g, const Graph& h) {
  // A cross edge u-x has n_u = s2 - deg_H(x) and n_x = s1 - deg_G(u); only
  // the degree pair matters, so sum over histograms.
  const std::int64_t s1 = g.order();
  const std::int64_t s2 = h.order();
  std::int64_t cross = 0;
  for (const auto& [du, cu] : degree_histogram(g)) {
    for (const auto& [dx, cx] : degree_histogram(h)) {
      cross += cu * cx * std::abs(s2 - s1 + du - dx);
    }
  }
  return value_of(claim::kJoinExact, albertson_irregularity(g) + albertson_irregularity(h) + cross);
}

FormulaValue cor_join_regular(std::int64_t s1, std::int64_t r1, std::int64_t s2, std::int64_t r2) {
  require(s1 >= 1 && s2 >= 1, claim::kJoinRegular, "s1, s2 >= 1");
  require(r1 >= 0 && r1 < s1 && r2 >= 0 && r2 < s2, claim::kJoinRegular, "0 <= r < s");
  return value_of(claim::kJoinRegular, s1 * s2 * std::abs(s2 - s1 + r1 - r2));
}

FormulaValue ex_cone(std::int64_t f, std::int64_t g) {
  require(f >= 3 && g >= 1, claim::kCone, "f >= 3, g >= 1");
  return value_of(claim::kCone, f * g * std::abs(f - g + 2));
}

FormulaValue ex_cone_corollary(std::int64_t f, std::int64_t g) {
  require(f >= 3 && g >= 1, claim::kConeCorollary, "f >= 3, g >= 1");
  return value_of(claim::kConeCorollary, f * g * std::abs(g - f + 2));
}

FormulaValue ex_suspension_bound(const FactorStats& g) {
  return value_of(claim::kSuspensionBound, g.irr + g.s * (g.s - 1) + 2 * g.s);
}

FormulaValue ex_suspension_regular(std::int64_t s, std::int64_t r) {
  require(s >= 1 && r >= 0 && r < s, claim::kSuspensionRegular, "0 <= r < s");
  return value_of(claim::kSuspensionRegular, s * std::abs(s - 1 - r));
}

FormulaValue ex_star(std::int64_t s) {
  require(s >= 1, claim::kStar, "s >= 1");
  return value_of(claim::kStar, s * (s - 1));
}

FormulaValue ex_wheel(std::int64_t s) {
  require(s >= 3, claim::kWheel, "s >= 3");
  return value_of(claim::kWheel, s * std::abs(s - 3));
}

FormulaValue ex_fan_bound(std::int64_t s) {
  require(s >= 1, claim::kFanBound, "s >= 1");
  return value_of(claim::kFanBound, s * (s + 1));
}

FormulaValue ex_flower_bound(std::int64_t g) {
  require(g >= 1, claim::kFlowerBound, "g >= 1");
  return value_of(claim::kFlowerBound, 4 * g);
}

FormulaValue thm_lex_bound(const FactorStats& g, const FactorStats& h) {
  const std::int64_t tail = exact_div(g.t * cubic_numerator(h.s), 6, claim::kLexBound);
  const std::int64_t v = h.s * h.s * h.s * mo_of(g, claim::kLexBound) + g.s * h.irr + tail;
  return value_of(claim::kLexBound, v);
}

FormulaValue lex_exact(const Graph& g, const Graph& h) {
  if (g.order() < 2) throw Error(Errc::kBadParam, "derived.lex.exact: G needs at least 2 vertices");
  const std::int64_t s2 = h.order();
  const auto hist = degree_histogram(h);

  // Inner sum over ordered copies (a, b) depends only on |n_u - n_v|.
  std::map<std::int64_t, std::int64_t> by_delta;
  auto inner = [&](std::int64_t delta) {
    auto [it, fresh] = by_delta.try_emplace(delta, 0);
    if (fresh) {
      std::int64_t sum = 0;
      for (const auto& [da, ca] : hist) {
        for (const auto& [db, cb] : hist) sum += ca * cb * std::abs(s2 * delta + da - db);
      }
      it->second = sum;
    }
    return it->second;
  };

  std::int64_t total = static_cast<std::int64_t>(g.order()) * albertson_irregularity(h);
  for (const EdgeContribution& c : edge_contributions(g)) {
    total += inner(static_cast<std::int64_t>(c.contribution));
  }
  return value_of(claim::kLexExact, total);
}

FormulaValue ex_fence_closed(std::int64_t g) {
  require(g >= 3, claim::kFenceClosed, "g >= 3");
  return value_of(claim::kFenceClosed, 0);
}

FormulaValue ex_fence_bound(std::int64_t g) {
  require(g >= 1, claim::kFenceBound, "g >= 1");
  return value_of(claim::kFenceBound, 8 * path_mo(g));
}

FormulaValue ex_lex_paths_bound(std::int64_t g, std::int64_t h) {
  require(g >= 2 && h >= 1, claim::kLexPathsBound, "g >= 2, h >= 1");
  const std::int64_t tail = exact_div((g - 1) * cubic_numerator(h), 6, claim::kLexPathsBound);
  return value_of(claim::kLexPathsBound, 2 * g + h * h * h * path_mo(g) + tail);
}

FormulaValue thm_indu_bala_bound(const FactorStats& g, const FactorStats& h) {
  const std::int64_t v = 2 * (g.irr + 2 * h.irr + g.s * h.s * std::abs(h.s - 2 * g.s - 1) +
                              2 * (h.s * g.t + g.s * h.t));
  return value_of(claim::kInduBalaBound, v);
}

FormulaValue ex_indu_bala(InduBalaExample kind, std::int64_t g, std::int64_t h) {
  const std::int64_t gap = std::abs(h - 2 * g - 1);
  switch (kind) {
    case InduBalaExample::kPathPath:
      require(g >= 1 && h >= 1, claim::kInduBalaPP, "g, h >= 1");
      return value_of(claim::kInduBalaPP, 2 * (6 + g * h * (gap + 4) - 2 * (g + h)));
    case InduBalaExample::kPathCycle:
      require(g >= 1 && h >= 3, claim::kInduBalaPC, "g >= 1, h >= 3");
      return value_of(claim::kInduBalaPC, 2 * (2 + g * h * (gap + 4) - 2 * h));
    case InduBalaExample::kCyclePath:
      require(g >= 3 && h >= 1, claim::kInduBalaCP, "g >= 3, h >= 1");
      return value_of(claim::kInduBalaCP, 2 * (4 + g * h * gap + 2 * g * (2 * h - 1)));
  }
  throw Error(Errc::kBadParam, "unknown Indu-Bala example");
}

FormulaValue thm_sve_bound(const FactorStats& g1, const FactorStats& g2, const FactorStats& g3) {
  const std::int64_t s1 = g1.s, t1 = g1.t;
  const std::int64_t s2 = g2.s, t2 = g2.t;
  const std::int64_t s3 = g3.s, t3 = g3.t;
  const std::int64_t v = g2.irr + g3.irr + s1 * s2 * std::abs(s2 + s3 - s1 - t1) + 4 * t1 * s2 +
                         2 * s1 * t2 + t1 * s3 * std::abs(s3 + s2 - s1 + 4) + 2 * t3 * t1 +
                         s1 * t1 * std::abs(s2 + s1 - s3 - t1 - 4) + 4 * t1 * t1;
  return value_of(claim::kSveBound, v);
}

}  // namespace mostar
