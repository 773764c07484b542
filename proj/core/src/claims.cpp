#include "mostar/claims.hpp"

#include <algorithm>
#include <array>
#include <nlohmann/json.hpp>

#include "mostar/error.hpp"

namespace mostar {
namespace {

constexpr auto kExact = ClaimKind::kExact;
constexpr auto kUpperBound = ClaimKind::kUpperBound;
constexpr auto kClaimedExact = ClaimKind::kClaimedExact;
constexpr auto kBounds = Suite::kBounds;
constexpr auto kExamples = Suite::kExamples;

// clang-format off
constexpr std::array kClaims = std::to_array<ClaimInfo>({
  {claim::kProp1Complete, kExact, Suite::kExact,
   "Mo(K_s) = 0", "s >= 1"},
  {claim::kProp1Cycle, kExact, Suite::kExact,
   "Mo(C_s) = 0", "s >= 3"},
  {claim::kProp1BalancedBipartite, kExact, Suite::kExact,
   "Mo(K_{s,s}) = 0", "s >= 1"},
  {claim::kProp1Path, kExact, Suite::kExact,
   "Mo(P_s) = floor((s-1)^2 / 2)", "s >= 1"},
  {claim::kProp2Bound, kUpperBound, kBounds,
   "irr_t(G) <= (2s^3 - 3s^2 - 2s)/12 for even s, (2s^3 - 3s^2 - 2s + 3)/12 for odd s",
   "G: any graph of order s"},
  {claim::kCoronaBound, kUpperBound, kBounds,
   "Mo(G o H) <= s1*irr(H) + (s2+1)*Mo(G) + s1*s2*|2 - s1 - s1*s2| + 2*s1*t2",
   "G: connected; H: any"},
  {claim::kCoronaExact, kExact, Suite::kExact,
   "Mo(G o H) = s1*irr(H) + (s2+1)*Mo(G) + s1*s2*(s1*(1+s2) - 2) - 2*s1*t2",
   "G: connected; H: any"},
  {claim::kThornBound, kUpperBound, kBounds,
   "Mo(G o Empty(m)) <= (m+1)*Mo(G) + s*m*|2 - s - s*m|",
   "G: connected; m >= 1"},
  {claim::kBottleneck, kClaimedExact, kExamples,
   "Mo(K2 o G) = 2*irr(G) + 4*(s+t)",
   "G: any"},
  {claim::kBridgeB, kClaimedExact, kExamples,
   "Mo(B_k) = 3*floor((k-1)^2/2) + 2k(3k-1), B_k = k copies of P3 bridged at centers",
   "k >= 1"},
  {claim::kBridgeT, kClaimedExact, kExamples,
   "Mo(T_{k,3}) = 3*floor((k-1)^2/2) + 2k(3k-1), T_{k,3} = k triangles bridged",
   "k >= 1"},
  {claim::kBridgeJ, kClaimedExact, kExamples,
   "Mo(P_j o C_k) = (k+1)*floor((j-1)^2/2) + j*k*|2 - j - j*k| + 2*j*k",
   "j >= 1; k >= 3"},
  {claim::kCartesian, kExact, Suite::kExact,
   "Mo(G1 x ... x Gk) = sum_i Mo(G_i) * prod_{j != i} s_j^2",
   "G1..Gk: connected, k >= 1"},
  {claim::kCartesianPower, kExact, Suite::kExact,
   "Mo(G^k) = k * s^(2(k-1)) * Mo(G)",
   "G: connected; k >= 1"},
  {claim::kNanotorus, kExact, Suite::kExact,
   "Mo(C_a x C_b) = 0", "a, b >= 3"},
  {claim::kNanotube, kExact, Suite::kExact,
   "Mo(P_a x C_b) = b^2 * floor((a-1)^2/2)", "a >= 1; b >= 3"},
  {claim::kGrid, kExact, Suite::kExact,
   "Mo(P_a x P_b) = a^2*floor((b-1)^2/2) + b^2*floor((a-1)^2/2)", "a, b >= 1"},
  {claim::kLadder, kExact, Suite::kExact,
   "Mo(P_2 x P_{a+1}) = 4*floor(a^2/2)", "a >= 1"},
  {claim::kHamming, kExact, Suite::kExact,
   "Mo(K_{s1} x ... x K_{sk}) = 0", "s_i >= 2"},
  {claim::kHypercube, kExact, Suite::kExact,
   "Mo(Q_k) = 0", "k >= 1"},
  {claim::kJoinBound, kUpperBound, kBounds,
   "Mo(G + H) <= irr(G) + irr(H) + s1*s2*|s2 - s1| + 2*(s2*t1 + s1*t2)",
   "G, H: any"},
  {claim::kJoinExact, kExact, Suite::kExact,
   "Mo(G + H) = irr(G) + irr(H) + sum_{u in G, v in H} |s2 - s1 + deg(u) - deg(v)|",
   "G, H: any"},
  {claim::kJoinRegular, kExact, Suite::kExact,
   "Mo(G + H) = s1*s2*|s2 - s1 + r1 - r2| for r1-regular G and r2-regular H",
   "G, H: regular"},
  {claim::kCone, kClaimedExact, kExamples,
   "Mo(C_f + Empty(g)) = f*g*|f - g + 2|", "f >= 3; g >= 1"},
  {claim::kConeCorollary, kClaimedExact, kExamples,
   "Mo(C_f + Empty(g)) = f*g*|g - f + 2| (regular-join rendering)", "f >= 3; g >= 1"},
  {claim::kSuspensionBound, kUpperBound, kBounds,
   "Mo(K1 + G) <= irr(G) + s(s-1) + 2s", "G: any"},
  {claim::kSuspensionRegular, kClaimedExact, kExamples,
   "Mo(K1 + G) = s*|s - 1 - r| for r-regular G", "G: regular"},
  {claim::kStar, kClaimedExact, kExamples,
   "Mo(S_{s+1}) = s(s-1)", "s >= 1"},
  {claim::kWheel, kClaimedExact, kExamples,
   "Mo(W_{s+1}) = s*|s-3|", "s >= 3"},
  {claim::kFanBound, kUpperBound, kExamples,
   "Mo(F_{s+1}) <= s(s+1)", "s >= 1"},
  {claim::kFlowerBound, kUpperBound, kExamples,
   "Mo(K1 + g*K2) <= 4g", "g >= 1"},
  {claim::kLexBound, kUpperBound, kBounds,
   "Mo(G[H]) <= s2^3*Mo(G) + s1*irr(H) + t1*(2s2^3 - 3s2^2 - 2s2 (+3 if s2 odd))/6",
   "G: connected, s1 >= 2; H: any"},
  {claim::kLexExact, kExact, Suite::kExact,
   "Mo(G[H]) = s1*irr(H) + sum_{uv in E(G)} sum_{a,b in V(H)} |s2*(n_u - n_v) + deg(a) - deg(b)|",
   "G: connected, s1 >= 2; H: any"},
  {claim::kFenceClosed, kClaimedExact, kExamples,
   "Mo(C_g[P_2]) = 0", "g >= 3"},
  {claim::kFenceBound, kUpperBound, kExamples,
   "Mo(P_g[P_2]) <= 8*floor((g-1)^2/2)", "g >= 1"},
  {claim::kLexPathsBound, kUpperBound, kExamples,
   "Mo(P_g[P_h]) <= 2g + h^3*floor((g-1)^2/2) + (g-1)*(2h^3 - 3h^2 - 2h (+3 if h odd))/6",
   "g >= 2; h >= 1"},
  {claim::kInduBalaBound, kUpperBound, kBounds,
   "Mo(G v H) <= 2*(irr(G) + 2*irr(H) + s1*s2*|s2 - 2s1 - 1| + 2*(s2*t1 + s1*t2))",
   "G, H: any"},
  {claim::kInduBalaPP, kClaimedExact, kExamples,
   "Mo(P_g v P_h) = 2*(6 + g*h*(|h - 2g - 1| + 4) - 2(g+h))", "g, h >= 1"},
  {claim::kInduBalaPC, kClaimedExact, kExamples,
   "Mo(P_g v C_h) = 2*(2 + g*h*(|h - 2g - 1| + 4) - 2h)", "g >= 1; h >= 3"},
  {claim::kInduBalaCP, kClaimedExact, kExamples,
   "Mo(C_g v P_h) = 2*(4 + g*h*|h - 2g - 1| + 2g(2h - 1))", "g >= 3; h >= 1"},
  {claim::kSveBound, kUpperBound, kBounds,
   "Mo(S(G1) |> (G2^V u G3^I)) <= irr(G2) + irr(G3) + s1*s2*|s2 + s3 - s1 - t1| + 4*t1*s2 + "
   "2*s1*t2 + t1*s3*|s3 + s2 - s1 + 4| + 2*t3*t1 + s1*t1*|s2 + s1 - s3 - t1 - 4| + 4*t1^2",
   "G1: any; G2, G3: any or absent"},
});
// clang-format on

const std::array<ClaimInfo, kClaims.size()>& sorted_claims() {
  static const auto sorted = [] {
    auto copy = kClaims;
    std::sort(copy.begin(), copy.end(),
              [](const ClaimInfo& a, const ClaimInfo& b) { return a.id < b.id; });
    return copy;
  }();
  return sorted;
}

}  // namespace

std::string_view kind_name(ClaimKind kind) noexcept {
  switch (kind) {
    case ClaimKind::kExact: return "Exact";
    case ClaimKind::kUpperBound: return "UpperBound";
    case ClaimKind::kClaimedExact: return "ClaimedExact";
  }
  return "Unknown";
}

std::string_view suite_name(Suite suite) noexcept {
  switch (suite) {
    case Suite::kExact: return "exact";
    case Suite::kBounds: return "bounds";
    case Suite::kExamples: return "examples";
  }
  return "unknown";
}

std::span<const ClaimInfo> claim_registry() noexcept { return sorted_claims(); }

const ClaimInfo& find_claim(std::string_view id) {
  const auto& all = sorted_claims();
  auto it = std::lower_bound(all.begin(), all.end(), id,
                             [](const ClaimInfo& c, std::string_view key) { return c.id < key; });
  if (it == all.end() || it->id != id) {
    throw Error(Errc::kUnknownClaim, "unknown claim '" + std::string(id) + "'");
  }
  return *it;
}

std::string claim_registry_json() {
  nlohmann::json out = nlohmann::json::array();
  for (const ClaimInfo& c : claim_registry()) {
    out.push_back({{"claim_id", c.id},
                   {"kind", kind_name(c.kind)},
                   {"suite", suite_name(c.suite)},
                   {"citation", c.statement},
                   {"params", c.params}});
  }
  return out.dump(2) + "\n";
}

}  // namespace mostar
