#pragma once

#include <span>
#include <string>
#include <string_view>

namespace mostar {

/// Exact: a proven or derived equality. UpperBound: a proven inequality
/// oracle <= value. ClaimedExact: a worked example value that is checked,
/// never trusted.
enum class ClaimKind { kExact, kUpperBound, kClaimedExact };

/// Partition used by the verifier. Violations in kExact and kBounds fail a
/// run; kExamples rows are informational.
enum class Suite { kExact, kBounds, kExamples };

std::string_view kind_name(ClaimKind kind) noexcept;
std::string_view suite_name(Suite suite) noexcept;

struct ClaimInfo {
  std::string_view id;
  ClaimKind kind;
  Suite suite;
  std::string_view statement;
  std::string_view params;
};

namespace claim {
inline constexpr std::string_view kProp1Complete = "prop1.complete";
inline constexpr std::string_view kProp1Cycle = "prop1.cycle";
inline constexpr std::string_view kProp1BalancedBipartite = "prop1.balanced_bipartite";
inline constexpr std::string_view kProp1Path = "prop1.path";
inline constexpr std::string_view kProp2Bound = "prop2.bound";
inline constexpr std::string_view kCoronaBound = "thm.corona.bound";
inline constexpr std::string_view kCoronaExact = "derived.corona.exact";
inline constexpr std::string_view kThornBound = "cor.thorn.bound";
inline constexpr std::string_view kBottleneck = "ex.bottleneck";
inline constexpr std::string_view kBridgeB = "ex.bridge.B";
inline constexpr std::string_view kBridgeT = "ex.bridge.T";
inline constexpr std::string_view kBridgeJ = "ex.bridge.J";
inline constexpr std::string_view kCartesian = "thm.cartesian";
inline constexpr std::string_view kCartesianPower = "cor.cartesian.power";
inline constexpr std::string_view kNanotorus = "ex.nanotorus";
inline constexpr std::string_view kNanotube = "ex.nanotube";
inline constexpr std::string_view kGrid = "ex.grid";
inline constexpr std::string_view kLadder = "ex.ladder";
inline constexpr std::string_view kHamming = "ex.hamming";
inline constexpr std::string_view kHypercube = "ex.hypercube";
inline constexpr std::string_view kJoinBound = "thm.join.bound";
inline constexpr std::string_view kJoinExact = "derived.join.exact";
inline constexpr std::string_view kJoinRegular = "cor.join.regular";
inline constexpr std::string_view kCone = "ex.cone";
inline constexpr std::string_view kConeCorollary = "ex.cone.corollary";
inline constexpr std::string_view kSuspensionBound = "ex.suspension.bound";
inline constexpr std::string_view kSuspensionRegular = "ex.suspension.regular";
inline constexpr std::string_view kStar = "ex.star";
inline constexpr std::string_view kWheel = "ex.wheel";
inline constexpr std::string_view kFanBound = "ex.fan.bound";
inline constexpr std::string_view kFlowerBound = "ex.flower.bound";
inline constexpr std::string_view kLexBound = "thm.lex.bound";
inline constexpr std::string_view kLexExact = "derived.lex.exact";
inline constexpr std::string_view kFenceClosed = "ex.fence.closed";
inline constexpr std::string_view kFenceBound = "ex.fence.bound";
inline constexpr std::string_view kLexPathsBound = "ex.lex.paths.bound";
inline constexpr std::string_view kInduBalaBound = "thm.indubala.bound";
inline constexpr std::string_view kInduBalaPP = "ex.indubala.pp";
inline constexpr std::string_view kInduBalaPC = "ex.indubala.pc";
inline constexpr std::string_view kInduBalaCP = "ex.indubala.cp";
inline constexpr std::string_view kSveBound = "thm.sve.bound";
}  // namespace claim

/// Every registered claim, sorted by id.
std::span<const ClaimInfo> claim_registry() noexcept;

/// Throws Error(kUnknownClaim).
const ClaimInfo& find_claim(std::string_view id);

/// [{claim_id, kind, suite, citation, params}, ...]
std::string claim_registry_json();

}  // namespace mostar
