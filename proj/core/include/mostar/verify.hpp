#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mostar/claims.hpp"
#include "mostar/graph.hpp"

namespace mostar {

inline constexpr std::string_view kSpecVersion = "1.0.0";

/// xorshift64* (shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D), seeded
/// through one splitmix64 step so that seed 0 is usable.
class XorShift64Star {
 public:
  explicit XorShift64Star(std::uint64_t seed) noexcept;
  std::uint64_t next() noexcept;

 private:
  std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

struct CorpusEntry {
  std::string name;  // "path(4)", "er(5,3)"
  Graph graph;
};

/// Family instances of order <= max_n, then 20 connected G(n, 1/2) samples
/// for each order 2..max_n. Identical labelled graphs keep their first name.
/// Deterministic in (max_n, seed), and corpus(m, seed) is a subsequence of
/// corpus(n, seed) for m <= n.
std::vector<CorpusEntry> corpus(std::uint32_t max_n, std::uint64_t seed);

/// The sampler used by corpus(): edges u<v in lexicographic order, each kept
/// when the top bit of the next draw is set; resampled until connected.
Graph random_connected_graph(std::uint32_t order, XorShift64Star& rng);

enum class OutcomeStatus { kExactMatch, kBoundHolds, kBoundTight, kViolated, kSkipped };

std::string_view status_name(OutcomeStatus s) noexcept;

/// ExactMatch/Violated for equalities; BoundHolds/BoundTight/Violated for
/// upper bounds.
OutcomeStatus classify(ClaimKind kind, std::int64_t oracle, std::int64_t formula) noexcept;

struct Param {
  std::string key;
  std::variant<std::int64_t, std::string> value;

  friend bool operator==(const Param&, const Param&) = default;
};

struct ClaimOutcome {
  std::string claim_id;
  std::vector<Param> params;
  std::optional<std::int64_t> oracle;
  std::optional<std::int64_t> formula;
  ClaimKind kind = ClaimKind::kExact;
  OutcomeStatus status = OutcomeStatus::kSkipped;
  std::string reason;  // set for Skipped

  friend bool operator==(const ClaimOutcome&, const ClaimOutcome&) = default;
};

/// Operand of a single check. graph == nullptr marks an absent factor (only
/// meaningful for the vertex-edge join).
struct NamedGraph {
  std::string name;
  const Graph* graph = nullptr;
};

/// Parameters for one evaluation of a claim. Product claims read `graphs`
/// in operand order; family claims read `ints` in the order listed in the
/// registry's parameter schema.
struct ClaimBinding {
  std::vector<NamedGraph> graphs;
  std::vector<std::pair<std::string, std::int64_t>> ints;
};

/// Builds the operand, runs the oracle, evaluates the formula and classifies.
/// Throws Error(kUnknownClaim), or kBadArity/kBadParam for a malformed binding.
ClaimOutcome check_claim(std::string_view claim_id, const ClaimBinding& binding);

/// Every binding of one claim drawn from the corpus and the max_n family grid.
std::vector<ClaimOutcome> check_claim(std::string_view claim_id,
                                      std::span<const CorpusEntry> corpus, std::uint32_t max_n);

enum class SuiteSelection { kExact, kBounds, kExamples, kAll };

std::optional<SuiteSelection> parse_suite(std::string_view name) noexcept;
std::string_view suite_selection_name(SuiteSelection s) noexcept;

struct ClaimTally {
  std::int64_t exact = 0;
  std::int64_t tight = 0;
  std::int64_t holds = 0;
  std::int64_t violated = 0;
  std::int64_t skipped = 0;
};

struct VerificationReport {
  SuiteSelection suite = SuiteSelection::kAll;
  std::uint32_t max_n = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> corpus_names;
  // Canonical order: claim_id, then sweep order.
  std::vector<ClaimOutcome> outcomes;

  /// One entry per registered claim.
  std::map<std::string, ClaimTally> summary() const;

  /// True when no claim of the exact or bounds suite is Violated. Example
  /// rows never affect it.
  bool gate_passed() const;

  std::string to_json() const;
};

/// Claims outside `suite` get a single Skipped row so the summary still
/// lists them. Throws Error(kBadParam) if max_n < 2.
VerificationReport run_suite(SuiteSelection suite, std::uint32_t max_n, std::uint64_t seed);

}  // namespace mostar
