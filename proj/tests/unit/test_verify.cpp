#include <gtest/gtest.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <variant>

#include "mostar/families.hpp"
#include "mostar/verify.hpp"

namespace mostar {
namespace {

bool has(const std::vector<CorpusEntry>& c, const Graph& g) {
  return std::any_of(c.begin(), c.end(), [&](const CorpusEntry& e) { return e.graph == g; });
}

TEST(Rng, KnownSequenceAndSeedZero) {
  XorShift64Star a(1), b(1), z(0);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(z.next(), 0u);
  EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
}

TEST(Corpus, ContainsSmallFamilies) {
  const auto c = corpus(4, 42);
  for (std::uint32_t s = 2; s <= 4; ++s) {
    EXPECT_TRUE(has(c, path_graph(s))) << s;
    EXPECT_TRUE(has(c, complete_graph(s))) << s;
  }
  EXPECT_TRUE(has(c, cycle_graph(3)));
  EXPECT_TRUE(has(c, cycle_graph(4)));
  EXPECT_TRUE(has(c, complete_bipartite_graph(1, 1)));
  EXPECT_TRUE(has(c, complete_bipartite_graph(2, 2)));
  for (const auto& e : c) EXPECT_LE(e.graph.order(), 4u) << e.name;
}

TEST(Corpus, TwoVerticesHasNoCycles) {
  for (const auto& e : corpus(2, 7)) EXPECT_LT(e.graph.size(), e.graph.order()) << e.name;
}

TEST(Corpus, DeterministicAndDeduplicated) {
  const auto a = corpus(6, 42);
  const auto b = corpus(6, 42);
  ASSERT_EQ(a.size(), b.size());
  std::set<std::string> names;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].graph, b[i].graph);
    names.insert(a[i].name);
    for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(a[i].graph == a[j].graph) << a[i].name;
  }
  EXPECT_EQ(names.size(), a.size());
  EXPECT_NE(corpus(6, 43).back().graph, a.back().graph);
}

TEST(Corpus, RandomGraphsAreConnected) {
  XorShift64Star rng(5);
  for (std::uint32_t n = 1; n <= 12; ++n) EXPECT_TRUE(is_connected(random_connected_graph(n, rng)));
}

TEST(Corpus, MonotoneInMaxN) {
  const auto small = corpus(5, 42);
  const auto big = corpus(7, 42);
  std::size_t j = 0;
  for (const auto& e : small) {
    while (j < big.size() && big[j].name != e.name) ++j;
    ASSERT_LT(j, big.size()) << e.name;
    EXPECT_EQ(big[j].graph, e.graph);
  }
}

TEST(Classify, AllCases) {
  EXPECT_EQ(classify(ClaimKind::kExact, 3, 3), OutcomeStatus::kExactMatch);
  EXPECT_EQ(classify(ClaimKind::kClaimedExact, 3, 4), OutcomeStatus::kViolated);
  EXPECT_EQ(classify(ClaimKind::kUpperBound, 3, 4), OutcomeStatus::kBoundHolds);
  EXPECT_EQ(classify(ClaimKind::kUpperBound, 4, 4), OutcomeStatus::kBoundTight);
  EXPECT_EQ(classify(ClaimKind::kUpperBound, 5, 4), OutcomeStatus::kViolated);
}

TEST(CheckClaim, Examples) {
  const Graph p2 = path_graph(2), p3 = path_graph(3), k1 = complete_graph(1), k2 = complete_graph(2);
  auto cart = check_claim("thm.cartesian", {{{"P2", &p2}, {"P3", &p3}}, {}});
  EXPECT_EQ(cart.status, OutcomeStatus::kExactMatch);
  EXPECT_EQ(cart.oracle, 8);

  auto cor = check_claim("thm.corona.bound", {{{"K2", &k2}, {"K1", &k1}}, {}});
  EXPECT_EQ(cor.status, OutcomeStatus::kBoundTight);
  EXPECT_EQ(cor.formula, 4);

  auto flower = check_claim("ex.flower.bound", {{}, {{"g", 3}}});
  EXPECT_EQ(flower.formula, 12);
  EXPECT_EQ(flower.oracle, 24);
  EXPECT_EQ(flower.status, OutcomeStatus::kViolated);

  auto sve = check_claim("thm.sve.bound", {{{"K2", &k2}, {"K1", &k1}, {"K1", &k1}}, {}});
  EXPECT_EQ(sve.oracle, 7);
  EXPECT_EQ(sve.formula, 20);
  EXPECT_EQ(sve.status, OutcomeStatus::kBoundHolds);
}

TEST(CheckClaim, DisconnectedIsSkipped) {
  const Graph e2 = empty_graph(2), k1 = complete_graph(1);
  auto o = check_claim("derived.corona.exact", {{{"E2", &e2}, {"K1", &k1}}, {}});
  EXPECT_EQ(o.status, OutcomeStatus::kSkipped);
  EXPECT_EQ(o.reason, "disconnected");
  EXPECT_FALSE(o.oracle);
}

TEST(CheckClaim, Errors) {
  try {
    check_claim("thm.unknown", ClaimBinding{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnknownClaim);
  }
  EXPECT_THROW(check_claim("thm.join.bound", ClaimBinding{}), Error);
  EXPECT_THROW(check_claim("prop1.path", ClaimBinding{}), Error);
}

TEST(CheckClaim, SweepCoversEveryRegisteredClaim) {
  const auto c = corpus(4, 1);
  for (const ClaimInfo& info : claim_registry()) {
    const auto rows = check_claim(info.id, c, 4);
    EXPECT_FALSE(rows.empty()) << info.id;
    const bool evaluated = std::any_of(rows.begin(), rows.end(), [](const ClaimOutcome& o) {
      return o.status != OutcomeStatus::kSkipped;
    });
    EXPECT_TRUE(evaluated) << info.id;
  }
}

TEST(RunSuite, ExactSuiteSmall) {
  const VerificationReport r = run_suite(SuiteSelection::kExact, 5, 1);
  EXPECT_TRUE(r.gate_passed());
  for (const auto& o : r.outcomes) EXPECT_NE(o.status, OutcomeStatus::kViolated) << o.claim_id;
  const auto summary = r.summary();
  EXPECT_EQ(summary.size(), claim_registry().size());
  EXPECT_EQ(summary.at("thm.join.bound").skipped, 1);
}

TEST(RunSuite, ExamplesNeverFailTheGate) {
  const VerificationReport r = run_suite(SuiteSelection::kExamples, 5, 42);
  EXPECT_TRUE(r.gate_passed());
  EXPECT_GT(r.summary().at("ex.bridge.B").violated, 0);
}

TEST(RunSuite, RejectsTinyMaxN) { EXPECT_THROW(run_suite(SuiteSelection::kAll, 1, 0), Error); }

TEST(RunSuite, OutcomesInCanonicalOrder) {
  const VerificationReport r = run_suite(SuiteSelection::kAll, 4, 42);
  EXPECT_TRUE(std::is_sorted(r.outcomes.begin(), r.outcomes.end(),
                             [](const ClaimOutcome& a, const ClaimOutcome& b) { return a.claim_id < b.claim_id; }));
}

TEST(RunSuite, MonotoneOutcomes) {
  const auto small = run_suite(SuiteSelection::kAll, 4, 42);
  const auto big = run_suite(SuiteSelection::kAll, 5, 42);
  auto key = [](const ClaimOutcome& o) {
    std::string k = o.claim_id;
    for (const Param& p : o.params) {
      k += "|" + p.key + "=";
      k += std::visit([](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>) return v;
        else return std::to_string(v);
      }, p.value);
    }
    return k;
  };
  std::set<std::string> big_keys;
  for (const auto& o : big.outcomes) {
    if (o.status != OutcomeStatus::kSkipped || o.reason == "disconnected") big_keys.insert(key(o));
  }
  for (const auto& o : small.outcomes) {
    if (o.status == OutcomeStatus::kSkipped && o.reason != "disconnected") continue;
    EXPECT_TRUE(big_keys.contains(key(o))) << key(o);
  }
}

TEST(Report, JsonSchemaAndDeterminism) {
  const auto a = run_suite(SuiteSelection::kAll, 4, 42).to_json();
  const auto b = run_suite(SuiteSelection::kAll, 4, 42).to_json();
  EXPECT_EQ(a, b);
  const auto doc = nlohmann::json::parse(a);
  EXPECT_EQ(doc.at("spec_version"), "1.0.0");
  EXPECT_EQ(doc.at("corpus").at("max_n"), 4);
  EXPECT_EQ(doc.at("corpus").at("seed"), 42);
  ASSERT_TRUE(doc.at("outcomes").is_array());
  for (const auto& row : doc.at("outcomes")) {
    for (const char* key : {"claim_id", "params", "oracle", "formula", "kind", "status"}) {
      ASSERT_TRUE(row.contains(key)) << key;
    }
    EXPECT_TRUE(row.at("params").is_object());
  }
  for (const ClaimInfo& c : claim_registry()) {
    const auto& t = doc.at("summary").at(std::string(c.id));
    for (const char* key : {"exact", "tight", "holds", "violated", "skipped"}) EXPECT_TRUE(t.contains(key));
  }
}

}  // namespace
}  // namespace mostar
