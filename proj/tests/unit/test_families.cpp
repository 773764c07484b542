#include <gtest/gtest.h>

#include "mostar/families.hpp"
#include "mostar/graph.hpp"

namespace mostar {
namespace {

struct Shape {
  const char* name;
  std::vector<std::uint32_t> params;
  std::uint32_t order;
  std::size_t size;
};

TEST(Families, OrdersAndSizes) {
  const std::vector<Shape> cases = {
      {"path", {7}, 7, 6},
      {"cycle", {5}, 5, 5},
      {"complete", {5}, 5, 10},
      {"complete-bipartite", {2, 3}, 5, 6},
      {"empty", {4}, 4, 0},
      {"star", {5}, 5, 4},
      {"wheel", {5}, 6, 10},
      {"fan", {4}, 5, 7},
      {"hypercube", {3}, 8, 12},
      {"hamming", {3, 3}, 9, 18},
      {"hamming", {2, 2, 2}, 8, 12},
      {"grid", {3, 4}, 12, 17},
      {"ladder", {2}, 6, 7},
      {"friendship", {3}, 7, 9},
      {"cone", {4, 2}, 6, 12},
      {"bridge-path", {3}, 9, 8},
      {"bridge-cycle", {2, 3}, 6, 7},
  };
  for (const Shape& c : cases) {
    const auto f = parse_family(c.name);
    ASSERT_TRUE(f) << c.name;
    const Graph g = generate({*f, c.params});
    EXPECT_EQ(g.order(), c.order) << c.name;
    EXPECT_EQ(g.size(), c.size) << c.name;
  }
}

TEST(Families, NamesRoundTrip) {
  for (int i = 0; i <= static_cast<int>(Family::kBridgeCycle); ++i) {
    const auto f = static_cast<Family>(i);
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
  EXPECT_FALSE(parse_family("dodecahedron"));
  EXPECT_EQ(to_string({Family::kCompleteBipartite, {2, 3}}), "complete-bipartite(2,3)");
}

TEST(Families, HubLayout) {
  const Graph w = generate({Family::kWheel, {5}});
  EXPECT_EQ(w.degree(0), 5u);
  for (Vertex v = 1; v <= 5; ++v) EXPECT_EQ(w.degree(v), 3u);
  const Graph star = generate({Family::kStar, {4}});
  EXPECT_EQ(star.degree(0), 3u);
}

TEST(Families, FriendshipBlades) {
  const Graph f = generate({Family::kFriendship, {2}});
  EXPECT_EQ(f.degree(0), 4u);
  EXPECT_TRUE(f.has_edge(1, 2));
  EXPECT_TRUE(f.has_edge(3, 4));
  EXPECT_FALSE(f.has_edge(2, 3));
}

TEST(Families, BridgeAnchors) {
  const Graph b = generate({Family::kBridgePath, {3}});
  // P3 centers are 1, 4, 7.
  EXPECT_TRUE(b.has_edge(1, 4));
  EXPECT_TRUE(b.has_edge(4, 7));
  EXPECT_EQ(b.degree(4), 4u);
}

TEST(Families, BadParameters) {
  auto code = [](Family f, std::vector<std::uint32_t> p) {
    try {
      generate({f, std::move(p)});
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::kParse;
  };
  EXPECT_EQ(code(Family::kCycle, {2}), Errc::kBadParam);
  EXPECT_EQ(code(Family::kPath, {0}), Errc::kBadParam);
  EXPECT_EQ(code(Family::kPath, {2, 3}), Errc::kBadArity);
  EXPECT_EQ(code(Family::kGrid, {2}), Errc::kBadArity);
  EXPECT_EQ(code(Family::kHamming, {}), Errc::kBadArity);
  EXPECT_EQ(code(Family::kHamming, {1, 3}), Errc::kBadParam);
  EXPECT_EQ(code(Family::kWheel, {2}), Errc::kBadParam);
  EXPECT_EQ(code(Family::kStar, {1}), Errc::kBadParam);
  EXPECT_EQ(code(Family::kCone, {2, 2}), Errc::kBadParam);
  EXPECT_EQ(code(Family::kBridgeCycle, {2, 2}), Errc::kBadParam);
}

TEST(BridgeGraph, MixedParts) {
  const std::vector<Graph> parts = {path_graph(2), cycle_graph(4)};
  const std::vector<Vertex> anchors = {1, 2};
  const Graph g = bridge_graph(parts, anchors);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_TRUE(g.has_edge(1, 4));
  EXPECT_THROW(bridge_graph(parts, std::vector<Vertex>{0}), Error);
  EXPECT_THROW(bridge_graph(parts, std::vector<Vertex>{0, 9}), Error);
}

}  // namespace
}  // namespace mostar
