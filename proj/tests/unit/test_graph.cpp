#include <gtest/gtest.h>

#include <algorithm>

#include "mostar/families.hpp"
#include "mostar/graph.hpp"
#include "mostar/verify.hpp"
#include "reference.hpp"

namespace mostar {
namespace {

Graph make(std::uint32_t n, std::vector<Edge> e) { return Graph::build(n, e); }

TEST(GraphBuild, PathDegrees) {
  const Graph p3 = make(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(p3.order(), 3u);
  EXPECT_EQ(p3.size(), 2u);
  EXPECT_EQ(p3.degrees(), (std::vector<std::uint32_t>{1, 2, 1}));
}

TEST(GraphBuild, SingleVertex) {
  const Graph k1 = make(1, {});
  EXPECT_EQ(k1.order(), 1u);
  EXPECT_EQ(k1.size(), 0u);
}

TEST(GraphBuild, RepeatsCollapse) {
  const Graph k2 = make(2, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2.edges()[0], (Edge{0, 1}));
}

TEST(GraphBuild, Errors) {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    ADD_FAILURE() << "no error";
    return Errc::kParse;
  };
  EXPECT_EQ(code_of([] { make(3, {{1, 1}}); }), Errc::kSelfLoop);
  EXPECT_EQ(code_of([] { make(3, {{0, 3}}); }), Errc::kVertexOutOfRange);
  EXPECT_EQ(code_of([] { make(0, {}); }), Errc::kEmptyGraph);
}

TEST(GraphBuild, NeighborsSortedAndSymmetric) {
  const Graph g = make(5, {{4, 0}, {2, 0}, {3, 1}, {0, 1}, {2, 3}});
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (Vertex w : nb) EXPECT_TRUE(g.has_edge(w, v));
  }
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(path_graph(4)));
  EXPECT_FALSE(is_connected(empty_graph(3)));
  EXPECT_FALSE(is_connected(disjoint_union(complete_graph(2), complete_graph(2))));
  EXPECT_TRUE(is_connected(complete_graph(1)));
}

TEST(Distances, Examples) {
  EXPECT_EQ(all_pairs_distances(cycle_graph(4)).max_entry(), 2u);
  EXPECT_EQ(all_pairs_distances(path_graph(4)).at(0, 3), 3u);
  const DistanceMatrix k5 = all_pairs_distances(complete_graph(5));
  for (Vertex a = 0; a < 5; ++a) {
    for (Vertex b = 0; b < 5; ++b) EXPECT_EQ(k5.at(a, b), a == b ? 0u : 1u);
  }
}

TEST(Distances, DisconnectedThrows) {
  try {
    all_pairs_distances(empty_graph(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDisconnected);
  }
}

TEST(Distances, MatchFloydWarshallOnCorpus) {
  std::vector<Graph> graphs;
  for (const auto& e : corpus(7, 11)) graphs.push_back(e.graph);
  graphs.push_back(generate({Family::kGrid, {8, 8}}));
  graphs.push_back(generate({Family::kHypercube, {6}}));
  graphs.push_back(generate({Family::kBridgeCycle, {4, 5}}));
  int checked = 0;
  for (const Graph& g : graphs) {
    if (!is_connected(g) || g.order() > 64) continue;
    const auto fw = ref::floyd_warshall(ref::from_graph(g));
    const DistanceMatrix d = all_pairs_distances(g);
    for (Vertex a = 0; a < g.order(); ++a) {
      for (Vertex b = 0; b < g.order(); ++b) {
        ASSERT_EQ(static_cast<int>(d.at(a, b)), fw[a][b]);
      }
    }
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(GraphInvariants, DegreeSumAndSymmetry) {
  for (const auto& e : corpus(7, 5)) {
    const Graph& g = e.graph;
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) ASSERT_TRUE(std::ranges::count(g.neighbors(w), v) == 1);
    }
    EXPECT_EQ(sum, 2 * g.size()) << e.name;
  }
}

TEST(DisjointUnion, Examples) {
  const Graph kk = disjoint_union(complete_graph(2), complete_graph(2));
  EXPECT_EQ(kk.order(), 4u);
  EXPECT_EQ(kk.size(), 2u);
  EXPECT_EQ(disjoint_union(complete_graph(1), complete_graph(1)), empty_graph(2));
  const Graph pc = disjoint_union(path_graph(3), cycle_graph(3));
  EXPECT_EQ(pc.order(), 6u);
  EXPECT_EQ(pc.size(), 5u);
  EXPECT_TRUE(pc.has_edge(3, 5));
}

TEST(DisjointUnion, AssociativeUpToRelabeling) {
  const Graph a = path_graph(3), b = cycle_graph(4), c = complete_graph(3);
  const Graph left = disjoint_union(disjoint_union(a, b), c);
  const Graph right = disjoint_union(a, disjoint_union(b, c));
  auto sorted_degrees = [](const Graph& g) {
    auto d = g.degrees();
    std::sort(d.begin(), d.end());
    return d;
  };
  EXPECT_EQ(left.order(), right.order());
  EXPECT_EQ(sorted_degrees(left), sorted_degrees(right));
}

TEST(CommonNeighbors, Examples) {
  EXPECT_EQ(common_neighbors(complete_graph(3), 0, 1), 1u);
  EXPECT_EQ(common_neighbors(path_graph(3), 0, 1), 0u);
  EXPECT_EQ(common_neighbors(complete_graph(4), 2, 3), 2u);
}

TEST(RegularDegree, Examples) {
  EXPECT_EQ(regular_degree(cycle_graph(5)), 2);
  EXPECT_EQ(regular_degree(empty_graph(3)), 0);
  EXPECT_EQ(regular_degree(path_graph(3)), -1);
}

}  // namespace
}  // namespace mostar
