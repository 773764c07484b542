#include <gtest/gtest.h>

#include "mostar/families.hpp"
#include "mostar/operators.hpp"
#include "reference.hpp"

namespace mostar {
namespace {

std::vector<Graph> operands() {
  return {complete_graph(1), complete_graph(2), path_graph(3),   cycle_graph(4),
          empty_graph(2),    generate({Family::kStar, {4}}),     complete_graph(4),
          generate({Family::kFan, {3}}),  disjoint_union(path_graph(2), complete_graph(1))};
}

TEST(Operators, MatchDefinitions) {
  for (const Graph& g : operands()) {
    const ref::Dense dg = ref::from_graph(g);
    for (const Graph& h : operands()) {
      const ref::Dense dh = ref::from_graph(h);
      EXPECT_EQ(corona(g, h), ref::corona(dg, dh));
      EXPECT_EQ(cartesian(g, h), ref::cartesian(dg, dh));
      EXPECT_EQ(join(g, h), ref::join(dg, dh));
      EXPECT_EQ(lexicographic(g, h), ref::lexicographic(dg, dh));
      EXPECT_EQ(indu_bala(g, h), ref::indu_bala(dg, dh));
    }
    EXPECT_EQ(subdivision(g), ref::subdivision(dg));
  }
}

TEST(Operators, SveMatchesDefinition) {
  const auto ops = operands();
  for (const Graph& g1 : ops) {
    const ref::Dense d1 = ref::from_graph(g1);
    for (std::size_t i = 0; i <= 3; ++i) {
      for (std::size_t j = 0; j <= 3; ++j) {
        // Index 0 stands for an absent factor.
        std::optional<ref::Dense> d2, d3;
        OptionalGraphRef r2, r3;
        if (i > 0) {
          d2 = ref::from_graph(ops[i - 1]);
          r2 = std::cref(ops[i - 1]);
        }
        if (j > 0) {
          d3 = ref::from_graph(ops[j - 1]);
          r3 = std::cref(ops[j - 1]);
        }
        EXPECT_EQ(sve_join(g1, r2, r3), ref::sve_join(d1, d2 ? &*d2 : nullptr, d3 ? &*d3 : nullptr));
      }
    }
  }
}

TEST(Operators, SizeFormulas) {
  for (const Graph& g : operands()) {
    for (const Graph& h : operands()) {
      const std::size_t s1 = g.order(), t1 = g.size(), s2 = h.order(), t2 = h.size();
      EXPECT_EQ(corona(g, h).size(), t1 + s1 * t2 + s1 * s2);
      EXPECT_EQ(cartesian(g, h).size(), s1 * t2 + s2 * t1);
      EXPECT_EQ(join(g, h).size(), t1 + t2 + s1 * s2);
      EXPECT_EQ(lexicographic(g, h).size(), s1 * t2 + t1 * s2 * s2);
      EXPECT_EQ(indu_bala(g, h).size(), 2 * (t1 + t2 + s1 * s2) + s2);
    }
  }
}

TEST(Operators, Examples) {
  const Graph k1 = complete_graph(1), k2 = complete_graph(2);
  EXPECT_EQ(corona(k2, k1), Graph::build(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}}));
  EXPECT_EQ(cartesian(path_graph(2), path_graph(3)).size(), 7u);
  EXPECT_EQ(lexicographic(k2, k2), complete_graph(4));
  const Graph sve = sve_join(k2, std::cref(k1), std::cref(k1));
  EXPECT_EQ(sve.order(), 5u);
  EXPECT_EQ(sve.size(), 5u);
  EXPECT_EQ(thorn(path_graph(3), 0), path_graph(3));
  EXPECT_EQ(thorn(k1, 3), generate({Family::kStar, {4}}));
}

TEST(Operators, IndubalaOfSingletonsIsP4) {
  const Graph g = indu_bala(complete_graph(1), complete_graph(1));
  // Degrees of P4 under some labelling.
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  EXPECT_EQ(d, (std::vector<std::uint32_t>{1, 1, 2, 2}));
  EXPECT_TRUE(is_connected(g));
}

TEST(Operators, CartesianFoldAndPower) {
  const std::vector<Graph> factors = {path_graph(2), path_graph(3), cycle_graph(3)};
  EXPECT_EQ(cartesian_n(factors), cartesian(cartesian(factors[0], factors[1]), factors[2]));
  EXPECT_EQ(cartesian_power(complete_graph(2), 3), generate({Family::kHypercube, {3}}));
  EXPECT_EQ(cartesian_power(cycle_graph(4), 1), cycle_graph(4));
  EXPECT_THROW(cartesian_n(std::vector<Graph>{}), Error);
  EXPECT_THROW(cartesian_power(path_graph(2), 0), Error);
}

TEST(Layouts, BlocksTileTheProduct) {
  const Graph g = path_graph(3), h = cycle_graph(4), k = complete_graph(2);
  const FactorShape fg{g.order(), static_cast<std::uint32_t>(g.size())};
  const FactorShape fh{h.order(), static_cast<std::uint32_t>(h.size())};
  const FactorShape fk{k.order(), static_cast<std::uint32_t>(k.size())};
  const FactorShape none{0, 0};
  struct Case {
    ProductOp op;
    std::vector<FactorShape> shapes;
    std::uint32_t order;
  };
  const std::vector<Case> cases = {
      {ProductOp::kCorona, {fg, fh}, corona(g, h).order()},
      {ProductOp::kCartesian, {fg, fh}, cartesian(g, h).order()},
      {ProductOp::kJoin, {fg, fh}, join(g, h).order()},
      {ProductOp::kLexicographic, {fg, fh}, lexicographic(g, h).order()},
      {ProductOp::kInduBala, {fg, fh}, indu_bala(g, h).order()},
      {ProductOp::kSubdivision, {fg}, subdivision(g).order()},
      {ProductOp::kSveJoin, {fg, fh, fk}, sve_join(g, std::cref(h), std::cref(k)).order()},
      {ProductOp::kSveJoin, {fg, none, fk}, sve_join(g, std::nullopt, std::cref(k)).order()},
      {ProductOp::kThorn, {fg, {2, 0}}, thorn(g, 2).order()},
  };
  for (const Case& c : cases) {
    const ProductLayout layout = describe_layout(c.op, c.shapes);
    EXPECT_EQ(layout.order(), c.order) << product_op_name(c.op);
    std::uint32_t next = 0;
    for (const LayoutBlock& b : layout.blocks) {
      EXPECT_EQ(b.first, next) << product_op_name(c.op) << " " << b.name;
      next += b.count;
    }
    EXPECT_EQ(next, c.order);
  }
}

TEST(Layouts, CoronaCopiesAttachToTheirOwner) {
  const Graph g = path_graph(3), h = cycle_graph(3);
  const Graph c = corona(g, h);
  const FactorShape fg{3, 2}, fh{3, 3};
  const ProductLayout layout = describe_layout(ProductOp::kCorona, std::vector<FactorShape>{fg, fh});
  ASSERT_EQ(layout.blocks.size(), 4u);
  for (std::uint32_t i = 0; i < 3; ++i) {
    const LayoutBlock& copy = layout.blocks[1 + i];
    for (std::uint32_t x = 0; x < copy.count; ++x) EXPECT_TRUE(c.has_edge(i, copy.first + x));
  }
}

TEST(Layouts, BadArity) {
  EXPECT_THROW(describe_layout(ProductOp::kCorona, std::vector<FactorShape>{{2, 1}}), Error);
}

}  // namespace
}  // namespace mostar
