#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar {

// Every operator documents how result ids decompose into factor blocks; see
// describe_layout() and PRODUCT_LAYOUTS.md.

/// G∘H. Ids 0..s1-1 are G; copy i of H occupies s1+i*s2 .. s1+(i+1)*s2-1 and
/// every vertex of copy i is joined to G-vertex i.
Graph corona(const Graph& g, const Graph& h);

/// G∘Empty(m): m pendant vertices on every vertex of G.
Graph thorn(const Graph& g, std::uint32_t m);

/// G□H. Vertex (a,b) has id a*h.order()+b.
Graph cartesian(const Graph& g, const Graph& h);

/// Left fold of cartesian(). Throws Error(kBadArity) on an empty list.
Graph cartesian_n(std::span<const Graph> factors);

/// k-fold Cartesian power; k >= 1 (kBadParam otherwise).
Graph cartesian_power(const Graph& g, std::uint32_t k);

/// G+H. Ids 0..s1-1 are G, s1..s1+s2-1 are H; all cross pairs are edges.
Graph join(const Graph& g, const Graph& h);

/// G[H]. Vertex (a,b) has id a*h.order()+b; (a,b)~(c,d) iff ac ∈ E(G), or
/// a = c and bd ∈ E(H).
Graph lexicographic(const Graph& g, const Graph& h);

/// Two copies of join(g,h); copy 2 ids are shifted by s1+s2. H-vertex j of
/// copy 1 (id s1+j) is matched to H-vertex j of copy 2 (id 2*s1+s2+j).
Graph indu_bala(const Graph& g, const Graph& h);

/// S(G). Ids 0..s1-1 are the original vertices; s1+i is the vertex inserted
/// into the i-th edge of g.edges() (canonical order).
Graph subdivision(const Graph& g);

using OptionalGraphRef = std::optional<std::reference_wrapper<const Graph>>;

/// Subdivision vertex-edge join of g1 with g2 (on the original vertices) and
/// g3 (on the inserted vertices). Layout: subdivision(g1), then g2 (if
/// present), then g3 (if present). An absent factor plays the null graph.
Graph sve_join(const Graph& g1, OptionalGraphRef g2, OptionalGraphRef g3);

enum class ProductOp {
  kCorona,
  kCartesian,
  kJoin,
  kLexicographic,
  kInduBala,
  kSubdivision,
  kSveJoin,
  kThorn,
};

std::string_view product_op_name(ProductOp op) noexcept;

/// Contiguous id range [first, first+count) holding one block of a product.
struct LayoutBlock {
  std::string name;
  std::uint32_t first = 0;
  std::uint32_t count = 0;
};

struct ProductLayout {
  ProductOp op;
  std::vector<LayoutBlock> blocks;

  std::uint32_t order() const noexcept;
};

/// Order and size of an operand, enough to derive any layout.
struct FactorShape {
  std::uint32_t order = 0;
  std::uint32_t size = 0;
};

/// Block decomposition of the result of `op` on factors with the given
/// shapes. Arity: corona/cartesian/join/lexicographic/indu-bala take 2, thorn
/// takes 2 (the second shape is Empty(m)), subdivision takes 1 and sve-join
/// takes 1 to 3 (use order 0 for an absent factor).
ProductLayout describe_layout(ProductOp op, std::span<const FactorShape> factors);

}  // namespace mostar
