#include "mostar/verify.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <nlohmann/json.hpp>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "mostar/error.hpp"
#include "mostar/families.hpp"
#include "mostar/formulas.hpp"
#include "mostar/invariants.hpp"
#include "mostar/operators.hpp"

namespace mostar {

XorShift64Star::XorShift64Star(std::uint64_t seed) noexcept : state_(splitmix64(seed)) {
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t XorShift64Star::next() noexcept {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Graph random_connected_graph(std::uint32_t order, XorShift64Star& rng) {
  std::vector<Edge> edges;
  for (;;) {
    edges.clear();
    for (Vertex u = 0; u < order; ++u) {
      for (Vertex v = u + 1; v < order; ++v) {
        if (rng.next() >> 63) edges.push_back({u, v});
      }
    }
    Graph g = Graph::build(order, edges);
    if (is_connected(g)) return g;
  }
}

namespace {

constexpr std::uint32_t kRandomPerOrder = 20;

std::vector<FamilySpec> family_grid(std::uint32_t n) {
  std::vector<FamilySpec> out;
  auto add = [&](Family f, std::vector<std::uint32_t> p) { out.push_back({f, std::move(p)}); };
  for (std::uint32_t s = 1; s <= n; ++s) add(Family::kPath, {s});
  for (std::uint32_t s = 3; s <= n; ++s) add(Family::kCycle, {s});
  for (std::uint32_t s = 1; s <= n; ++s) add(Family::kComplete, {s});
  for (std::uint32_t r = 1; r <= n; ++r) {
    for (std::uint32_t s = r; s <= n; ++s) add(Family::kCompleteBipartite, {r, s});
  }
  for (std::uint32_t s = 1; s <= n; ++s) add(Family::kEmpty, {s});
  for (std::uint32_t s = 2; s <= n; ++s) add(Family::kStar, {s});
  for (std::uint32_t s = 3; s <= n; ++s) add(Family::kWheel, {s});
  for (std::uint32_t s = 1; s <= n; ++s) add(Family::kFan, {s});
  for (std::uint32_t k = 1; k <= n && k < 32; ++k) add(Family::kHypercube, {k});
  for (std::uint32_t a = 2; a <= n; ++a) {
    for (std::uint32_t b = a; b <= n; ++b) {
      add(Family::kHamming, {a, b});
      for (std::uint32_t c = b; c <= n; ++c) add(Family::kHamming, {a, b, c});
    }
  }
  for (std::uint32_t a = 1; a <= n; ++a) {
    for (std::uint32_t b = a; b <= n; ++b) add(Family::kGrid, {a, b});
  }
  for (std::uint32_t a = 1; a <= n; ++a) add(Family::kLadder, {a});
  for (std::uint32_t g = 1; g <= n; ++g) add(Family::kFriendship, {g});
  for (std::uint32_t f = 3; f <= n; ++f) {
    for (std::uint32_t g = 1; g <= n; ++g) add(Family::kCone, {f, g});
  }
  for (std::uint32_t k = 1; k <= n; ++k) add(Family::kBridgePath, {k});
  for (std::uint32_t k = 1; k <= n; ++k) {
    for (std::uint32_t c = 3; c <= n; ++c) add(Family::kBridgeCycle, {k, c});
  }
  return out;
}

// Cheap order estimate so the grid never materializes large instances.
std::uint64_t family_order(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::kCompleteBipartite: return std::uint64_t{p[0]} + p[1];
    case Family::kStar: return p[0];
    case Family::kWheel:
    case Family::kFan: return std::uint64_t{p[0]} + 1;
    case Family::kHypercube: return std::uint64_t{1} << p[0];
    case Family::kHamming: {
      std::uint64_t o = 1;
      for (std::uint32_t s : p) o *= s;
      return o;
    }
    case Family::kGrid: return std::uint64_t{p[0]} * p[1];
    case Family::kLadder: return 2 * (std::uint64_t{p[0]} + 1);
    case Family::kFriendship: return 2 * std::uint64_t{p[0]} + 1;
    case Family::kCone: return std::uint64_t{p[0]} + p[1];
    case Family::kBridgePath: return 3 * std::uint64_t{p[0]};
    case Family::kBridgeCycle: return std::uint64_t{p[0]} * p[1];
    default: return p[0];
  }
}

}  // namespace

std::vector<CorpusEntry> corpus(std::uint32_t max_n, std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  std::set<std::pair<std::uint32_t, std::vector<Edge>>> seen;
  auto push = [&](std::string name, Graph g) {
    auto key = std::make_pair(g.order(), std::vector<Edge>(g.edges().begin(), g.edges().end()));
    if (seen.insert(std::move(key)).second) out.push_back({std::move(name), std::move(g)});
  };

  for (const FamilySpec& spec : family_grid(max_n)) {
    if (family_order(spec) <= max_n) push(to_string(spec), generate(spec));
  }
  for (std::uint32_t n = 2; n <= max_n; ++n) {
    // Per-order streams keep each block independent of max_n.
    XorShift64Star rng(seed + n * 0x9E3779B97F4A7C15ULL);
    for (std::uint32_t i = 0; i < kRandomPerOrder; ++i) {
      push("er(" + std::to_string(n) + "," + std::to_string(i) + ")",
           random_connected_graph(n, rng));
    }
  }
  return out;
}

std::string_view status_name(OutcomeStatus s) noexcept {
  switch (s) {
    case OutcomeStatus::kExactMatch: return "ExactMatch";
    case OutcomeStatus::kBoundHolds: return "BoundHolds";
    case OutcomeStatus::kBoundTight: return "BoundTight";
    case OutcomeStatus::kViolated: return "Violated";
    case OutcomeStatus::kSkipped: return "Skipped";
  }
  return "Unknown";
}

OutcomeStatus classify(ClaimKind kind, std::int64_t oracle, std::int64_t formula) noexcept {
  if (kind == ClaimKind::kUpperBound) {
    if (oracle < formula) return OutcomeStatus::kBoundHolds;
    return oracle == formula ? OutcomeStatus::kBoundTight : OutcomeStatus::kViolated;
  }
  return oracle == formula ? OutcomeStatus::kExactMatch : OutcomeStatus::kViolated;
}

namespace {

struct Evaluation {
  std::optional<std::int64_t> oracle;
  std::optional<std::int64_t> formula;
  std::string skip;
};

Evaluation skipped(std::string why) { return {std::nullopt, std::nullopt, std::move(why)}; }

// Oracle values and factor stats, memoized for graphs that outlive the run
// (corpus entries). Temporaries are never cached since their addresses can
// be reused.
class Context {
 public:
  void mark_stable(const Graph* g) { stable_.insert(g); }

  const FactorStats& stats(const Graph& g) {
    if (!stable_.contains(&g)) {
      scratch_.push_back(FactorStats::of(g));
      return scratch_.back();
    }
    auto it = stats_.find(&g);
    if (it == stats_.end()) it = stats_.emplace(&g, FactorStats::of(g)).first;
    return it->second;
  }

  // Mostar index of build(), or nullopt when the result is disconnected.
  std::optional<std::int64_t> product_mo(ProductOp op, std::initializer_list<const Graph*> operands,
                                         std::int64_t extra, const std::function<Graph()>& build) {
    std::array<const Graph*, 3> ptrs{};
    bool cacheable = true;
    std::size_t i = 0;
    for (const Graph* g : operands) {
      ptrs[i++] = g;
      if (g != nullptr && !stable_.contains(g)) cacheable = false;
    }
    const Key key{op, ptrs[0], ptrs[1], ptrs[2], extra};
    if (cacheable) {
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    const std::optional<std::int64_t> mo = oracle(build());
    if (cacheable) cache_.emplace(key, mo);
    return mo;
  }

  static std::optional<std::int64_t> oracle(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    return mostar(g);
  }

  void clear_scratch() { scratch_.clear(); }

 private:
  using Key = std::tuple<ProductOp, const Graph*, const Graph*, const Graph*, std::int64_t>;

  std::unordered_set<const Graph*> stable_;
  std::unordered_map<const Graph*, FactorStats> stats_;
  std::map<Key, std::optional<std::int64_t>> cache_;
  std::deque<FactorStats> scratch_;
};

using Ints = std::vector<std::pair<std::string, std::int64_t>>;

struct Sweep {
  std::span<const CorpusEntry> corpus;
  std::int64_t n;

  NamedGraph named(std::size_t i) const { return {corpus[i].name, &corpus[i].graph}; }

  std::vector<ClaimBinding> singles() const {
    std::vector<ClaimBinding> out;
    for (std::size_t i = 0; i < corpus.size(); ++i) out.push_back({{named(i)}, {}});
    return out;
  }

  std::vector<ClaimBinding> pairs() const {
    std::vector<ClaimBinding> out;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (std::size_t j = 0; j < corpus.size(); ++j) out.push_back({{named(i), named(j)}, {}});
    }
    return out;
  }

  std::vector<std::size_t> small(std::uint32_t max_order) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (corpus[i].graph.order() <= max_order) out.push_back(i);
    }
    return out;
  }

  // Every binding of `keys` with key i ranging over [lo[i], n].
  std::vector<ClaimBinding> grid(std::vector<std::string> keys, std::vector<std::int64_t> lo) const {
    std::vector<ClaimBinding> out;
    std::vector<std::int64_t> cur(lo);
    if (std::any_of(lo.begin(), lo.end(), [&](std::int64_t x) { return x > n; })) return out;
    for (;;) {
      ClaimBinding b;
      for (std::size_t i = 0; i < keys.size(); ++i) b.ints.emplace_back(keys[i], cur[i]);
      out.push_back(std::move(b));
      std::size_t i = keys.size();
      while (i > 0) {
        --i;
        if (++cur[i] <= n) break;
        cur[i] = lo[i];
        if (i == 0) return out;
      }
      if (keys.empty()) return out;
    }
  }
};

using EvalFn = std::function<Evaluation(const ClaimBinding&, Context&)>;
using SweepFn = std::function<std::vector<ClaimBinding>(const Sweep&)>;

struct Handler {
  std::vector<std::string> graph_keys;  // empty: keys G1..Gk by position
  EvalFn eval;
  SweepFn sweep;
};

const Graph& operand(const ClaimBinding& b, std::size_t i, std::string_view id) {
  if (b.graphs.size() <= i || b.graphs[i].graph == nullptr) {
    throw Error(Errc::kBadArity, std::string(id) + ": missing graph operand " + std::to_string(i));
  }
  return *b.graphs[i].graph;
}

std::int64_t int_param(const ClaimBinding& b, std::size_t i, std::string_view id) {
  if (b.ints.size() <= i) {
    throw Error(Errc::kBadArity, std::string(id) + ": missing integer parameter " + std::to_string(i));
  }
  return b.ints[i].second;
}

Evaluation compare(std::optional<std::int64_t> oracle, const FormulaValue& f) {
  if (!oracle) return skipped("disconnected");
  return {oracle, f.value, {}};
}

std::uint32_t u32(std::int64_t x, std::string_view id) {
  if (x < 1 || x > (1 << 16)) throw Error(Errc::kBadParam, std::string(id) + ": parameter out of range");
  return static_cast<std::uint32_t>(x);
}

// Evaluator for a claim whose operand is a single graph built from ints.
Handler family_claim(std::vector<std::string> keys, std::vector<std::int64_t> lo,
                     std::function<Graph(const std::vector<std::uint32_t>&)> build,
                     std::function<FormulaValue(const std::vector<std::int64_t>&)> formula,
                     std::string_view id) {
  Handler h;
  h.eval = [=](const ClaimBinding& b, Context&) {
    std::vector<std::int64_t> p;
    std::vector<std::uint32_t> pu;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      p.push_back(int_param(b, i, id));
      pu.push_back(u32(p.back(), id));
    }
    const FormulaValue f = formula(p);
    return compare(Context::oracle(build(pu)), f);
  };
  h.sweep = [=](const Sweep& s) { return s.grid(keys, lo); };
  return h;
}

std::vector<ClaimBinding> hamming_bindings(const Sweep& s) {
  std::vector<ClaimBinding> out;
  const std::int64_t cap = s.n * s.n;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t from, std::int64_t prod) {
    if (!cur.empty()) {
      ClaimBinding b;
      for (std::size_t i = 0; i < cur.size(); ++i) b.ints.emplace_back("s" + std::to_string(i + 1), cur[i]);
      out.push_back(std::move(b));
    }
    if (cur.size() == 3) return;
    for (std::int64_t x = from; x <= s.n && prod * x <= cap; ++x) {
      cur.push_back(x);
      rec(x, prod * x);
      cur.pop_back();
    }
  };
  rec(2, 1);
  return out;
}

Graph k1() { return complete_graph(1); }

const std::map<std::string_view, Handler>& handlers() {
  static const std::map<std::string_view, Handler> table = [] {
    std::map<std::string_view, Handler> t;
    using P = std::vector<std::uint32_t>;
    using I = std::vector<std::int64_t>;

    // Basic families.
    t[claim::kProp1Complete] = family_claim(
        {"s"}, {1}, [](const P& p) { return complete_graph(p[0]); },
        [](const I& p) { return prop1(Prop1Family::kComplete, p[0]); }, claim::kProp1Complete);
    t[claim::kProp1Cycle] = family_claim(
        {"s"}, {3}, [](const P& p) { return cycle_graph(p[0]); },
        [](const I& p) { return prop1(Prop1Family::kCycle, p[0]); }, claim::kProp1Cycle);
    t[claim::kProp1BalancedBipartite] = family_claim(
        {"s"}, {1}, [](const P& p) { return complete_bipartite_graph(p[0], p[0]); },
        [](const I& p) { return prop1(Prop1Family::kBalancedBipartite, p[0]); },
        claim::kProp1BalancedBipartite);
    t[claim::kProp1Path] = family_claim(
        {"s"}, {1}, [](const P& p) { return path_graph(p[0]); },
        [](const I& p) { return prop1(Prop1Family::kPath, p[0]); }, claim::kProp1Path);

    t[claim::kProp2Bound] = {
        {"G"},
        [](const ClaimBinding& b, Context& ctx) -> Evaluation {
          const Graph& g = operand(b, 0, claim::kProp2Bound);
          return {ctx.stats(g).irr_t, prop2_bound(g.order()).value, {}};
        },
        [](const Sweep& s) { return s.singles(); }};

    // Corona.
    auto corona_claim = [](std::string_view id, auto formula) {
      return Handler{
          {"G", "H"},
          [=](const ClaimBinding& b, Context& ctx) {
            const Graph& g = operand(b, 0, id);
            const Graph& h = operand(b, 1, id);
            const FactorStats& fg = ctx.stats(g);
            if (!fg.mo) return skipped("disconnected");
            const FactorStats& fh = ctx.stats(h);
            return compare(ctx.product_mo(ProductOp::kCorona, {&g, &h}, 0,
                                          [&] { return corona(g, h); }),
                           formula(fg, fh));
          },
          [](const Sweep& s) { return s.pairs(); }};
    };
    t[claim::kCoronaBound] = corona_claim(claim::kCoronaBound, thm_corona_bound);
    t[claim::kCoronaExact] = corona_claim(claim::kCoronaExact, corona_exact);

    t[claim::kThornBound] = {
        {"G"},
        [](const ClaimBinding& b, Context& ctx) {
          const Graph& g = operand(b, 0, claim::kThornBound);
          const std::int64_t m = int_param(b, 0, claim::kThornBound);
          const FactorStats& fg = ctx.stats(g);
          if (!fg.mo) return skipped("disconnected");
          const auto mm = u32(m, claim::kThornBound);
          return compare(ctx.product_mo(ProductOp::kThorn, {&g}, m, [&] { return thorn(g, mm); }),
                         cor_thorn_bound(fg, m));
        },
        [](const Sweep& s) {
          std::vector<ClaimBinding> out;
          for (std::size_t i = 0; i < s.corpus.size(); ++i) {
            for (std::int64_t m = 1; m <= s.n; ++m) out.push_back({{s.named(i)}, {{"m", m}}});
          }
          return out;
        }};

    t[claim::kBottleneck] = {
        {"H"},
        [](const ClaimBinding& b, Context& ctx) {
          const Graph& h = operand(b, 0, claim::kBottleneck);
          return compare(Context::oracle(corona(complete_graph(2), h)), ex_bottleneck(ctx.stats(h)));
        },
        [](const Sweep& s) { return s.singles(); }};

    t[claim::kBridgeB] = family_claim(
        {"k"}, {1}, [](const P& p) { return generate({Family::kBridgePath, {p[0]}}); },
        [](const I& p) { return ex_bridge(BridgeKind::kB, p); }, claim::kBridgeB);
    t[claim::kBridgeT] = family_claim(
        {"k"}, {1}, [](const P& p) { return generate({Family::kBridgeCycle, {p[0], 3}}); },
        [](const I& p) { return ex_bridge(BridgeKind::kT, p); }, claim::kBridgeT);
    t[claim::kBridgeJ] = family_claim(
        {"j", "k"}, {1, 3}, [](const P& p) { return corona(path_graph(p[0]), cycle_graph(p[1])); },
        [](const I& p) { return ex_bridge(BridgeKind::kJ, p); }, claim::kBridgeJ);

    // Cartesian.
    t[claim::kCartesian] = {
        {},
        [](const ClaimBinding& b, Context& ctx) {
          if (b.graphs.empty() || b.graphs.size() > 3) {
            throw Error(Errc::kBadArity, "thm.cartesian: needs 1 to 3 factors");
          }
          std::vector<FactorStats> fs;
          std::vector<Graph> gs;
          for (std::size_t i = 0; i < b.graphs.size(); ++i) {
            const Graph& g = operand(b, i, claim::kCartesian);
            fs.push_back(ctx.stats(g));
            if (!fs.back().mo) return skipped("disconnected");
          }
          const Graph* p0 = b.graphs[0].graph;
          const Graph* p1 = b.graphs.size() > 1 ? b.graphs[1].graph : nullptr;
          const Graph* p2 = b.graphs.size() > 2 ? b.graphs[2].graph : nullptr;
          auto build = [&] {
            std::vector<Graph> factors;
            for (const NamedGraph& ng : b.graphs) factors.push_back(*ng.graph);
            return cartesian_n(factors);
          };
          return compare(ctx.product_mo(ProductOp::kCartesian, {p0, p1, p2}, 0, build),
                         thm_cartesian(fs));
        },
        [](const Sweep& s) {
          std::vector<ClaimBinding> out = s.pairs();
          const auto tiny = s.small(3);
          for (std::size_t a : tiny) {
            for (std::size_t b : tiny) {
              for (std::size_t c : tiny) out.push_back({{s.named(a), s.named(b), s.named(c)}, {}});
            }
          }
          return out;
        }};

    t[claim::kCartesianPower] = {
        {"G"},
        [](const ClaimBinding& b, Context& ctx) {
          const Graph& g = operand(b, 0, claim::kCartesianPower);
          const std::int64_t k = int_param(b, 0, claim::kCartesianPower);
          const FactorStats& fg = ctx.stats(g);
          if (!fg.mo) return skipped("disconnected");
          const auto kk = u32(k, claim::kCartesianPower);
          return compare(Context::oracle(cartesian_power(g, kk)), cor_cartesian_power(fg, k));
        },
        [](const Sweep& s) {
          std::vector<ClaimBinding> out;
          for (std::size_t i : s.small(4)) {
            for (std::int64_t k = 1; k <= 3; ++k) out.push_back({{s.named(i)}, {{"k", k}}});
          }
          return out;
        }};

    t[claim::kNanotorus] = family_claim(
        {"a", "b"}, {3, 3}, [](const P& p) { return cartesian(cycle_graph(p[0]), cycle_graph(p[1])); },
        [](const I& p) { return ex_cartesian_family(CartesianFamily::kNanotorus, p); }, claim::kNanotorus);
    t[claim::kNanotube] = family_claim(
        {"a", "b"}, {1, 3}, [](const P& p) { return cartesian(path_graph(p[0]), cycle_graph(p[1])); },
        [](const I& p) { return ex_cartesian_family(CartesianFamily::kNanotube, p); }, claim::kNanotube);
    t[claim::kGrid] = family_claim(
        {"a", "b"}, {1, 1}, [](const P& p) { return generate({Family::kGrid, p}); },
        [](const I& p) { return ex_cartesian_family(CartesianFamily::kGrid, p); }, claim::kGrid);
    t[claim::kLadder] = family_claim(
        {"a"}, {1}, [](const P& p) { return generate({Family::kLadder, p}); },
        [](const I& p) { return ex_cartesian_family(CartesianFamily::kLadder, p); }, claim::kLadder);
    {
      Handler h;
      h.eval = [](const ClaimBinding& b, Context&) {
        std::vector<std::int64_t> p;
        std::vector<std::uint32_t> pu;
        for (const auto& [key, v] : b.ints) {
          p.push_back(v);
          pu.push_back(u32(v, claim::kHamming));
        }
        const FormulaValue f = ex_cartesian_family(CartesianFamily::kHamming, p);
        return compare(Context::oracle(generate({Family::kHamming, pu})), f);
      };
      h.sweep = hamming_bindings;
      t[claim::kHamming] = std::move(h);
    }
    {
      Handler h = family_claim(
          {"k"}, {1}, [](const P& p) { return generate({Family::kHypercube, p}); },
          [](const I& p) { return ex_cartesian_family(CartesianFamily::kHypercube, p); },
          claim::kHypercube);
      h.sweep = [](const Sweep& s) {
        std::vector<ClaimBinding> out;
        for (std::int64_t k = 1; k <= std::min<std::int64_t>(s.n, 6); ++k) out.push_back({{}, {{"k", k}}});
        return out;
      };
      t[claim::kHypercube] = std::move(h);
    }

    // Join.
    auto join_claim = [](std::string_view id, auto formula) {
      return Handler{{"G", "H"},
                     [=](const ClaimBinding& b, Context& ctx) {
                       const Graph& g = operand(b, 0, id);
                       const Graph& h = operand(b, 1, id);
                       return compare(ctx.product_mo(ProductOp::kJoin, {&g, &h}, 0,
                                                     [&] { return join(g, h); }),
                                      formula(g, h, ctx));
                     },
                     [](const Sweep& s) { return s.pairs(); }};
    };
    t[claim::kJoinBound] = join_claim(claim::kJoinBound, [](const Graph& g, const Graph& h, Context& ctx) {
      return thm_join_bound(ctx.stats(g), ctx.stats(h));
    });
    t[claim::kJoinExact] = join_claim(claim::kJoinExact, [](const Graph& g, const Graph& h, Context&) {
      return join_exact(g, h);
    });
    t[claim::kJoinRegular] = {
        {"G", "H"},
        [](const ClaimBinding& b, Context& ctx) {
          const Graph& g = operand(b, 0, claim::kJoinRegular);
          const Graph& h = operand(b, 1, claim::kJoinRegular);
          const FactorStats& fg = ctx.stats(g);
          const FactorStats& fh = ctx.stats(h);
          if (!fg.regularity || !fh.regularity) {
            throw Error(Errc::kBadParam, "cor.join.regular: both factors must be regular");
          }
          return compare(ctx.product_mo(ProductOp::kJoin, {&g, &h}, 0, [&] { return join(g, h); }),
                         cor_join_regular(fg.s, *fg.regularity, fh.s, *fh.regularity));
        },
        [](const Sweep& s) {
          std::vector<ClaimBinding> out;
          for (const ClaimBinding& b : s.pairs()) {
            if (regular_degree(*b.graphs[0].graph) >= 0 && regular_degree(*b.graphs[1].graph) >= 0) {
              out.push_back(b);
            }
          }
          return out;
        }};

    t[claim::kCone] = family_claim(
        {"f", "g"}, {3, 1}, [](const P& p) { return generate({Family::kCone, p}); },
        [](const I& p) { return ex_cone(p[0], p[1]); }, claim::kCone);
    t[claim::kConeCorollary] = family_claim(
        {"f", "g"}, {3, 1}, [](const P& p) { return generate({Family::kCone, p}); },
        [](const I& p) { return ex_cone_corollary(p[0], p[1]); }, claim::kConeCorollary);

    t[claim::kSuspensionBound] = {
        {"G"},
        [](const ClaimBinding& b, Context& ctx) {
          const Graph& g = operand(b, 0, claim::kSuspensionBound);
          return compare(Context::oracle(join(k1(), g)), ex_suspension_bound(ctx.stats(g)));
        },
        [](const Sweep& s) { return s.singles(); }};
    t[claim::kSuspensionRegular] = {
        {"G"},
        [](const ClaimBinding& b, Context& ctx) {
          const Graph& g = operand(b, 0, claim::kSuspensionRegular);
          const FactorStats& fg = ctx.stats(g);
          if (!fg.regularity) throw Error(Errc::kBadParam, "ex.suspension.regular: G must be regular");
          return compare(Context::oracle(join(k1(), g)), ex_suspension_regular(fg.s, *fg.regularity));
        },
        [](const Sweep& s) {
          std::vector<ClaimBinding> out;
          for (const ClaimBinding& b : s.singles()) {
            if (regular_degree(*b.graphs[0].graph) >= 0) out.push_back(b);
          }
          return out;
        }};

    t[claim::kStar] = family_claim(
        {"s"}, {1}, [](const P& p) { return join(k1(), empty_graph(p[0])); },
        [](const I& p) { return ex_star(p[0]); }, claim::kStar);
    t[claim::kWheel] = family_claim(
        {"s"}, {3}, [](const P& p) { return generate({Family::kWheel, p}); },
        [](const I& p) { return ex_wheel(p[0]); }, claim::kWheel);
    t[claim::kFanBound] = family_claim(
        {"s"}, {1}, [](const P& p) { return generate({Family::kFan, p}); },
        [](const I& p) { return ex_fan_bound(p[0]); }, claim::kFanBound);
    t[claim::kFlowerBound] = family_claim(
        {"g"}, {1}, [](const P& p) { return generate({Family::kFriendship, p}); },
        [](const I& p) { return ex_flower_bound(p[0]); }, claim::kFlowerBound);

    // Lexicographic.
    auto lex_claim = [](std::string_view id, auto formula) {
      return Handler{{"G", "H"},
                     [=](const ClaimBinding& b, Context& ctx) {
                       const Graph& g = operand(b, 0, id);
                       const Graph& h = operand(b, 1, id);
                       if (!ctx.stats(g).mo) return skipped("disconnected");
                       if (g.order() < 2) return skipped("G needs at least 2 vertices");
                       return compare(ctx.product_mo(ProductOp::kLexicographic, {&g, &h}, 0,
                                                     [&] { return lexicographic(g, h); }),
                                      formula(g, h, ctx));
                     },
                     [](const Sweep& s) { return s.pairs(); }};
    };
    t[claim::kLexBound] = lex_claim(claim::kLexBound, [](const Graph& g, const Graph& h, Context& ctx) {
      return thm_lex_bound(ctx.stats(g), ctx.stats(h));
    });
    t[claim::kLexExact] = lex_claim(claim::kLexExact, [](const Graph& g, const Graph& h, Context&) {
      return lex_exact(g, h);
    });
    t[claim::kFenceClosed] = family_claim(
        {"g"}, {3}, [](const P& p) { return lexicographic(cycle_graph(p[0]), path_graph(2)); },
        [](const I& p) { return ex_fence_closed(p[0]); }, claim::kFenceClosed);
    t[claim::kFenceBound] = family_claim(
        {"g"}, {1}, [](const P& p) { return lexicographic(path_graph(p[0]), path_graph(2)); },
        [](const I& p) { return ex_fence_bound(p[0]); }, claim::kFenceBound);
    t[claim::kLexPathsBound] = family_claim(
        {"g", "h"}, {2, 1}, [](const P& p) { return lexicographic(path_graph(p[0]), path_graph(p[1])); },
        [](const I& p) { return ex_lex_paths_bound(p[0], p[1]); }, claim::kLexPathsBound);

    // Indu-Bala.
    t[claim::kInduBalaBound] = {
        {"G", "H"},
        [](const ClaimBinding& b, Context& ctx) {
          const Graph& g = operand(b, 0, claim::kInduBalaBound);
          const Graph& h = operand(b, 1, claim::kInduBalaBound);
          return compare(ctx.product_mo(ProductOp::kInduBala, {&g, &h}, 0,
                                        [&] { return indu_bala(g, h); }),
                         thm_indu_bala_bound(ctx.stats(g), ctx.stats(h)));
        },
        [](const Sweep& s) { return s.pairs(); }};
    t[claim::kInduBalaPP] = family_claim(
        {"g", "h"}, {1, 1}, [](const P& p) { return indu_bala(path_graph(p[0]), path_graph(p[1])); },
        [](const I& p) { return ex_indu_bala(InduBalaExample::kPathPath, p[0], p[1]); },
        claim::kInduBalaPP);
    t[claim::kInduBalaPC] = family_claim(
        {"g", "h"}, {1, 3}, [](const P& p) { return indu_bala(path_graph(p[0]), cycle_graph(p[1])); },
        [](const I& p) { return ex_indu_bala(InduBalaExample::kPathCycle, p[0], p[1]); },
        claim::kInduBalaPC);
    t[claim::kInduBalaCP] = family_claim(
        {"g", "h"}, {3, 1}, [](const P& p) { return indu_bala(cycle_graph(p[0]), path_graph(p[1])); },
        [](const I& p) { return ex_indu_bala(InduBalaExample::kCyclePath, p[0], p[1]); },
        claim::kInduBalaCP);

    // Subdivision vertex-edge join.
    t[claim::kSveBound] = {
        {"G1", "G2", "G3"},
        [](const ClaimBinding& b, Context& ctx) {
          const Graph& g1 = operand(b, 0, claim::kSveBound);
          const Graph* g2 = b.graphs.size() > 1 ? b.graphs[1].graph : nullptr;
          const Graph* g3 = b.graphs.size() > 2 ? b.graphs[2].graph : nullptr;
          const FactorStats f2 = g2 ? ctx.stats(*g2) : FactorStats::absent();
          const FactorStats f3 = g3 ? ctx.stats(*g3) : FactorStats::absent();
          auto ref = [](const Graph* g) -> OptionalGraphRef {
            if (g == nullptr) return std::nullopt;
            return std::cref(*g);
          };
          return compare(ctx.product_mo(ProductOp::kSveJoin, {&g1, g2, g3}, 0,
                                        [&] { return sve_join(g1, ref(g2), ref(g3)); }),
                         thm_sve_bound(ctx.stats(g1), f2, f3));
        },
        [](const Sweep& s) {
          std::vector<NamedGraph> side{{"absent", nullptr}};
          for (std::size_t i : s.small(3)) side.push_back(s.named(i));
          std::vector<ClaimBinding> out;
          for (std::size_t i = 0; i < s.corpus.size(); ++i) {
            for (const NamedGraph& a : side) {
              for (const NamedGraph& c : side) out.push_back({{s.named(i), a, c}, {}});
            }
          }
          return out;
        }};
    return t;
  }();
  return table;
}

const Handler& handler_for(std::string_view id) {
  find_claim(id);  // throws kUnknownClaim
  auto it = handlers().find(id);
  if (it == handlers().end()) {
    throw Error(Errc::kUnknownClaim, "no evaluator registered for '" + std::string(id) + "'");
  }
  return it->second;
}

ClaimOutcome evaluate(std::string_view id, const Handler& h, const ClaimBinding& b, Context& ctx) {
  ClaimOutcome out;
  out.claim_id = std::string(id);
  out.kind = find_claim(id).kind;
  for (std::size_t i = 0; i < b.graphs.size(); ++i) {
    std::string key = i < h.graph_keys.size() ? h.graph_keys[i] : "G" + std::to_string(i + 1);
    out.params.push_back({std::move(key), b.graphs[i].graph ? b.graphs[i].name : "absent"});
  }
  for (const auto& [key, v] : b.ints) out.params.push_back({key, v});

  Evaluation e = h.eval(b, ctx);
  ctx.clear_scratch();
  if (!e.oracle || !e.formula) {
    out.status = OutcomeStatus::kSkipped;
    out.reason = e.skip.empty() ? "not evaluated" : e.skip;
    return out;
  }
  out.oracle = e.oracle;
  out.formula = e.formula;
  out.status = classify(out.kind, *e.oracle, *e.formula);
  return out;
}

std::vector<ClaimOutcome> sweep_claim(std::string_view id, std::span<const CorpusEntry> corpus,
                                      std::uint32_t max_n, Context& ctx) {
  const Handler& h = handler_for(id);
  std::vector<ClaimOutcome> out;
  for (const ClaimBinding& b : h.sweep(Sweep{corpus, max_n})) out.push_back(evaluate(id, h, b, ctx));
  return out;
}

bool suite_selected(SuiteSelection sel, Suite s) {
  switch (sel) {
    case SuiteSelection::kExact: return s == Suite::kExact;
    case SuiteSelection::kBounds: return s == Suite::kBounds;
    case SuiteSelection::kExamples: return s == Suite::kExamples;
    case SuiteSelection::kAll: return true;
  }
  return false;
}

}  // namespace

ClaimOutcome check_claim(std::string_view claim_id, const ClaimBinding& binding) {
  Context ctx;
  return evaluate(claim_id, handler_for(claim_id), binding, ctx);
}

std::vector<ClaimOutcome> check_claim(std::string_view claim_id, std::span<const CorpusEntry> corpus,
                                      std::uint32_t max_n) {
  Context ctx;
  for (const CorpusEntry& e : corpus) ctx.mark_stable(&e.graph);
  return sweep_claim(claim_id, corpus, max_n, ctx);
}

std::optional<SuiteSelection> parse_suite(std::string_view name) noexcept {
  if (name == "exact") return SuiteSelection::kExact;
  if (name == "bounds") return SuiteSelection::kBounds;
  if (name == "examples") return SuiteSelection::kExamples;
  if (name == "all") return SuiteSelection::kAll;
  return std::nullopt;
}

std::string_view suite_selection_name(SuiteSelection s) noexcept {
  switch (s) {
    case SuiteSelection::kExact: return "exact";
    case SuiteSelection::kBounds: return "bounds";
    case SuiteSelection::kExamples: return "examples";
    case SuiteSelection::kAll: return "all";
  }
  return "unknown";
}

std::map<std::string, ClaimTally> VerificationReport::summary() const {
  std::map<std::string, ClaimTally> out;
  for (const ClaimInfo& c : claim_registry()) out[std::string(c.id)];
  for (const ClaimOutcome& o : outcomes) {
    ClaimTally& t = out[o.claim_id];
    switch (o.status) {
      case OutcomeStatus::kExactMatch: ++t.exact; break;
      case OutcomeStatus::kBoundTight: ++t.tight; break;
      case OutcomeStatus::kBoundHolds: ++t.holds; break;
      case OutcomeStatus::kViolated: ++t.violated; break;
      case OutcomeStatus::kSkipped: ++t.skipped; break;
    }
  }
  return out;
}

bool VerificationReport::gate_passed() const {
  return std::none_of(outcomes.begin(), outcomes.end(), [](const ClaimOutcome& o) {
    return o.status == OutcomeStatus::kViolated && find_claim(o.claim_id).suite != Suite::kExamples;
  });
}

std::string VerificationReport::to_json() const {
  using json = nlohmann::ordered_json;
  const json corpus = {{"suite", suite_selection_name(suite)},
                       {"max_n", max_n},
                       {"seed", seed},
                       {"random_per_order", kRandomPerOrder},
                       {"prng", "xorshift64*"},
                       {"size", corpus_names.size()},
                       {"graphs", corpus_names}};

  // Written by hand around compact rows: one outcome per line keeps large
  // reports diffable.
  std::string out = "{\n\"spec_version\": " + json(kSpecVersion).dump() + ",\n";
  out += "\"corpus\": " + corpus.dump() + ",\n\"outcomes\": [";
  bool first = true;
  for (const ClaimOutcome& o : outcomes) {
    json params = json::object();
    for (const Param& p : o.params) {
      std::visit([&](const auto& v) { params[p.key] = v; }, p.value);
    }
    json row;
    row["claim_id"] = o.claim_id;
    row["params"] = std::move(params);
    row["oracle"] = o.oracle ? json(*o.oracle) : json(nullptr);
    row["formula"] = o.formula ? json(*o.formula) : json(nullptr);
    row["kind"] = kind_name(o.kind);
    row["status"] = status_name(o.status);
    if (o.status == OutcomeStatus::kSkipped) row["reason"] = o.reason;
    out += first ? "\n" : ",\n";
    first = false;
    out += row.dump();
  }
  out += "\n],\n\"summary\": {";
  first = true;
  for (const auto& [id, t] : this->summary()) {
    const json tally = {{"exact", t.exact},
                        {"tight", t.tight},
                        {"holds", t.holds},
                        {"violated", t.violated},
                        {"skipped", t.skipped}};
    out += first ? "\n" : ",\n";
    first = false;
    out += json(id).dump() + ": " + tally.dump();
  }
  out += "\n}\n}\n";
  return out;
}

VerificationReport run_suite(SuiteSelection suite, std::uint32_t max_n, std::uint64_t seed) {
  if (max_n < 2) throw Error(Errc::kBadParam, "max_n must be at least 2");
  VerificationReport report;
  report.suite = suite;
  report.max_n = max_n;
  report.seed = seed;

  const std::vector<CorpusEntry> graphs = corpus(max_n, seed);
  for (const CorpusEntry& e : graphs) report.corpus_names.push_back(e.name);

  Context ctx;
  for (const CorpusEntry& e : graphs) ctx.mark_stable(&e.graph);

  // The registry is sorted by id, so outcomes come out in canonical order.
  for (const ClaimInfo& c : claim_registry()) {
    if (!suite_selected(suite, c.suite)) {
      ClaimOutcome skip;
      skip.claim_id = std::string(c.id);
      skip.kind = c.kind;
      skip.status = OutcomeStatus::kSkipped;
      skip.reason = "not in suite " + std::string(suite_selection_name(suite));
      report.outcomes.push_back(std::move(skip));
      continue;
    }
    auto rows = sweep_claim(c.id, graphs, max_n, ctx);
    report.outcomes.insert(report.outcomes.end(), std::make_move_iterator(rows.begin()),
                           std::make_move_iterator(rows.end()));
  }
  return report;
}

}  // namespace mostar
