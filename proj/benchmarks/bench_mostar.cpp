#include <benchmark/benchmark.h>

#include <array>

#include "mostar/families.hpp"
#include "mostar/formulas.hpp"
#include "mostar/invariants.hpp"

namespace mostar {
namespace {

void BM_OracleGrid(benchmark::State& state) {
  const auto side = static_cast<std::uint32_t>(state.range(0));
  const Graph g = generate({Family::kGrid, {side, side}});
  for (auto _ : state) benchmark::DoNotOptimize(mostar(g));
  state.SetComplexityN(g.order());
}
BENCHMARK(BM_OracleGrid)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond)->Complexity();

void BM_OraclePath(benchmark::State& state) {
  const Graph g = path_graph(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mostar(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OraclePath)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMillisecond)->Complexity();

void BM_OracleHypercube(benchmark::State& state) {
  const Graph g = generate({Family::kHypercube, {static_cast<std::uint32_t>(state.range(0))}});
  for (auto _ : state) benchmark::DoNotOptimize(mostar(g));
}
BENCHMARK(BM_OracleHypercube)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_EdgeContributions(benchmark::State& state) {
  const Graph g = generate({Family::kWheel, {static_cast<std::uint32_t>(state.range(0))}});
  for (auto _ : state) benchmark::DoNotOptimize(edge_contributions(g));
}
BENCHMARK(BM_EdgeContributions)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_FormulaGrid(benchmark::State& state) {
  const std::array<std::int64_t, 2> p{state.range(0), state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(ex_cartesian_family(CartesianFamily::kGrid, p));
}
BENCHMARK(BM_FormulaGrid)->Arg(100)->Arg(10000);

void BM_FormulaCartesianStats(benchmark::State& state) {
  const Graph g = generate({Family::kGrid, {20, 20}});
  for (auto _ : state) benchmark::DoNotOptimize(FactorStats::of(g));
}
BENCHMARK(BM_FormulaCartesianStats)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace mostar

BENCHMARK_MAIN();
