#include <benchmark/benchmark.h>

#include "matchpow/betti.hpp"
#include "matchpow/edge_ideal.hpp"
#include "matchpow/gf_rank.hpp"
#include "matchpow/graph.hpp"
#include "matchpow/graph_enum.hpp"
#include "matchpow/linear.hpp"
#include "matchpow/matching.hpp"

using namespace matchpow;

namespace {

void BM_BettiFig1Cube(benchmark::State& state) {
  const MonomialIdeal ideal = sqfree_power(edge_ideal(fixture_graphs().fig1), 3);
  for (auto _ : state) benchmark::DoNotOptimize(multigraded_betti(ideal));
}
BENCHMARK(BM_BettiFig1Cube);

void BM_BettiCycle(benchmark::State& state) {
  const MonomialIdeal ideal = sqfree_power(edge_ideal(cycle_graph(static_cast<int>(state.range(0)))), 2);
  BettiOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(multigraded_betti(ideal, opts));
  state.counters["generators"] = static_cast<double>(ideal.size());
}
BENCHMARK(BM_BettiCycle)->DenseRange(7, 11, 2)->Unit(benchmark::kMillisecond);

void BM_BettiWorkers(benchmark::State& state) {
  const MonomialIdeal ideal = sqfree_power(edge_ideal(cycle_graph(11)), 2);
  BettiOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(multigraded_betti(ideal, opts));
}
BENCHMARK(BM_BettiWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_LinearRelatedness(benchmark::State& state) {
  const MonomialIdeal ideal = sqfree_power(edge_ideal(fixture_graphs().fig1), 3);
  const bool combinatorial = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(combinatorial ? is_linearly_related_combinatorial(ideal)
                                           : is_linearly_related_homological(ideal));
  }
  state.SetLabel(combinatorial ? "combinatorial" : "homological");
}
BENCHMARK(BM_LinearRelatedness)->Arg(0)->Arg(1);

void BM_LinearQuotients(benchmark::State& state) {
  const MonomialIdeal ideal = sqfree_power(edge_ideal(path_graph(static_cast<int>(state.range(0)))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(linear_quotients_order(ideal));
}
BENCHMARK(BM_LinearQuotients)->DenseRange(6, 12, 3);

void BM_MatchingNumbers(benchmark::State& state) {
  Rng rng(1);
  const Graph g = random_graph(static_cast<int>(state.range(0)), 1, 3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(matching_number(g));
    benchmark::DoNotOptimize(induced_matching_number(g));
    benchmark::DoNotOptimize(restricted_matching_number(g));
  }
}
BENCHMARK(BM_MatchingNumbers)->Arg(12)->Arg(20)->Arg(28);

void BM_RankModP(benchmark::State& state) {
  Rng rng(2);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<SparseVector> cols(n);
  for (auto& col : cols) {
    for (std::uint32_t r = 0; r < n; ++r) {
      if (rng.chance(1, 10)) col.emplace_back(r, static_cast<std::uint32_t>(1 + rng.below(32002)));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(cols, n, 32003));
}
BENCHMARK(BM_RankModP)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_EnumerateGraphsSeven(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t total = 0;
    for (int n = 1; n <= 7; ++n) total += enumerate_graphs(n).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_EnumerateGraphsSeven);

void BM_CanonicalForm(benchmark::State& state) {
  Rng rng(3);
  const Graph g = random_graph(static_cast<int>(state.range(0)), 1, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_certificate(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(10);

}  // namespace
BENCHMARK_MAIN();
