#include <benchmark/benchmark.h>

#include "zdmd/bs_partition.hpp"
#include "zdmd/distance.hpp"
#include "zdmd/pair_cover.hpp"
#include "zdmd/solver.hpp"

using namespace zdmd;

namespace {

void BM_BfsAllPairs(benchmark::State& state) {
  const auto lbs = build_labeled_bs(static_cast<std::uint64_t>(state.range(0)),
                                    static_cast<std::uint64_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(bfs_all_pairs(lbs.graph));
  state.counters["vertices"] = static_cast<double>(lbs.graph.vertex_count());
}
BENCHMARK(BM_BfsAllPairs)->Args({5, 7})->Args({7, 11})->Args({11, 13})->Args({13, 31});

// Full scan of all 278256 five-subsets at (5,7); none resolves.
void BM_ScanFiveSubsets57(benchmark::State& state) {
  const PairCover cover(bfs_all_pairs(build_labeled_bs(5, 7).graph));
  for (auto _ : state) {
    const auto scan = scan_subsets_of_size(cover, 5, kDefaultBudget);
    benchmark::DoNotOptimize(scan.tested);
  }
  state.SetItemsProcessed(state.iterations() * 278256);
}
BENCHMARK(BM_ScanFiveSubsets57)->Unit(benchmark::kMillisecond);

void BM_BranchAndBound(benchmark::State& state) {
  const auto lbs = build_labeled_bs(static_cast<std::uint64_t>(state.range(0)),
                                    static_cast<std::uint64_t>(state.range(1)));
  BnbOptions options;
  options.family = lbs.partition.a_family();
  for (auto _ : state) benchmark::DoNotOptimize(min_resolving_bnb(lbs.graph, options).upper);
}
BENCHMARK(BM_BranchAndBound)->Args({3, 7})->Args({5, 7})->Args({5, 11})->Unit(benchmark::kMillisecond);

void BM_Greedy(benchmark::State& state) {
  const auto dm = bfs_all_pairs(build_labeled_bs(static_cast<std::uint64_t>(state.range(0)),
                                                 static_cast<std::uint64_t>(state.range(1)))
                                    .graph);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_upper_bound(dm));
}
BENCHMARK(BM_Greedy)->Args({5, 7})->Args({7, 11});

}  // namespace

BENCHMARK_MAIN();
