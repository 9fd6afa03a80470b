#include <benchmark/benchmark.h>

#include "morseq/generators.hpp"
#include "morseq/schedulers.hpp"

using namespace morseq;

static void BM_MaxSweepGrid(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    SimplexPool grid = grid_complex(k, k);
    Stack ones = Stack::constant(grid);
    for (auto _ : state) {
        MorseSequence seq = max_f(grid, ones);
        benchmark::DoNotOptimize(seq.items.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(grid.size()));
    state.counters["simplexes"] = static_cast<double>(grid.size());
}
BENCHMARK(BM_MaxSweepGrid)->Arg(32)->Arg(64)->Arg(128)->Arg(256)
    ->Unit(benchmark::kMillisecond);

static void BM_MinSweepGrid(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    SimplexPool grid = grid_complex(k, k);
    Stack ones = Stack::constant(grid);
    for (auto _ : state) {
        MorseSequence seq = min_f(grid, ones);
        benchmark::DoNotOptimize(seq.items.data());
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_MinSweepGrid)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_PoolConstructionGrid(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        SimplexPool grid = grid_complex(k, k);
        benchmark::DoNotOptimize(grid.size());
    }
}
BENCHMARK(BM_PoolConstructionGrid)->Arg(64)->Arg(128)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
