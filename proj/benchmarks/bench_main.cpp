#include <benchmark/benchmark.h>

#include "copwin/corpus.hpp"
#include "copwin/dismantling.hpp"
#include "copwin/game.hpp"
#include "copwin/hyperbolicity.hpp"

using namespace copwin;

static void BM_SolveVisibleCycle(benchmark::State& state) {
    Graph g = fixture_cycle(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_visible(g, Radius(2), Radius(1)).verdict);
}
BENCHMARK(BM_SolveVisibleCycle)->Arg(8)->Arg(16)->Arg(32);

static void BM_SolveWitnessGk(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    Graph g = fixture_gk(k);
    for (auto _ : state) benchmark::DoNotOptimize(solve_witness(g, k).verdict);
}
BENCHMARK(BM_SolveWitnessGk)->Arg(2)->Arg(3);

static void BM_SsDismantleComplete(benchmark::State& state) {
    Graph g = fixture_complete(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ss_dismantle(g, Radius(2), Radius(1)).has_value());
}
BENCHMARK(BM_SsDismantleComplete)->Arg(16)->Arg(64);

static void BM_Hyperbolicity(benchmark::State& state) {
    auto graphs = sample_connected(static_cast<int>(state.range(0)), 1, 11);
    for (auto _ : state) benchmark::DoNotOptimize(hyperbolicity(graphs[0]).two_delta);
}
BENCHMARK(BM_Hyperbolicity)->Arg(16)->Arg(32);

static void BM_EnumerateConnected(benchmark::State& state) {
    for (auto _ : state) {
        long count = 0;
        for_each_connected(static_cast<int>(state.range(0)),
                           [&](const Graph&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateConnected)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
