#include <benchmark/benchmark.h>

#include "dynamo/dynamics.hpp"
#include "dynamo/generators.hpp"
#include "dynamo/rng.hpp"

using namespace dynamo;

namespace {

Configuration seed_half(int n) {
    SplitMix64 rng(7);
    Configuration c(n);
    for (int v = 0; v < n; ++v)
        if (rng.next() & 1) c.add(v);
    return c;
}

void BM_StepComplete(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = gen_complete(n);
    const auto m = ThresholdModel::two_way_r_bootstrap(3);
    Configuration c = seed_half(n);
    for (auto _ : state) {
        c = step(g, m, c);
        benchmark::DoNotOptimize(c);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_StepComplete)->Arg(64)->Arg(256)->Arg(1024);

void BM_StepRegularChain(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = gen_regular_chain(3, n);
    const auto m = ThresholdModel::two_way_r_bootstrap(3);
    Configuration c = seed_half(n);
    for (auto _ : state) {
        c = step(g, m, c);
        benchmark::DoNotOptimize(c);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_StepRegularChain)->Arg(96)->Arg(960);

void BM_StepFractional(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = gen_clique_with_leaves(16, n);
    const auto m = ThresholdModel::two_way_alpha_bootstrap(Rational(1, 2));
    Configuration c = seed_half(n);
    for (auto _ : state) {
        c = step(g, m, c);
        benchmark::DoNotOptimize(c);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_StepFractional)->Arg(256)->Arg(1024);

void BM_RunToTermination(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Graph g = gen_cycle(n);
    const auto m = ThresholdModel::two_way_alpha_bootstrap(Rational(1, 2));
    Configuration c(n);
    c.add(0);
    for (auto _ : state) {
        RunTrace trace = run(g, m, c);
        benchmark::DoNotOptimize(trace);
    }
}
BENCHMARK(BM_RunToTermination)->Arg(33)->Arg(129)->Arg(513);

}  // namespace

BENCHMARK_MAIN();
