#include <benchmark/benchmark.h>

#include "pscvote/coalitions.hpp"
#include "pscvote/generate.hpp"
#include "pscvote/phragmen.hpp"
#include "pscvote/rounding.hpp"

using namespace pscvote;

namespace {

Instance bench_instance(int m, long n) {
    RngStream rng(static_cast<std::uint64_t>(m) * 1000 + static_cast<std::uint64_t>(n));
    for (;;) {
        Instance inst = random_instance(rng, n, m, m / 2);
        if (inst.num_candidates() == m && inst.committee_size() >= 2) {
            return inst;
        }
    }
}

void BM_ordered_rule(benchmark::State& state) {
    const Instance inst = bench_instance(static_cast<int>(state.range(0)), state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ordered_rule(inst));
    }
}

void BM_pfr(benchmark::State& state) {
    const Instance inst = bench_instance(static_cast<int>(state.range(0)), state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pfr(inst));
    }
}

void BM_rounding_draw(benchmark::State& state) {
    const Instance inst = bench_instance(static_cast<int>(state.range(0)), state.range(1));
    const auto ledger = pfr(inst).second;
    const RoundingGraph graph = build_rounding_graph(inst, ledger);
    std::uint64_t i = 0;
    for (auto _ : state) {
        RngStream rng = RngStream::substream(1, i++);
        benchmark::DoNotOptimize(gkps_round(graph, rng));
    }
}

void BM_psc_enumeration(benchmark::State& state) {
    const Instance inst = bench_instance(static_cast<int>(state.range(0)), state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_psc_committees(inst));
    }
}

void BM_minimal_demand_enumeration(benchmark::State& state) {
    const Instance inst = bench_instance(static_cast<int>(state.range(0)), state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimal_demand_enumerate(inst));
    }
}

}  // namespace

BENCHMARK(BM_ordered_rule)->Args({6, 20})->Args({10, 100})->Args({14, 400});
BENCHMARK(BM_pfr)->Args({6, 20})->Args({10, 100})->Args({14, 400});
BENCHMARK(BM_rounding_draw)->Args({6, 20})->Args({10, 100});
BENCHMARK(BM_psc_enumeration)->Args({6, 20})->Args({8, 50});
BENCHMARK(BM_minimal_demand_enumeration)->Args({6, 20})->Args({8, 50});

BENCHMARK_MAIN();
