// Serial reference vs OpenMP kernels on the heavier desk-scale instances.
//
//   ./hyperposet_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include "hyperposet/flip_graph.hpp"
#include "hyperposet/random_family.hpp"
#include "hyperposet/verify.hpp"

using namespace hyperposet;

namespace {

// product space 20736 for n = 4; pairs of [7] give 2^21
Hypergraph filter_instance(int n) {
    std::vector<std::vector<Vertex>> edges;
    if (n <= 4) {
        for (const Hyperedge& e : all_subsets_min2(n)) edges.push_back(e);
        return Hypergraph::build(n, edges);
    }
    return complete_pairs(n);
}

EnumerationBudget wide_budget() {
    EnumerationBudget budget;
    budget.max_orientations = 1LL << 24;
    budget.max_permutations = factorial(10);
    return budget;
}

void filter_serial(benchmark::State& state) {
    Hypergraph h = filter_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(serial::enumerate_acyclic_by_filter(h, wide_budget()));
    }
}

void filter_parallel(benchmark::State& state) {
    Hypergraph h = filter_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_acyclic_by_filter(h, wide_budget()));
    }
}

void surjection_serial(benchmark::State& state) {
    Hypergraph h = complete_pairs(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(serial::enumerate_acyclic_by_surjection(h, wide_budget()));
    }
}

void surjection_parallel(benchmark::State& state) {
    Hypergraph h = complete_pairs(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_acyclic_by_surjection(h, wide_budget()));
    }
}

void flip_graph_build(benchmark::State& state) {
    Hypergraph h = complete_pairs(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(FlipGraph::build(h, wide_budget()));
    }
}

void verification_sweep(benchmark::State& state) {
    std::vector<Hypergraph> family = random_family(static_cast<int>(state.range(0)), 5, 0.3, 0);
    RunConfig config;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_verification(family, config));
    }
}

} // namespace

BENCHMARK(filter_serial)->Arg(4)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(filter_parallel)->Arg(4)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(surjection_serial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(surjection_parallel)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(flip_graph_build)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(verification_sweep)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
