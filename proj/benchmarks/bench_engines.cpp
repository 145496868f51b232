#include <benchmark/benchmark.h>

#include <random>

#include "mecs/mecs.hpp"

using namespace mecs;

namespace {

Graph random_graph(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    }
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(all.size(), m));
    return Graph(n, all);
}

// Roughly 3/4 of the optimum so the instances are YES but not trivial.
MecsInstance workload(int m, int p) {
    Graph g = random_graph(8, m, 11);
    int opt = *solve_exact({g, g.edge_count(), p}).optimum;
    return {g, std::max(1, 3 * opt / 4), p};
}

void BM_Oracle(benchmark::State& state) {
    MecsInstance inst = workload(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(solve_exact(inst));
}
BENCHMARK(BM_Oracle)->Arg(8)->Arg(12)->Arg(16);

void BM_Rainbow(benchmark::State& state) {
    MecsInstance inst = workload(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(solve_via_rainbow(inst));
}
BENCHMARK(BM_Rainbow)->Arg(8)->Arg(12)->Arg(16);

void BM_DivideColor(benchmark::State& state) {
    MecsInstance inst = workload(static_cast<int>(state.range(0)), 2);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        DivideColorOptions opts;
        opts.seed = seed++;
        benchmark::DoNotOptimize(divide_and_color(inst, opts));
    }
}
BENCHMARK(BM_DivideColor)->Arg(8)->Arg(12)->Arg(16);

void BM_Ilp(benchmark::State& state) {
    const int leaves = static_cast<int>(state.range(0));
    std::vector<Edge> edges;
    for (int i = 0; i < leaves; ++i) {
        edges.push_back({0, 2 + i});
        edges.push_back({1, 2 + i});
    }
    MecsInstance inst{Graph(leaves + 2, edges), leaves + 1, 2};
    for (auto _ : state) benchmark::DoNotOptimize(solve_via_ilp(inst));
}
BENCHMARK(BM_Ilp)->Arg(2)->Arg(4)->Arg(6);

void BM_Kernelize(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = random_graph(n, 2 * n, 5);
    MecsInstance inst{g, g.edge_count(), 2};
    for (auto _ : state) benchmark::DoNotOptimize(kernelize(inst));
}
BENCHMARK(BM_Kernelize)->Arg(16)->Arg(64)->Arg(256);

void BM_Vizing(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = random_graph(n, 4 * n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(vizing_color(g));
}
BENCHMARK(BM_Vizing)->Arg(64)->Arg(256)->Arg(1024);

void BM_MaxMatching(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = random_graph(n, 3 * n, 9);
    for (auto _ : state) benchmark::DoNotOptimize(max_matching(g));
}
BENCHMARK(BM_MaxMatching)->Arg(64)->Arg(256)->Arg(1024);

void BM_ReduceRbds(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    RbdsInstance inst{side, side, {}, 1};
    for (int r = 0; r < side; ++r) {
        inst.edges.emplace_back(r, r);
        inst.edges.emplace_back(r, (r + 1) % side);
    }
    std::sort(inst.edges.begin(), inst.edges.end());
    inst.edges.erase(std::unique(inst.edges.begin(), inst.edges.end()), inst.edges.end());
    for (auto _ : state) benchmark::DoNotOptimize(reduce_rbds(inst));
}
BENCHMARK(BM_ReduceRbds)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
