// Serial reference (threads = 1) against the OpenMP kernels at 2 and 4 threads.
#include <benchmark/benchmark.h>

#include <random>

#include "stc/dtc.hpp"
#include "stc/gadgets.hpp"
#include "stc/oracle.hpp"
#include "stc/vi.hpp"

namespace {

stc::Graph random_graph(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    stc::Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(rng() % v), v);
    while (g.m() < m) {
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

void BM_OracleEnumeration(benchmark::State& st) {
    auto g = random_graph(10, 18, 3);
    for (auto _ : st) benchmark::DoNotOptimize(stc::stc_exact(g, {}, static_cast<int>(st.range(0))).k);
}
BENCHMARK(BM_OracleEnumeration)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_OracleGrid(benchmark::State& st) {
    auto g = stc::grid_graph(4);
    for (auto _ : st) benchmark::DoNotOptimize(stc::stc_exact(g, {}, static_cast<int>(st.range(0))).k);
}
BENCHMARK(BM_OracleGrid)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_DtcGuessLoop(benchmark::State& st) {
    const int N = 40;
    std::mt19937_64 rng(5);
    stc::Graph g(N);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) g.add_edge(i, j);
    std::vector<int> s;
    for (int q = 0; q < 2; ++q) {
        int x = g.add_vertex();
        s.push_back(x);
        for (int c = 0; c < N; ++c)
            if (rng() % 3 == 0) g.add_edge(c, x);
    }
    stc::DtcOptions opt;
    opt.threads = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(stc::solve_dtc(g, s, opt).k);
}
BENCHMARK(BM_DtcGuessLoop)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_ViGuessLoop(benchmark::State& st) {
    // Three hubs; pendant paths and triangles between them.
    stc::Graph g(3);
    std::mt19937_64 rng(7);
    for (int c = 0; c < 9; ++c) {
        int a = g.add_vertex(), b = g.add_vertex();
        g.add_edge(a, b);
        g.add_edge(a, static_cast<int>(rng() % 3));
        g.add_edge(b, static_cast<int>(rng() % 3));
    }
    g.add_edge(0, 1);
    stc::VIOptions opt;
    opt.threads = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(stc::solve_vi(g, {0, 1, 2}, opt).k);
}
BENCHMARK(BM_ViGuessLoop)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
