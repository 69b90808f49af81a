#include <benchmark/benchmark.h>

#include <random>

#include "edgemap/canonical.hpp"
#include "edgemap/census.hpp"
#include "edgemap/fastpath.hpp"
#include "edgemap/named.hpp"
#include "edgemap/patterns.hpp"
#include "edgemap/solver.hpp"

namespace {

using namespace edgemap;

Graph random_graph(std::mt19937& rng, int n, int percent) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent)
                es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

void BM_CanonicalForm(benchmark::State& state) {
    std::mt19937 rng(1);
    std::vector<Graph> graphs;
    for (int i = 0; i < 64; ++i)
        graphs.push_back(random_graph(rng, static_cast<int>(state.range(0)), 50));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(graphs[i % graphs.size()]));
        ++i;
    }
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(8)->Arg(10);

void BM_EnumerateCopies(benchmark::State& state) {
    Graph host = build_named({GraphKind::Complete, {static_cast<int>(state.range(0))}});
    Graph pattern = build_named({GraphKind::Matching, {3}});
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_copies(host, pattern));
}
BENCHMARK(BM_EnumerateCopies)->Arg(6)->Arg(8);

void BM_Solver2K2(benchmark::State& state) {
    std::mt19937 rng(2);
    std::vector<Graph> graphs;
    for (int i = 0; i < 64; ++i)
        graphs.push_back(random_graph(rng, 7, 40));
    PatternFamily fam = PatternFamily::parse({"2K2"});
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(exists_avoider(graphs[i % graphs.size()], fam, 1, Mode::Free));
        ++i;
    }
}
BENCHMARK(BM_Solver2K2);

void BM_Fastpath2K2(benchmark::State& state) {
    std::mt19937 rng(2);
    std::vector<Graph> graphs;
    for (int i = 0; i < 64; ++i)
        graphs.push_back(random_graph(rng, 7, 40));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fast_2k2_decide(graphs[i % graphs.size()]));
        ++i;
    }
}
BENCHMARK(BM_Fastpath2K2);

void BM_EnumerateLevels(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_levels(static_cast<int>(state.range(0)), 8));
}
BENCHMARK(BM_EnumerateLevels)->Arg(6)->Arg(7);

} // namespace

BENCHMARK_MAIN();
