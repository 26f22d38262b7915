#include "packing/complexes.hpp"
#include "packing/equivariant.hpp"
#include "packing/linalg.hpp"
#include "packing/plethysm.hpp"

#include <benchmark/benchmark.h>

using namespace packing;

static void BM_BuildChessboard(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto cx = PackingComplex::build({n, n}, {1, 1});
        benchmark::DoNotOptimize(cx.simplex_count(1));
    }
}
BENCHMARK(BM_BuildChessboard)->DenseRange(3, 6);

static void BM_BoundaryRank(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto cx = PackingComplex::build({n, n}, {1, 1});
    int k = std::min(2, cx.top_dimension());
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_of(cx.boundary(k)));
    }
}
BENCHMARK(BM_BoundaryRank)->DenseRange(4, 6);

static void BM_HomologyDecomposition(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        HomologyEngine engine;  // fresh caches: measure the full pipeline
        auto dec = engine.homology_decomposition({n, n}, {1, 1}, n - 2);
        benchmark::DoNotOptimize(dec.entries.size());
    }
}
BENCHMARK(BM_HomologyDecomposition)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_CharacterTable(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long acc = 0;
        for (const auto& l : partitions_of(n))
            for (const auto& r : partitions_of(n)) acc += irreducible_character(l, r);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_CharacterTable)->DenseRange(6, 10);

static void BM_WedgeTensor(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto m = wedge_tensor_multiplicities(p, 2);
        benchmark::DoNotOptimize(m.size());
    }
}
BENCHMARK(BM_WedgeTensor)->DenseRange(2, 5);

static void BM_SymSym(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto m = sym_sym_multiplicities(p, 3);
        benchmark::DoNotOptimize(m.size());
    }
}
BENCHMARK(BM_SymSym)->DenseRange(2, 3);

BENCHMARK_MAIN();
