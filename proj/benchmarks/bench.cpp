#include <benchmark/benchmark.h>

#include <sr/cover.hpp>
#include <sr/families.hpp>
#include <sr/hochster.hpp>
#include <sr/homology.hpp>
#include <sr/matrix.hpp>

using namespace sr;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::gf(2);

void BM_ReducedHomology(benchmark::State& state) {
    SimplicialComplex dl = hibi_cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        clear_homology_cache(); // measure the computation, not the memo
        benchmark::DoNotOptimize(reduced_homology(dl, Q));
    }
}
BENCHMARK(BM_ReducedHomology)->Arg(4)->Arg(5)->Arg(6);

void BM_BettiTable(benchmark::State& state) {
    SimplicialComplex dl = hanano(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        clear_homology_cache();
        benchmark::DoNotOptimize(betti_table(dl, Q, 16));
    }
}
BENCHMARK(BM_BettiTable)->Arg(6)->Arg(7)->Arg(9);

void BM_BettiTableGF2(benchmark::State& state) {
    SimplicialComplex dl = hanano(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        clear_homology_cache();
        benchmark::DoNotOptimize(betti_table(dl, F2, 16));
    }
}
BENCHMARK(BM_BettiTableGF2)->Arg(7)->Arg(9);

void BM_CMCover(benchmark::State& state) {
    SimplicialComplex dl = hanano(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        clear_homology_cache();
        benchmark::DoNotOptimize(cm_cover(dl, Q, 0));
    }
}
BENCHMARK(BM_CMCover)->Arg(6)->Arg(7);

void BM_RationalRank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rat(1, i + j + 1); // Hilbert
    for (auto _ : state) benchmark::DoNotOptimize(rank(m, Q));
}
BENCHMARK(BM_RationalRank)->Arg(8)->Arg(16)->Arg(24);

} // namespace

BENCHMARK_MAIN();
