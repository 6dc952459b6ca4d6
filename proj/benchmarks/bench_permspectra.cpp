#include <benchmark/benchmark.h>

#include <permspectra/characters.hpp>
#include <permspectra/families.hpp>
#include <permspectra/search.hpp>
#include <permspectra/spectral.hpp>

using namespace permspectra;

static void BM_CharacterTable(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto parts = partitions_of(n);
    for (auto _ : state) {
        // bypass the cache by computing the permutation characters directly
        for (const auto& beta : parts)
            for (const auto& lambda : parts)
                benchmark::DoNotOptimize(permutation_character(beta, lambda));
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_CharacterTable)->Arg(5)->Arg(6)->Arg(7);

static void BM_Dimension(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto parts = partitions_of(n);
    for (auto _ : state)
        for (const auto& p : parts) benchmark::DoNotOptimize(dimension(p));
}
BENCHMARK(BM_Dimension)->Arg(8)->Arg(12);

static void BM_Kostka(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto parts = partitions_of(n);
    for (auto _ : state)
        for (const auto& a : parts)
            for (const auto& b : parts) benchmark::DoNotOptimize(kostka(a, b));
}
BENCHMARK(BM_Kostka)->Arg(5)->Arg(6);

static void BM_CayleySpectrum(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto spec = WeightedCayleySpec::uniform_derangements(n);
    for (auto _ : state) benchmark::DoNotOptimize(cayley_spectrum(spec));
}
BENCHMARK(BM_CayleySpectrum)->Arg(5)->Arg(6)->Arg(7);

static void BM_IsotypicProjection(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto u = t_coset(n, CosetSpec{{{1, 1}}}).indicator();
    auto alpha = Partition(std::vector<int>{n - 1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(isotypic_projection(u, alpha));
}
BENCHMARK(BM_IsotypicProjection)->Arg(4)->Arg(5)->Arg(6);

static void BM_MaxIntersecting(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(max_t_intersecting(n, 1));
}
BENCHMARK(BM_MaxIntersecting)->Arg(4)->Arg(5);

static void BM_SolveWeights(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_weights(n, 1));
}
BENCHMARK(BM_SolveWeights)->Arg(4)->Arg(5);

static void BM_TranspositionNeighborhood(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Family x(n, {Permutation::identity(n)});
    for (auto _ : state) benchmark::DoNotOptimize(transposition_neighborhood(x, n - 1));
}
BENCHMARK(BM_TranspositionNeighborhood)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
