#include <benchmark/benchmark.h>

#include "permuto/homology.hpp"
#include "permuto/poincare.hpp"
#include "permuto/ring.hpp"
#include "permuto/suites.hpp"

using namespace permuto;

static void BM_GradedDimensions(benchmark::State& state) {
    const LabelSet B = LabelSet::segment(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(graded_dimensions(B));
}
BENCHMARK(BM_GradedDimensions)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_ReduceRaw(benchmark::State& state) {
    const LabelSet B = LabelSet::segment(static_cast<int>(state.range(0)));
    const auto sigmas = two_partitions(B);
    for (auto _ : state) {
        // a mildly raw word: three generators, not necessarily good
        benchmark::DoNotOptimize(reduce_raw(B, {sigmas[0], sigmas[sigmas.size() / 2], sigmas[1]}));
    }
}
BENCHMARK(BM_ReduceRaw)->DenseRange(3, 5);

static void BM_PoincareGF(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(poincare_gf(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PoincareGF)->DenseRange(4, 10);

static void BM_VerifyLemma(benchmark::State& state) {
    const LabelSet B = LabelSet::segment(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const auto rep = verify_technical_lemma(B);
        benchmark::DoNotOptimize(rep.ok());
    }
}
BENCHMARK(BM_VerifyLemma)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_BuildSeries(benchmark::State& state) {
    const auto top = random_commuting_family(3, 3, 5, 42);
    for (auto _ : state) benchmark::DoNotOptimize(build_series(top, 5));
}
BENCHMARK(BM_BuildSeries)->Unit(benchmark::kMillisecond);

static void BM_CheckCommutativity(benchmark::State& state) {
    const auto series = build_series(random_commuting_family(3, 3, 5, 42), 5);
    for (auto _ : state) {
        const auto rep = check_commutativity(series);
        benchmark::DoNotOptimize(rep.ok());
    }
}
BENCHMARK(BM_CheckCommutativity)->Unit(benchmark::kMillisecond);
