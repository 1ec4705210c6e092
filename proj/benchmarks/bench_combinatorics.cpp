#include <benchmark/benchmark.h>

#include <random>

#include "permuto/fan.hpp"
#include "permuto/partition.hpp"

using namespace permuto;

static void BM_EnumeratePartitions(benchmark::State& state) {
    const LabelSet B = LabelSet::segment(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(B));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(3, 7)->Complexity();

static void BM_ClassifyBreak(benchmark::State& state) {
    const LabelSet B = LabelSet::segment(5);
    const auto partitions = enumerate_partitions(B);
    const auto sigmas = two_partitions(B);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& sigma = sigmas[i % sigmas.size()];
        const auto& tau = partitions[(i * 7) % partitions.size()];
        benchmark::DoNotOptimize(classify_break(sigma, tau));
        ++i;
    }
}
BENCHMARK(BM_ClassifyBreak);

static void BM_LocateAndMembership(benchmark::State& state) {
    const LabelSet B = LabelSet::segment(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(-1000, 1000);
    for (auto _ : state) {
        std::vector<Rat> vals;
        for (int k = 0; k < B.size(); ++k) vals.emplace_back(d(rng));
        const RationalVector chi(B, std::move(vals));
        const auto tau = locate(chi);
        benchmark::DoNotOptimize(membership(chi, tau));
    }
}
BENCHMARK(BM_LocateAndMembership)->DenseRange(3, 6);

static void BM_CheckSmoothAll(benchmark::State& state) {
    const LabelSet B = LabelSet::segment(static_cast<int>(state.range(0)));
    const auto partitions = enumerate_partitions(B);
    for (auto _ : state) {
        bool all = true;
        for (const auto& tau : partitions) all &= check_smooth(tau);
        benchmark::DoNotOptimize(all);
    }
}
BENCHMARK(BM_CheckSmoothAll)->DenseRange(3, 5);

BENCHMARK_MAIN();
