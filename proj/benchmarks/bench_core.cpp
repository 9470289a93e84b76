#include <benchmark/benchmark.h>

#include "gic/bounds.hpp"
#include "gic/channel.hpp"
#include "gic/gaussmi.hpp"
#include "gic/geometry.hpp"
#include "gic/montecarlo.hpp"
#include "gic/regime.hpp"

namespace {

void BM_TinSumRate(benchmark::State& state) {
    const auto c = gic::make_symmetric(10.0, 0.25);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gic::tin_sum_rate(c));
    }
}
BENCHMARK(BM_TinSumRate);

void BM_ConstructGenie(benchmark::State& state) {
    const auto c = gic::make_params(10.0, 20.0, 0.2, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gic::construct_genie(c));
    }
}
BENCHMARK(BM_ConstructGenie);

void BM_GenieAidedSumRate(benchmark::State& state) {
    const auto c = gic::make_symmetric(10.0, 0.25);
    const auto genie = *gic::construct_genie(c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gic::genie_aided_sum_rate(c, genie));
    }
}
BENCHMARK(BM_GenieAidedSumRate);

void BM_TangentBound(benchmark::State& state) {
    const auto c = gic::make_symmetric(10.0, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gic::tangent_bound(c));
    }
}
BENCHMARK(BM_TangentBound);

void BM_AllBoundsInRegime(benchmark::State& state) {
    const auto c = gic::make_symmetric(10.0, 0.25);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gic::all_bounds(c));
    }
}
BENCHMARK(BM_AllBoundsInRegime);

void BM_AllBoundsAboveThreshold(benchmark::State& state) {
    const auto c = gic::make_symmetric(10.0, 0.8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gic::all_bounds(c));
    }
}
BENCHMARK(BM_AllBoundsAboveThreshold);

void BM_Sample(benchmark::State& state) {
    const auto c = gic::make_symmetric(10.0, 0.25);
    const auto genie = gic::construct_genie(c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            gic::sample(c, genie, static_cast<std::size_t>(state.range(0)), 42));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->Range(1024, 1 << 18);

void BM_EmpiricalMi(benchmark::State& state) {
    const auto c = gic::make_symmetric(10.0, 0.25);
    const auto genie = gic::construct_genie(c);
    const auto batch =
        gic::sample(c, genie, static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gic::empirical_mi(batch, "X1", {"Y1", "S1"}));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EmpiricalMi)->Range(4096, 1 << 18);

}  // namespace

BENCHMARK_MAIN();
