#include <benchmark/benchmark.h>

#include <cmath>

#include "gasprint/gasprint.hpp"

using namespace gasprint;

static void BM_SimulateFinal(benchmark::State& state) {
    const auto p = reference::mainnet_2021();
    const auto horizon = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(simulate_final(p, horizon));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateFinal)->Arg(10'000)->Arg(1'160'000)->Unit(benchmark::kMillisecond);

static void BM_SimulateTrajectory(benchmark::State& state) {
    const auto p = reference::mainnet_2021();
    for (auto _ : state) benchmark::DoNotOptimize(simulate(p, reference::kLondonToMergeBlocks));
}
BENCHMARK(BM_SimulateTrajectory)->Unit(benchmark::kMillisecond);

static void BM_FeeBurnDelta(benchmark::State& state) {
    const auto p = reference::mainnet_2021();
    for (auto _ : state) benchmark::DoNotOptimize(fee_burn_delta(p, 100.0, reference::kLondonToMergeBlocks));
}
BENCHMARK(BM_FeeBurnDelta)->Unit(benchmark::kMillisecond);

// q close to 1 needs many more series terms.
static void BM_QDigamma(benchmark::State& state) {
    const double q = 1.0 - std::pow(10.0, -static_cast<double>(state.range(0)));
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(special::q_digamma(q, x));
        x = x < 10.0 ? x + 0.25 : 0.5;
    }
}
BENCHMARK(BM_QDigamma)->DenseRange(1, 4);

static void BM_RevenueClosedForm(benchmark::State& state) {
    const Eip1559Params p{250.0, 1e6, 3.0, 1e4};
    for (auto _ : state) benchmark::DoNotOptimize(revenue_closed_form(p, 10'000));
}
BENCHMARK(BM_RevenueClosedForm);

static void BM_EvaluateScenario(benchmark::State& state) {
    const Scenario s = reference::nft_lifecycle();
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(s));
}
BENCHMARK(BM_EvaluateScenario);

BENCHMARK_MAIN();
