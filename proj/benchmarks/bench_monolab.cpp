#include <benchmark/benchmark.h>

#include <cmath>

#include "monolab/bounds.hpp"
#include "monolab/kernels.hpp"
#include "monolab/measures.hpp"
#include "monolab/states.hpp"

using namespace monolab;

namespace {

StateVector cached_state(int n) { return random_pure_state(n, 12345); }

void BM_PartialTrace(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto rho = density_matrix(cached_state(n));
    const PartitionSpec spec({0, 1}, n);
    for (auto _ : state) benchmark::DoNotOptimize(partial_trace(rho, spec));
}
BENCHMARK(BM_PartialTrace)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_TwoQubitConcurrence(benchmark::State& state) {
    const auto rho = partial_trace(density_matrix(cached_state(4)), PartitionSpec({0, 1}, 4));
    for (auto _ : state) benchmark::DoNotOptimize(two_qubit_concurrence(rho));
}
BENCHMARK(BM_TwoQubitConcurrence);

void BM_PairwiseMeasures(benchmark::State& state) {
    const auto psi = cached_state(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(pairwise_measures(psi, 0, MeasureKind::coa));
}
BENCHMARK(BM_PairwiseMeasures)->Arg(4)->Arg(5);

void BM_SumLowerBound(benchmark::State& state) {
    std::vector<double> p(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = 1.0 / static_cast<double>(i + 1);
    const DecreasingSequence seq(p);
    const double s = s_range(seq).lo;
    for (auto _ : state) benchmark::DoNotOptimize(sum_lower_bound(seq, 0.5, s));
}
BENCHMARK(BM_SumLowerBound)->Arg(3)->Arg(8)->Arg(16);

void BM_MonogamyCurve(benchmark::State& state) {
    const OrderedMeasures m({0.9107, 0.3333, 0.244}, 2.0);
    const auto grid = linear_grid(0.0, 2.0, 81);
    for (auto _ : state)
        benchmark::DoNotOptimize(bound_curve(m, BoundRegime::monogamy_low, grid, 0.6));
}
BENCHMARK(BM_MonogamyCurve);

void BM_PartitionSandwich(benchmark::State& state) {
    const auto in = sandwich_inputs(w_class_state(WClassParams(0.75, 0.5, std::sqrt(2.0) / 4.0, 0.25)));
    for (auto _ : state) benchmark::DoNotOptimize(partition_sandwich(in, 1.0));
}
BENCHMARK(BM_PartitionSandwich);

}  // namespace

BENCHMARK_MAIN();
