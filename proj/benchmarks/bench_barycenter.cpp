#include <benchmark/benchmark.h>

#include "probgeo/barycenter.hpp"
#include "probgeo/chart.hpp"
#include "probgeo/distribution.hpp"

namespace {

using namespace probgeo;

void BM_BarycenterSample(benchmark::State& state) {
    const auto data = Distribution::normal(0, 1).sample(
        static_cast<std::size_t>(state.range(0)), 7);
    const Chart chart = chart_from_distribution(Distribution::normal(0, 1));
    for (auto _ : state) {
        auto report = barycenter_of_sample(data, chart);
        benchmark::DoNotOptimize(report);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BarycenterSample)->Range(64, 1 << 16);

void BM_BarycenterQuadratureHeavyTail(benchmark::State& state) {
    const Distribution cauchy = Distribution::cauchy(0, 1);
    const Chart gauss = chart_from_distribution(Distribution::normal(0, 1));
    for (auto _ : state) {
        auto report = barycenter_of_distribution(cauchy, gauss);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_BarycenterQuadratureHeavyTail);

void BM_EmpiricalChartBuild(benchmark::State& state) {
    const auto data = Distribution::logistic(0, 1).sample(
        static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state) {
        auto chart = chart_from_sample(data, 1.0);
        benchmark::DoNotOptimize(chart);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EmpiricalChartBuild)->Range(64, 1 << 14);

}  // namespace

BENCHMARK_MAIN();
