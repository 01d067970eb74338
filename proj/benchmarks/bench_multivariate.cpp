#include <benchmark/benchmark.h>

#include <vector>

#include "probgeo/distribution.hpp"
#include "probgeo/multivariate.hpp"

namespace {

using namespace probgeo;

VectorSample make_sample(std::size_t n) {
    const auto x = Distribution::normal(0, 1).sample(n, 5);
    const auto y = Distribution::cauchy(0, 1).sample(n, 6);
    std::vector<std::vector<double>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back({x[i], y[i]});
    return VectorSample::from_rows(rows);
}

void BM_PseudoObservations(benchmark::State& state) {
    const VectorSample vs = make_sample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto coords = pseudo_observations(vs);
        benchmark::DoNotOptimize(coords);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PseudoObservations)->Range(256, 1 << 16);

void BM_CornerMasses(benchmark::State& state) {
    const VectorSample vs = make_sample(static_cast<std::size_t>(state.range(0)));
    const Matrix coords = pseudo_observations(vs);
    for (auto _ : state) {
        auto masses = all_corner_masses(coords, 0.1);
        benchmark::DoNotOptimize(masses);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CornerMasses)->Range(256, 1 << 16);

}  // namespace
