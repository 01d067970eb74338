#include <benchmark/benchmark.h>

#include "probgeo/distribution.hpp"
#include "probgeo/special_functions.hpp"

namespace {

using namespace probgeo;

void BM_NormalQuantile(benchmark::State& state) {
    double p = 0.001;
    for (auto _ : state) {
        benchmark::DoNotOptimize(normal_quantile(p));
        p += 0.0001;
        if (p >= 0.999) p = 0.001;
    }
}
BENCHMARK(BM_NormalQuantile);

void BM_StudentTQuantile(benchmark::State& state) {
    const Distribution t = Distribution::student_t(static_cast<double>(state.range(0)));
    double p = 0.001;
    for (auto _ : state) {
        benchmark::DoNotOptimize(t.quantile(p));
        p += 0.0001;
        if (p >= 0.999) p = 0.001;
    }
}
BENCHMARK(BM_StudentTQuantile)->Arg(3)->Arg(8);

void BM_InverseTransformSampling(benchmark::State& state) {
    const Distribution d = Distribution::cauchy(0, 1);
    for (auto _ : state) {
        auto draws = d.sample(static_cast<std::size_t>(state.range(0)), 3);
        benchmark::DoNotOptimize(draws);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_InverseTransformSampling)->Range(256, 1 << 14);

}  // namespace
