#include <benchmark/benchmark.h>

#include "gnsharp/quadrature.hpp"

using namespace gnsharp;

static void BM_lorentzian_mass(benchmark::State& state) {
    const SobolevIndex idx(static_cast<int>(state.range(0)), state.range(1) / 100.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lorentzian_mass(idx));
    }
}
BENCHMARK(BM_lorentzian_mass)
    ->Args({1, 100})
    ->Args({2, 200})
    ->Args({3, 200})
    ->Args({1, 60})   // near-endpoint s = n/2 + 0.1, the slowest tail
    ->Args({3, 1000});

static void BM_radial_integral_p2(benchmark::State& state) {
    const RadialIntegralSpec spec(SobolevIndex(2, 2.0), 2, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(radial_integral(spec));
    }
}
BENCHMARK(BM_radial_integral_p2);
