#include <benchmark/benchmark.h>

#include "gnsharp/constants.hpp"

using namespace gnsharp;

static void BM_gn_constant(benchmark::State& state) {
    const SobolevIndex idx(3, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gn_constant(idx));
    }
}
BENCHMARK(BM_gn_constant);

static void BM_constant_sweep(benchmark::State& state) {
    for (auto _ : state) {
        double acc = 0.0;
        for (int n = 1; n <= 6; ++n) {
            for (int i = 0; i < 34; ++i) {
                const double lo = 0.5 * n + 0.05;
                const SobolevIndex idx(n, lo + (20.0 - lo) * i / 33.0);
                acc += gn_constant(idx) - embedding_constant(idx) * young_factor(idx);
            }
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_constant_sweep);

BENCHMARK_MAIN();
