#include <benchmark/benchmark.h>

#include "gnsharp/extremizer.hpp"
#include "gnsharp/spectral.hpp"

using namespace gnsharp;

static void BM_forward_transform_1d(benchmark::State& state) {
    const GridSpec g(1, static_cast<int>(state.range(0)), 60.0);
    const GridFunction u = gaussian(g, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(forward_transform(u));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_forward_transform_1d)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_forward_transform_2d(benchmark::State& state) {
    const GridSpec g(2, static_cast<int>(state.range(0)), 60.0);
    const GridFunction u = gaussian(g, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(forward_transform(u));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_forward_transform_2d)->Arg(64)->Arg(256);

static void BM_forward_transform_3d(benchmark::State& state) {
    const GridSpec g(3, static_cast<int>(state.range(0)), 60.0);
    const GridFunction u = gaussian(g, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(forward_transform(u));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_forward_transform_3d)->Arg(32)->Arg(64);

static void BM_norm_bundle_2d(benchmark::State& state) {
    const GridSpec g(2, static_cast<int>(state.range(0)), 60.0);
    const GridFunction u = gaussian(g, 0.5);
    const SpectralField f = forward_transform(u);
    for (auto _ : state) {
        benchmark::DoNotOptimize(norms(u, f, 2.0));
    }
}
BENCHMARK(BM_norm_bundle_2d)->Arg(64)->Arg(256);

static void BM_random_band_limited_2d(benchmark::State& state) {
    const GridSpec g(2, 128, 60.0);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(random_band_limited(g, seed++, default_cutoff(g), default_decay(g)));
    }
}
BENCHMARK(BM_random_band_limited_2d);
