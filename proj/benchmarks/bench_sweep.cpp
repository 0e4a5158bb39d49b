#include <benchmark/benchmark.h>

#include "vlcsim/simulation.hpp"

namespace {

using namespace vlcsim;

void BM_ChannelModelSetup(benchmark::State& state) {
    const Scene scene = build_preset("g2_three");
    const double patch = state.range(0) / 100.0;
    for (auto _ : state) {
        ChannelModel model(scene, patch);
        benchmark::DoNotOptimize(model);
    }
}
BENCHMARK(BM_ChannelModelSetup)->Arg(10)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PointEvaluate(benchmark::State& state) {
    const Scene scene = build_preset("gc_full");
    const ChannelModel model(scene, state.range(0) / 100.0);
    double x = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.evaluate({x, 2.1}));
        x = x > 6.5 ? 0.3 : x + 0.1;
    }
}
BENCHMARK(BM_PointEvaluate)->Arg(10)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_Sweep(benchmark::State& state) {
    const Scene scene = build_preset("g1_central");
    const double cell = state.range(0) / 100.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(scene, SweepOptions{cell, 0.1, 1}));
    }
}
BENCHMARK(BM_Sweep)->Arg(20)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
