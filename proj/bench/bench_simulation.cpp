// Serial reference versus the OpenMP kernel on one preset scenario.
#include <benchmark/benchmark.h>

#include "doseopt/presets.hpp"
#include "doseopt/simulation.hpp"

namespace {

const doseopt::ScenarioSpec& scenario() {
    static const doseopt::TablePreset t = doseopt::make_preset("T6", 1000);
    return t.rows.front().spec;
}

void BM_Serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(doseopt::simulate_serial(scenario(), 20240101, 1));
}
BENCHMARK(BM_Serial)->Unit(benchmark::kMillisecond);

void BM_Parallel(benchmark::State& state) {
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(doseopt::simulate_parallel(scenario(), 20240101, 1, workers));
}
BENCHMARK(BM_Parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
