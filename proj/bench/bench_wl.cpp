// One refinement step, serial reference against the OpenMP kernel.

#include <benchmark/benchmark.h>

#include "wlcc/schreier.hpp"
#include "wlcc/wl.hpp"

namespace {

wlcc::Configuration cycle_config(int n) {
  return wlcc::cayley_config(wlcc::cycle_cayley(n));
}

wlcc::Configuration sl_config() {
  return wlcc::schreier_config(wlcc::sl_tuples(2, 5, 1).action);
}

void BM_CycleSerial(benchmark::State& state) {
  const auto config = cycle_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wlcc::wl_step_serial(config));
}

void BM_CycleParallel(benchmark::State& state) {
  const auto config = cycle_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wlcc::wl_step(config));
}

void BM_SlSerial(benchmark::State& state) {
  const auto config = sl_config();
  for (auto _ : state) benchmark::DoNotOptimize(wlcc::wl_step_serial(config));
}

void BM_SlParallel(benchmark::State& state) {
  const auto config = sl_config();
  for (auto _ : state) benchmark::DoNotOptimize(wlcc::wl_step(config));
}

}  // namespace

BENCHMARK(BM_CycleSerial)->Arg(32)->Arg(128)->Arg(256);
BENCHMARK(BM_CycleParallel)->Arg(32)->Arg(128)->Arg(256);
BENCHMARK(BM_SlSerial);
BENCHMARK(BM_SlParallel);

BENCHMARK_MAIN();
