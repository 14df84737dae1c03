#include <benchmark/benchmark.h>

#include "polariton/signals.hpp"

namespace {

using namespace polariton;

void BM_Decompose(benchmark::State& state) {
  const auto sys = reference_params(1.0, 1800, static_cast<int>(state.range(0)));
  const auto m = build_matrix(sys);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m));
}
BENCHMARK(BM_Decompose)->Arg(10)->Arg(1000)->Arg(1000000);

void BM_PropagatorDense(benchmark::State& state) {
  const auto sys = reference_params(1.0, 1800, static_cast<int>(state.range(0)));
  const auto dec = decompose(build_matrix(sys));
  for (auto _ : state) benchmark::DoNotOptimize(propagator_G(dec, 120.0));
}
BENCHMARK(BM_PropagatorDense)->Arg(10)->Arg(100);

void BM_Absorption(benchmark::State& state) {
  const auto sys = reference_params();
  const auto dec = decompose(build_matrix(sys));
  const auto k = VibKernel::from_tail(sys);
  const auto axis = Axis::make(12313, 20313, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linear_absorption(sys, dec, k, axis));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Absorption)->Arg(2001);

void BM_TwodGrid(benchmark::State& state) {
  const auto sys = reference_params();
  const auto dec = decompose(build_matrix(sys));
  const auto k = VibKernel::from_tail(sys);
  const int n = static_cast<int>(state.range(0));
  const auto ax1 = Axis::make(12513, 18493, n), ax3 = Axis::make(12313, 18293, n);
  TwodOptions opts;
  opts.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(twod_signal(sys, dec, k, ax1, ax3, 250.0, opts));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_TwodGrid)->Args({100, 1})->Args({300, 1})->Args({300, 0})->Unit(benchmark::kMillisecond);

void BM_TwodPoint(benchmark::State& state) {
  const auto sys = reference_params();
  const auto dec = decompose(build_matrix(sys));
  const auto k = VibKernel::from_tail(sys);
  for (auto _ : state) benchmark::DoNotOptimize(twod_signal_point(sys, dec, k, -1800, -1200, 100.0));
}
BENCHMARK(BM_TwodPoint);

void BM_PumpProbe(benchmark::State& state) {
  const auto sys = reference_params();
  const auto dec = decompose(build_matrix(sys));
  const auto k = VibKernel::from_tail(sys);
  const auto axis = Axis::make(11313, 20313, 2001);
  for (auto _ : state) benchmark::DoNotOptimize(pump_probe(sys, dec, k, axis, 100.0));
}
BENCHMARK(BM_PumpProbe)->Unit(benchmark::kMillisecond);

void BM_FourPointCorrelator(benchmark::State& state) {
  const auto k = VibKernel::from_tail(1.0, 1200, 20);
  const TimeQuadruple q{{120.0, 80.0, 40.0, 0.0}, {0, 0, 1, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(four_point_correlator(q, k));
}
BENCHMARK(BM_FourPointCorrelator);

}  // namespace

BENCHMARK_MAIN();
