#include <array>

#include <benchmark/benchmark.h>

#include "geophase/holonomy.hpp"
#include "geophase/loop_compiler.hpp"

using namespace geophase;

static void BM_UsbHolonomy(benchmark::State& state) {
  const PulseSchedule loop = PulseSchedule::circle_ps(2.0, 2.0, 0.5, 1.0);
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(usb_holonomy(loop, steps).matrix()(0, 0));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_UsbHolonomy)->RangeMultiplier(10)->Range(100, 100000)->Unit(benchmark::kMillisecond);

static void BM_GammaClosedForm(benchmark::State& state) {
  const PulseSchedule loop = PulseSchedule::circle_ps(2.0, 2.0, 0.5, 1.0);
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(usb_gamma_closed_form(loop, steps));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GammaClosedForm)->RangeMultiplier(8)->Range(64, 32768);

static void BM_DarkEvolution(benchmark::State& state) {
  const PulseSchedule loop = PulseSchedule::circle_ps(2.0, 2.0, 0.5, 1.0).eased();
  for (auto _ : state) {
    benchmark::DoNotOptimize(usb_dark_evolution(loop, 100.0, 10000).leakage);
  }
}
BENCHMARK(BM_DarkEvolution)->Unit(benchmark::kMillisecond);

static void BM_CompileQuarterPi(benchmark::State& state) {
  CompileSettings s;
  s.verification_steps = 1000;
  const PulseFamily family = PulseFamily::circle_ps(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compile_rotation(kPi / 4.0, family, s).residual);
  }
}
BENCHMARK(BM_CompileQuarterPi)->Unit(benchmark::kMillisecond);
