#include <vector>

#include <benchmark/benchmark.h>

#include "geophase/adiabatic.hpp"
#include "geophase/interferometer.hpp"
#include "geophase/phase_abelian.hpp"

using namespace geophase;

static void BM_PancharatnamPhase(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<PureState> states;
  for (std::size_t k = 0; k < n; ++k) {
    states.push_back(state_from_bloch(BlochVector::spherical(1.0, 2.0 * kPi * k / n)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(pancharatnam_phase(states).radians());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PancharatnamPhase)->RangeMultiplier(8)->Range(8, 32768);

static void BM_LoopIntegral(benchmark::State& state) {
  const std::vector<BlochVector> octant{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  const StatePath loop = bloch_polygon_loop(octant, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometric_phase_integral(loop).unwrapped);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(loop.size()));
}
BENCHMARK(BM_LoopIntegral)->RangeMultiplier(10)->Range(100, 100000);

static void BM_SchrodingerCone(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  const HamiltonianPath h = spin_half_cone_hamiltonian(kPi / 3.0, 100.0);
  const PureState psi0 = PureState::basis(2, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve_schrodinger(h, psi0, steps).max_norm_drift);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SchrodingerCone)->Arg(1000)->Arg(10000);

static void BM_FringeScan(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  CMatrix u = CMatrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) u(i, i) = std::polar(1.0, 0.3 * static_cast<double>(i));
  const MZConfig cfg{0.0, u, DensityMatrix::maximally_mixed(static_cast<std::size_t>(n))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_phase_visibility(fringe_scan(cfg, 64)).visibility);
  }
}
BENCHMARK(BM_FringeScan)->Arg(2)->Arg(8)->Arg(32);
