#pragma once

#include <functional>
#include <vector>

#include "geophase/phase_abelian.hpp"
#include "geophase/qcore.hpp"

namespace geophase {

/// Time-dependent Hermitian Hamiltonian on [0, duration], hbar = 1.
class HamiltonianPath {
 public:
  HamiltonianPath(std::function<CMatrix(double)> evaluator, double duration, bool closed);

  /// Evaluates H(t) and rejects non-Hermitian output (deviation > 1e-12).
  CMatrix at(double t) const;
  double duration() const { return duration_; }
  bool closed() const { return closed_; }
  std::size_t dim() const { return dim_; }

 private:
  std::function<CMatrix(double)> evaluator_;
  double duration_;
  bool closed_;
  std::size_t dim_;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<PureState> states;
  /// Largest |norm - 1| of the raw propagated vector before storage.
  double max_norm_drift = 0.0;
};

/// Integrates i d/dt psi = H psi with the per-step exponential of the
/// midpoint Hamiltonian, exp(-i H(t + dt/2) dt). Exactly unitary; second
/// order in dt. Returns steps + 1 states including psi0.
Trajectory evolve_schrodinger(const HamiltonianPath& h, const PureState& psi0,
                              std::size_t steps);

struct AdiabaticSettings {
  /// Minimum instantaneous band population tolerated along a trajectory.
  double population_threshold = 0.99;
};

/// Phases of a (closed-loop) adiabatic evolution.
///   total     = arg <psi(0)|psi(T)>
///   dynamical = -integral E_band dt   (stationary states carry e^{-iEt})
///   geometric = total - dynamical, reduced to (-pi, pi]
struct PhaseDecomposition {
  double total = 0.0;
  double dynamical = 0.0;
  double geometric = 0.0;
  double min_population = 1.0;
};

PhaseDecomposition phase_decomposition(const Trajectory& trajectory, const HamiltonianPath& h,
                                       std::size_t band, const AdiabaticSettings& settings = {});

struct FrameSample {
  double s = 0.0;
  Eigen::VectorXd energies;  ///< ascending; may be empty for analytic families
  CMatrix vectors;           ///< orthonormal columns, one per band
};

/// Eigenvector frame along a parameter path.
class EigenFrame {
 public:
  EigenFrame(std::vector<FrameSample> samples, bool closed);

  const std::vector<FrameSample>& samples() const { return samples_; }
  bool closed() const { return closed_; }
  std::size_t bands() const { return static_cast<std::size_t>(samples_.front().vectors.cols()); }

  /// True when every consecutive overlap of `band` has positive real part.
  bool continuous(std::size_t band) const;
  EigenFrame rephased(std::size_t band, const std::function<double(double)>& alpha) const;
  std::vector<PureState> band_states(std::size_t band) const;

 private:
  std::vector<FrameSample> samples_;
  bool closed_;
};

enum class FrameGauge {
  /// Each eigenvector rephased so its overlap with the previous sample is
  /// real and positive (discrete parallel transport).
  kParallel,
  /// Each eigenvector rephased so the component that is largest at s = 0
  /// stays real and positive (a smooth, single-valued gauge).
  kComponent,
};

/// Eigen-decomposition of H on a uniform grid of steps + 1 times.
EigenFrame eigen_frame(const HamiltonianPath& h, std::size_t steps,
                       FrameGauge gauge = FrameGauge::kParallel);

struct ConnectionSample {
  double s = 0.0;      ///< midpoint of the step
  double value = 0.0;  ///< beta = i <Phi|d Phi/ds>, real
};

/// Discrete Berry connection -arg<Phi_k|Phi_{k+1}> / ds on every step.
/// Rephasing Phi by e^{i alpha(s)} shifts it by -d alpha/ds.
std::vector<ConnectionSample> berry_connection(const EigenFrame& frame, std::size_t band);

/// Closed-loop integral of the connection plus the closing gauge term
/// -arg<Phi_N|Phi_0>; invariant under any rephasing of the frame.
PhaseValue berry_phase(const EigenFrame& frame, std::size_t band);

struct ConeReport {
  double theta = 0.0;
  double duration = 0.0;
  double solid_angle = 0.0;   ///< 2 pi (1 - cos theta)
  double expected = 0.0;      ///< -solid_angle / 2, reduced
  double berry = 0.0;         ///< connection integral over the eigenframe
  double pancharatnam = 0.0;  ///< -arg of the Bargmann product of eigenstates
  PhaseDecomposition schrodinger;
  double adiabatic_residual = 0.0;  ///< 1 - min band population
  double max_pairwise_gap = 0.0;    ///< largest circle distance of the three estimates
};

/// Spin-1/2 in a field B n(theta, phi(t)) . sigma with phi sweeping 0 -> 2 pi at
/// a constant rate over `duration`. The state starts aligned with the field
/// (upper band), whose geometric phase is -Omega/2.
ConeReport spin_half_cone_experiment(double theta, double duration, std::size_t steps,
                                     double field = 1.0, const AdiabaticSettings& settings = {});

HamiltonianPath spin_half_cone_hamiltonian(double theta, double duration, double field = 1.0);

}  // namespace geophase
