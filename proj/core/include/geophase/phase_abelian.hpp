#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "geophase/qcore.hpp"

namespace geophase {

/// Phase in (-pi, pi].
class PhaseValue {
 public:
  PhaseValue() = default;
  explicit PhaseValue(double radians) : radians_(wrap_phase(radians)) {}

  double radians() const { return radians_; }
  PhaseValue operator-() const { return PhaseValue(-radians_); }

 private:
  double radians_ = 0.0;
};

/// Distance between two angles on the circle, in [0, pi].
double phase_distance(double a, double b);

struct PathSample {
  double s;
  PureState state;
};

/// Ordered one-parameter family of states. A closed path has first and last
/// states equal up to a global phase.
class StatePath {
 public:
  StatePath(std::vector<PathSample> samples, bool closed);

  std::span<const PathSample> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  bool closed() const { return closed_; }
  std::vector<PureState> states() const;

  /// Samples s_k with the states produced by `f`, on a uniform grid of `n`
  /// points over [s0, s1].
  static StatePath sample(const std::function<PureState(double)>& f, double s0,
                          double s1, std::size_t n, bool closed);

  /// Concatenates open paths whose junction states agree up to phase; the
  /// duplicate junction sample is dropped and parameters are shifted to stay
  /// increasing.
  static StatePath concatenate(std::span<const StatePath> pieces, bool closed);

 private:
  std::vector<PathSample> samples_;
  bool closed_;
};

/// Two-parameter family psi(s, s') with an optional area element
/// dA = area_element(s, s') ds ds' (defaults to 1).
struct TwoParamFamily {
  std::function<PureState(double, double)> evaluator;
  std::function<double(double, double)> area_element;
};

/// arg <psi_1|psi_2><psi_2|psi_3>...<psi_n|psi_1>.
PhaseValue pancharatnam_phase(std::span<const PureState> states);

/// max_k |Im <psi_k|psi_{k+1}>| / ds_k. Zero for a parallel-transported path.
double parallel_transport_defect(const StatePath& path);

struct LoopPhase {
  PhaseValue phase;
  double unwrapped = 0.0;  ///< accumulated phase before reduction
  int winding = 0;         ///< unwrapped = phase + 2 pi winding
};

/// Discretized loop integral of Im<psi|d psi>, i.e. sum_k Im<psi_k|psi_{k+1}>
/// plus the closing gauge term arg<psi_last|psi_first>. Converges to the
/// Pancharatnam phase of the samples with error O(ds^2) for smooth gauges.
LoopPhase geometric_phase_integral(const StatePath& path);

/// Fubini-Study geodesic from a to b (b rephased so <a|b> > 0), n samples on
/// s in [0, 1]. The samples are parallel transported.
StatePath geodesic_path(const PureState& a, const PureState& b, std::size_t n);

/// Closed loop through `vertices` along geodesic arcs, `per_arc` samples per
/// arc, in the gauge of `state_from_bloch`.
StatePath bloch_polygon_loop(std::span<const BlochVector> vertices, std::size_t per_arc);

/// Oriented solid angle of the geodesic polygon through unit vectors,
/// counterclockwise seen from outside being positive. Result in (-2pi, 2pi].
double solid_angle(std::span<const BlochVector> vertices);

/// Curvature at `point` from the Pancharatnam phase around the square
/// plaquette of side delta centred there:
///   K = 2 * phase / (delta^2 * area_element).
/// The factor 2 expresses the rotation of the transported phase vector,
/// which is twice the Pancharatnam phase for a qubit; K = 1 on the Bloch
/// sphere with area element sin(theta).
double plaquette_curvature(const TwoParamFamily& family, std::pair<double, double> point,
                           double delta);

/// (theta, phi) -> (cos theta/2, e^{i phi} sin theta/2) with area element sin theta.
TwoParamFamily bloch_sphere_family();

/// Coherent states |alpha> with alpha = x + i y, truncated to `fock_dim`
/// Fock levels and renormalized; area element 1 in (x, y).
TwoParamFamily coherent_state_family(std::size_t fock_dim);

}  // namespace geophase
