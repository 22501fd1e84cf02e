#pragma once

#include <functional>
#include <span>
#include <vector>

#include "geophase/qcore.hpp"

namespace geophase {

struct DegenerateSample {
  double s = 0.0;
  CMatrix basis;  ///< n x k, orthonormal columns spanning the degenerate subspace
};

/// Orthonormal k-frames of a degenerate subspace along a parameter path.
class DegenerateFrame {
 public:
  explicit DegenerateFrame(std::vector<DegenerateSample> samples);

  const std::vector<DegenerateSample>& samples() const { return samples_; }
  std::size_t rank() const { return static_cast<std::size_t>(samples_.front().basis.cols()); }
  /// Re-gauges every sample by the same k x k unitary: Phi -> Phi g.
  DegenerateFrame regauged(const CMatrix& g) const;

 private:
  std::vector<DegenerateSample> samples_;
};

struct ConnectionStep {
  double s = 0.0;   ///< step midpoint
  double ds = 0.0;  ///< step width
  CMatrix a;        ///< Hermitian, i <Phi_a|d Phi_b / ds>
};

/// Wilczek-Zee connection sampled on the steps of a frame. Transport of the
/// coefficients c in psi = Phi c obeys dc/ds = i A c.
struct WZConnection {
  std::vector<ConnectionStep> steps;
  /// Largest |A - A^dagger| entry before Hermitian symmetrization.
  double hermiticity_defect = 0.0;
};

/// A_k = i Phi_k^dagger (Phi_{k+1} - Phi_k) / ds, Hermitian part kept.
/// Throws kGauge when a step overlap Phi_k^dagger Phi_{k+1} does not have a
/// positive-definite Hermitian part.
WZConnection wz_connection(const DegenerateFrame& frame);

/// Unitary k x k matrix.
class HolonomyMatrix {
 public:
  explicit HolonomyMatrix(CMatrix u);
  const CMatrix& matrix() const { return u_; }
  std::size_t rank() const { return static_cast<std::size_t>(u_.rows()); }

 private:
  CMatrix u_;
};

/// prod_k exp(i A_k ds_k), later steps multiplied on the left.
HolonomyMatrix path_ordered_exp(const WZConnection& a);

/// Transport around a closed frame, written in the basis of the first
/// sample: (Phi_0^dagger Phi_N) * P exp(i integral A). The first factor
/// accounts for any gauge mismatch at the closing point.
HolonomyMatrix closed_loop_holonomy(const DegenerateFrame& frame);

/// Discrete parallel transport through a closed list of frames: each frame
/// is polar-aligned to its predecessor and the first frame is revisited.
HolonomyMatrix discrete_holonomy(std::span<const CMatrix> loop);

/// Rotation angle of a (near) SO(2) matrix [[c, -s], [s, c]].
double rotation_angle(const CMatrix& u);

/// log(W) / delta^2 for the plaquette holonomy W of the square of side delta
/// centred at `point` (corners traversed along the first then the second
/// parameter). Equals i F_{12} with F_{12} = d1 A2 - d2 A1 - i [A1, A2].
CMatrix field_strength_plaquette(const std::function<CMatrix(double, double)>& frame_family,
                                 std::pair<double, double> point, double delta);

// --- Four-level dark-state model -------------------------------------------

struct Controls {
  double p = 0.0;
  double q = 0.0;
  double s = 0.0;
};

/// Couplings of level 2 to levels 1 (P), 3 (S) and 4 (Q).
CMatrix usb_hamiltonian(double p, double q, double s);
/// Complex couplings; the lower triangle carries the conjugates.
CMatrix usb_hamiltonian(Complex p, Complex q, Complex s);

/// Real controls as functions of the normalized loop parameter u in [0, 1];
/// physical time is u * duration.
class PulseSchedule {
 public:
  PulseSchedule(std::function<Controls(double)> controls, double duration, bool closed,
                double gap_floor = 1e-6);

  Controls at(double u) const { return controls_(u); }
  double duration() const { return duration_; }
  bool closed() const { return closed_; }
  double gap_floor() const { return gap_floor_; }
  PulseSchedule reversed() const;
  PulseSchedule with_duration(double duration) const;
  /// Same loop traversed with the profile u - sin(2 pi u) / (2 pi), so the
  /// controls start and stop at rest. The holonomy is unchanged.
  PulseSchedule eased() const;

  /// Circle (p0 + r cos 2 pi u, q, s0 + r sin 2 pi u): counterclockwise in (P, S).
  static PulseSchedule circle_ps(double p0, double s0, double radius, double q,
                                 double duration = 1.0);
  /// Piecewise-linear interpolation of samples on a uniform u grid; the last
  /// sample must equal the first for a closed schedule.
  static PulseSchedule from_samples(std::vector<Controls> samples, double duration, bool closed);

 private:
  std::function<Controls(double)> controls_;
  double duration_;
  bool closed_;
  double gap_floor_;
};

/// Orthonormal dark pair built from the coupling geometry: with
/// n = (P, S, Q) on levels (1, 3, 4), Phi1 = n x e4 / |n x e4| and
/// Phi2 = n^ x Phi1. This is the printed pair with tan(theta) = P/S and
/// tan(phi) = Q / sqrt(P^2 + S^2).
CMatrix canonical_dark_frame(const Controls& c);

enum class FrameAlignment {
  /// Each null-space basis is polar-aligned to the frame at u = 0; a smooth
  /// single-valued gauge, so the connection carries the holonomy.
  kReference,
  /// Each basis is polar-aligned to its predecessor (discrete parallel
  /// transport); the holonomy then sits in the closing overlap.
  kSequential,
};

/// Zero-energy eigenspace of a Hamiltonian family on steps + 1 points of
/// u in [0, 1]. Eigenvalues within half the smallest nonzero |eigenvalue| of
/// zero count as dark; a gap below `gap_floor` throws kDegeneracyCollapse.
DegenerateFrame null_space_frame(const std::function<CMatrix(double)>& family, std::size_t steps,
                                 const CMatrix& reference, FrameAlignment alignment,
                                 double gap_floor = 1e-6);

/// Numeric dark frame of the schedule, first sample aligned to the
/// canonical pair.
DegenerateFrame usb_dark_frame(const PulseSchedule& schedule, std::size_t steps,
                               FrameAlignment alignment = FrameAlignment::kReference);

/// Closed-loop dark-state holonomy in the canonical frame at u = 0. For real
/// controls it is [[cos g, -sin g], [sin g, cos g]] with g the closed-form angle.
HolonomyMatrix usb_holonomy(const PulseSchedule& schedule, std::size_t steps,
                            FrameAlignment alignment = FrameAlignment::kReference);

/// Trapezoidal line integral of Q / ((P^2 + S^2) sqrt(P^2 + Q^2 + S^2)) (S dP - P dS)
/// over the sampled loop. Throws kSingularity if P^2 + S^2 < floor^2.
double usb_gamma_closed_form(const PulseSchedule& schedule, std::size_t quadrature_steps,
                             double singularity_floor = 1e-6);
/// Same integrand over an explicit closed polygon (last point == first).
double usb_gamma_polygon(std::span<const Controls> polygon, double singularity_floor = 1e-6);

struct DarkEvolution {
  CMatrix projected;     ///< <Phi_a(0)|psi_b(T)>, 2 x 2
  double leakage = 0.0;  ///< max_b (1 - |P_dark psi_b(T)|^2)
};

/// Four-level Schrodinger evolution over the schedule stretched to
/// `duration`, started from each canonical dark state at u = 0.
DarkEvolution usb_dark_evolution(const PulseSchedule& schedule, double duration,
                                 std::size_t steps);

struct FullEvolutionReport {
  double duration = 0.0;
  CMatrix projected;  ///< <Phi_a(0)|psi_b(T)>
  CMatrix holonomy;
  double leakage = 0.0;  ///< max_b (1 - |P_dark psi_b(T)|^2)
  double distance = 0.0;  ///< Frobenius |projected - holonomy|
  double projected_angle = 0.0;
  double holonomy_angle = 0.0;
};

/// Evolves the four-level Schrodinger equation over the schedule stretched to
/// `duration` from each canonical dark state and compares the projected 2x2
/// evolution with the connection holonomy.
FullEvolutionReport usb_full_evolution_check(const PulseSchedule& schedule, double duration,
                                             std::size_t steps,
                                             std::size_t holonomy_steps = 100000);

}  // namespace geophase
