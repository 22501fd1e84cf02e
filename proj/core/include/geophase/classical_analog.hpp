#pragma once

#include <complex>
#include <vector>

namespace geophase {

/// Foucault pendulum in the small-swing limit. Only frequencies enter the
/// equations of motion; the mass is carried for completeness.
struct PendulumParams {
  double mass = 1.0;        ///< kg
  double omega = 1.0;       ///< natural swing frequency, rad/s
  double earth_rate = 0.0;  ///< rotation rate Omega, rad/s
  double colatitude = 0.0;  ///< theta, radians from the rotation axis

  void validate() const;
  double swing_period() const;
};

struct PendulumState {
  double x = 0.0;
  double y = 0.0;
  double vx = 0.0;
  double vy = 0.0;
};

struct PendulumSample {
  double t;
  PendulumState state;
};

using PendulumTrajectory = std::vector<PendulumSample>;

/// Integrates
///   x'' - 2 Omega cos(theta) y' + omega^2 x = 0
///   y'' + 2 Omega cos(theta) x' + omega^2 y = 0
/// with the implicit midpoint rule (time-reversible, second order; the
/// energy (|v|^2 + omega^2 |r|^2) / 2 is conserved to rounding).
/// Requires omega * duration / steps < 0.1.
PendulumTrajectory foucault_integrate(const PendulumParams& p, const PendulumState& initial,
                                      double duration, std::size_t steps);

/// Pendulum released from rest at (x0, 0).
PendulumTrajectory foucault_integrate(const PendulumParams& p, double x0, double duration,
                                      std::size_t steps);

double pendulum_energy(const PendulumParams& p, const PendulumState& s);

/// z(t) = x0 e^{-i Omega cos(theta) t} e^{-i omega t}: the co-rotating mode in
/// the adiabatic regime omega >> Omega.
std::complex<double> foucault_closed_form(const PendulumParams& p, double x0, double t);

/// Initial state whose exact motion tracks the closed form: z(0) = x0 and
/// z'(0) = -i (omega + Omega cos theta) x0.
PendulumState closed_form_initial_state(const PendulumParams& p, double x0);

/// omega / Omega; the closed form is trustworthy above ~10.
double adiabatic_ratio(const PendulumParams& p);

/// Clockwise rotation (seen from above) of the swing plane accumulated over
/// the trajectory. The swing-plane orientation is the principal axis of the
/// position second-moment matrix over sliding two-period windows; the
/// unwrapped orientations are fitted linearly in time and the fitted rate
/// is multiplied by the trajectory duration.
double precession_angle(const PendulumTrajectory& traj, const PendulumParams& p);

/// Fitted clockwise precession rate, rad/s.
double precession_rate(const PendulumTrajectory& traj, const PendulumParams& p);

/// Per-rotation phases: the geometric phase 2 pi (1 - cos theta) and the
/// swing-plane turn 2 pi cos theta, which agree modulo 2 pi up to sign.
struct DailyPhase {
  double geometric = 0.0;
  double precession = 0.0;
};
DailyPhase foucault_daily_phase(double colatitude);

}  // namespace geophase
