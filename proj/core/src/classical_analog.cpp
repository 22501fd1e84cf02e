#include "geophase/classical_analog.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "geophase/error.hpp"
#include "geophase/qcore.hpp"

namespace geophase {

void PendulumParams::validate() const {
  if (!(omega > 0.0) || !(earth_rate >= 0.0) || !(colatitude >= 0.0 && colatitude <= kPi) ||
      !(mass > 0.0)) {
    throw Error(ErrorKind::kDomain, "pendulum needs omega > 0, Omega >= 0, theta in [0, pi]");
  }
}

double PendulumParams::swing_period() const { return 2.0 * kPi / omega; }

PendulumTrajectory foucault_integrate(const PendulumParams& p, const PendulumState& initial,
                                      double duration, std::size_t steps) {
  p.validate();
  if (!(duration > 0.0) || steps == 0) {
    throw Error(ErrorKind::kInput, "pendulum integration needs positive duration and steps");
  }
  const double h = duration / static_cast<double>(steps);
  if (p.omega * h >= 0.1) {
    throw Error(ErrorKind::kResolution, "time step too coarse: need omega * dt < 0.1");
  }
  const double c = 2.0 * p.earth_rate * std::cos(p.colatitude);
  const double w2 = p.omega * p.omega;
  Eigen::Matrix4d a;
  a << 0, 0, 1, 0,
       0, 0, 0, 1,
       -w2, 0, 0, c,
       0, -w2, -c, 0;
  const Eigen::Matrix4d id = Eigen::Matrix4d::Identity();
  // Implicit midpoint on a linear system is the Cayley map of h A.
  const Eigen::Matrix4d step = (id - 0.5 * h * a).partialPivLu().solve(id + 0.5 * h * a);

  PendulumTrajectory out;
  out.reserve(steps + 1);
  Eigen::Vector4d y(initial.x, initial.y, initial.vx, initial.vy);
  out.push_back({0.0, initial});
  for (std::size_t k = 1; k <= steps; ++k) {
    y = step * y;
    out.push_back({h * static_cast<double>(k), {y(0), y(1), y(2), y(3)}});
  }
  return out;
}

PendulumTrajectory foucault_integrate(const PendulumParams& p, double x0, double duration,
                                      std::size_t steps) {
  return foucault_integrate(p, PendulumState{x0, 0.0, 0.0, 0.0}, duration, steps);
}

double pendulum_energy(const PendulumParams& p, const PendulumState& s) {
  return 0.5 * (s.vx * s.vx + s.vy * s.vy) +
         0.5 * p.omega * p.omega * (s.x * s.x + s.y * s.y);
}

std::complex<double> foucault_closed_form(const PendulumParams& p, double x0, double t) {
  return x0 * std::polar(1.0, -p.earth_rate * std::cos(p.colatitude) * t) *
         std::polar(1.0, -p.omega * t);
}

PendulumState closed_form_initial_state(const PendulumParams& p, double x0) {
  const std::complex<double> v =
      -kI * (p.omega + p.earth_rate * std::cos(p.colatitude)) * x0;
  return {x0, 0.0, v.real(), v.imag()};
}

double adiabatic_ratio(const PendulumParams& p) {
  return p.earth_rate > 0.0 ? p.omega / p.earth_rate : INFINITY;
}

double precession_rate(const PendulumTrajectory& traj, const PendulumParams& p) {
  p.validate();
  if (traj.size() < 3) throw Error(ErrorKind::kInput, "trajectory too short");
  const double period = p.swing_period();
  const double t0 = traj.front().t;
  const double duration = traj.back().t - t0;
  if (duration < 10.0 * period * (1.0 - 1e-9)) {
    throw Error(ErrorKind::kInput, "precession needs at least 10 swing periods");
  }
  const double dt = traj[1].t - traj[0].t;
  const std::size_t n = traj.size();

  // Prefix sums of the second moments.
  std::vector<double> sxx(n + 1, 0.0), sxy(n + 1, 0.0), syy(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& s = traj[k].state;
    sxx[k + 1] = sxx[k] + s.x * s.x;
    sxy[k + 1] = sxy[k] + s.x * s.y;
    syy[k + 1] = syy[k] + s.y * s.y;
  }
  const auto window = static_cast<std::size_t>(std::llround(2.0 * period / dt));
  const auto stride = std::max<std::size_t>(1, window / 4);
  if (window < 4 || window >= n) throw Error(ErrorKind::kInput, "trajectory too coarse");

  std::vector<double> centres;
  std::vector<double> angles;
  double previous = 0.0;
  for (std::size_t lo = 0; lo + window < n; lo += stride) {
    const std::size_t hi = lo + window;
    const double mxx = sxx[hi] - sxx[lo];
    const double mxy = sxy[hi] - sxy[lo];
    const double myy = syy[hi] - syy[lo];
    double axis = 0.5 * std::atan2(2.0 * mxy, mxx - myy);
    if (!angles.empty()) {
      // The swing axis is defined modulo pi.
      axis = previous + std::remainder(axis - previous, kPi);
    }
    previous = axis;
    angles.push_back(axis);
    centres.push_back(0.5 * (traj[lo].t + traj[hi - 1].t));
  }
  if (angles.size() < 2) throw Error(ErrorKind::kInput, "trajectory too short");

  double mt = 0.0, ma = 0.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    mt += centres[i];
    ma += angles[i];
  }
  mt /= static_cast<double>(angles.size());
  ma /= static_cast<double>(angles.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    num += (centres[i] - mt) * (angles[i] - ma);
    den += (centres[i] - mt) * (centres[i] - mt);
  }
  // Counterclockwise axis rotation is negative precession.
  return -num / den;
}

double precession_angle(const PendulumTrajectory& traj, const PendulumParams& p) {
  const double rate = precession_rate(traj, p);
  return rate * (traj.back().t - traj.front().t);
}

DailyPhase foucault_daily_phase(double colatitude) {
  return {2.0 * kPi * (1.0 - std::cos(colatitude)), 2.0 * kPi * std::cos(colatitude)};
}

}  // namespace geophase
