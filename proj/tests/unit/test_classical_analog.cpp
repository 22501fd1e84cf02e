#include <array>
#include <cmath>

#include <doctest.h>

#include "geophase/classical_analog.hpp"
#include "support.hpp"

using namespace geophase;
using geophase::test::check_error_kind;

namespace {

PendulumParams params(double colatitude, double earth_rate = 0.02 * 2.0 * kPi) {
  PendulumParams p;
  p.omega = 2.0 * kPi;
  p.earth_rate = earth_rate;
  p.colatitude = colatitude;
  return p;
}

}  // namespace

TEST_CASE("no rotation keeps the swing plane") {
  const PendulumParams p = params(kPi / 3.0, 0.0);
  const auto traj = foucault_integrate(p, 1.0, 20.0, 4000);
  CHECK(std::abs(precession_angle(traj, p)) < 1e-10);
  for (const auto& s : traj) CHECK(std::abs(s.state.y) < 1e-14);
}

TEST_CASE("precession rate at colatitude pi/3") {
  const PendulumParams p = params(kPi / 3.0);
  const auto traj = foucault_integrate(p, 1.0, 50.0, 10000);
  const double expected = p.earth_rate * std::cos(p.colatitude);
  CHECK(precession_rate(traj, p) == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("released at the origin stays there") {
  const PendulumParams p = params(kPi / 3.0);
  const auto traj = foucault_integrate(p, 0.0, 20.0, 4000);
  for (const auto& s : traj) {
    CHECK(s.state.x == 0.0);
    CHECK(s.state.y == 0.0);
  }
}

TEST_CASE("energy is conserved") {
  const PendulumParams p = params(1.0, 0.3);
  const auto traj = foucault_integrate(p, 0.7, 100.0, 20000);
  const double e0 = pendulum_energy(p, traj.front().state);
  for (const auto& s : traj)
    CHECK(std::abs(pendulum_energy(p, s.state) - e0) < 1e-3 * e0);
}

TEST_CASE("mass does not enter the motion") {
  PendulumParams light = params(0.6);
  PendulumParams heavy = light;
  heavy.mass = 37.0;
  const auto a = foucault_integrate(light, 1.0, 10.0, 2000);
  const auto b = foucault_integrate(heavy, 1.0, 10.0, 2000);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].state.x == b[k].state.x);
    CHECK(a[k].state.y == b[k].state.y);
  }
}

TEST_CASE("pole makes a full turn per rotation") {
  const PendulumParams p = params(0.0, 2.0 * kPi / 50.0);
  const auto traj = foucault_integrate(p, 1.0, 50.0, 10000);
  CHECK(precession_angle(traj, p) == doctest::Approx(2.0 * kPi).epsilon(1e-3));
}

TEST_CASE("rate is linear in cos(theta)") {
  const double rate = 0.02 * 2.0 * kPi;
  const std::array<double, 4> thetas{0.0, kPi / 6.0, kPi / 3.0, kPi / 2.0};
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double th : thetas) {
    const PendulumParams p = params(th, rate);
    const double x = std::cos(th);
    const double y = precession_rate(foucault_integrate(p, 1.0, 50.0, 10000), p);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(thetas.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  CHECK(std::abs(intercept) < 1e-3 * rate);
  CHECK(slope == doctest::Approx(rate).epsilon(0.01));
}

TEST_CASE("closed form tracks the matched initial state") {
  const PendulumParams p = params(kPi / 4.0, 0.05);
  const PendulumState init = closed_form_initial_state(p, 1.0);
  const auto traj = foucault_integrate(p, init, 10.0, 20000);
  for (std::size_t k = 0; k < traj.size(); k += 1000) {
    const auto z = foucault_closed_form(p, 1.0, traj[k].t);
    const double err = std::hypot(traj[k].state.x - z.real(), traj[k].state.y - z.imag());
    CHECK(err < 2e-3);
  }
  CHECK(adiabatic_ratio(p) == doctest::Approx(2.0 * kPi / 0.05));
}

TEST_CASE("daily phase bookkeeping") {
  for (double th : {0.0, 0.5, kPi / 2.0, 2.0}) {
    const DailyPhase d = foucault_daily_phase(th);
    CHECK(d.geometric + d.precession == doctest::Approx(2.0 * kPi));
  }
}

TEST_CASE("input errors") {
  const PendulumParams p = params(kPi / 3.0);
  check_error_kind([&] { (void)foucault_integrate(p, 1.0, 10.0, 50); }, ErrorKind::kResolution);
  PendulumParams bad = p;
  bad.omega = -1.0;
  check_error_kind([&] { (void)foucault_integrate(bad, 1.0, 10.0, 5000); }, ErrorKind::kDomain);
  const auto short_run = foucault_integrate(p, 1.0, 3.0, 600);
  check_error_kind([&] { (void)precession_rate(short_run, p); }, ErrorKind::kInput);
}
