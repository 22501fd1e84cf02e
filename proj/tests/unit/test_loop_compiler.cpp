#include <array>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "geophase/loop_compiler.hpp"
#include "geophase/phase_abelian.hpp"
#include "support.hpp"

using namespace geophase;
using geophase::test::check_error_kind;
using geophase::test::circle_distance;

TEST_CASE("loop family objective") {
  const PulseFamily family = PulseFamily::circle_ps(1.0);
  const std::array<double, 3> point{2.0, 2.0, 0.0};
  CHECK(evaluate_loop(family, point) == 0.0);

  const std::array<double, 3> circle{2.0, 2.0, 0.5};
  const double gamma = evaluate_loop(family, circle, 20000);
  const double hol = rotation_angle(usb_holonomy(family.schedule(circle), 20000).matrix());
  CHECK(circle_distance(gamma, hol) < 1e-4);

  const double reversed = usb_gamma_closed_form(family.schedule(circle).reversed(), 20000);
  CHECK(reversed == doctest::Approx(-gamma).epsilon(1e-12));

  const std::array<double, 3> outside{4.0, 1.0, 0.5};
  CHECK_FALSE(family.contains(outside));
  check_error_kind([&] { (void)family.schedule(outside); }, ErrorKind::kDomain);
}

TEST_CASE("compiling a zero rotation") {
  const CompileResult r = compile_rotation(0.0, PulseFamily::circle_ps(1.0));
  CHECK(r.converged);
  CHECK(r.residual < 1e-9);
}

TEST_CASE("compiling a quarter-pi rotation") {
  CompileSettings s;
  s.verification_steps = 20000;
  const CompileResult r = compile_rotation(kPi / 4.0, PulseFamily::circle_ps(1.0), s);
  CHECK(r.converged);
  CHECK(r.residual < 1e-3);
  CHECK(r.reachable_min < kPi / 4.0);
  CHECK(r.reachable_max > kPi / 4.0);
  CHECK(r.verification_gap < 1e-3);
  CHECK(r.seed == s.seed);

  // Same seed, same answer.
  const CompileResult again = compile_rotation(kPi / 4.0, PulseFamily::circle_ps(1.0), s);
  CHECK(again.parameters == r.parameters);
}

TEST_CASE("unreachable targets are flagged, not thrown") {
  CompileSettings s;
  s.max_evaluations = 200;
  s.restarts = 2;
  s.verification_steps = 2000;
  const CompileResult r = compile_rotation(20.0, PulseFamily::circle_ps(1.0), s);
  CHECK_FALSE(r.converged);
  CHECK(r.residual > 1.0);
  CHECK(r.reachable_max < 20.0);
}

TEST_CASE("bloch loops hit their solid angle") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-2.0 * kPi + 1e-3, 2.0 * kPi - 1e-3);
  for (int i = 0; i < 50; ++i) {
    const double omega = u(rng);
    const auto loop = compile_bloch_loop(omega);
    CHECK(std::abs(solid_angle(loop) - omega) < 1e-10);
  }
  const auto octant = compile_bloch_loop(kPi / 2.0);
  REQUIRE(octant.size() == 3);
  CHECK(std::abs(octant[0].z - 1.0) < 1e-15);
  CHECK(std::abs(octant[1].x - 1.0) < 1e-15);
  CHECK(std::abs(octant[2].y - 1.0) < 1e-15);
  CHECK(solid_angle(compile_bloch_loop(-1.0)) == doctest::Approx(-1.0).epsilon(1e-12));
  check_error_kind([] { (void)compile_bloch_loop(2.0 * kPi); }, ErrorKind::kDomain);
}

TEST_CASE("noise robustness") {
  const PulseSchedule loop = PulseSchedule::circle_ps(2.0, 2.0, 0.5, 1.0);
  const std::array<double, 3> sigmas{0.0, 0.005, 0.01};
  const NoiseReport a = noise_robustness(loop, sigmas, 100, 42, 1024);
  REQUIRE(a.levels.size() == 3);
  CHECK(a.levels[0].mean_error == 0.0);
  CHECK(a.levels[1].mean_error > 0.0);
  CHECK(a.levels[2].mean_error > a.levels[1].mean_error);
  CHECK(a.slope > 0.5);

  const NoiseReport b = noise_robustness(loop, sigmas, 100, 42, 1024);
  for (std::size_t k = 0; k < 3; ++k) CHECK(a.levels[k].mean_error == b.levels[k].mean_error);
  const NoiseReport c = noise_robustness(loop, sigmas, 100, 43, 1024);
  CHECK(c.levels[2].mean_error != a.levels[2].mean_error);

  check_error_kind([&] { (void)noise_robustness(loop, sigmas, 10, 42, 1024); }, ErrorKind::kInput);
}
