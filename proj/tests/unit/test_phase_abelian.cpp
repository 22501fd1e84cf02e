#include <array>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "geophase/phase_abelian.hpp"
#include "support.hpp"

using namespace geophase;
using geophase::test::check_error_kind;
using geophase::test::circle_distance;

namespace {

const BlochVector kNorth{0.0, 0.0, 1.0};
const BlochVector kX{1.0, 0.0, 0.0};
const BlochVector kY{0.0, 1.0, 0.0};

// Van Oosterom-Strackee formula for a geodesic triangle.
double triangle_solid_angle(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                            const Eigen::Vector3d& c) {
  const double num = a.dot(b.cross(c));
  const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

BlochVector random_point(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::Vector3d v(g(rng), g(rng), g(rng));
  return BlochVector::from_eigen(v.normalized());
}

}  // namespace

TEST_CASE("octant pancharatnam phase") {
  const std::array<PureState, 3> states{state_from_bloch(kNorth), state_from_bloch(kX),
                                        state_from_bloch(kY)};
  CHECK(pancharatnam_phase(states).radians() == doctest::Approx(kPi / 4.0).epsilon(1e-13));

  // Cyclic shifts and rephasing leave it unchanged; reversal negates it.
  const std::array<PureState, 3> shifted{states[1].rephased(0.7), states[2], states[0].rephased(-2.0)};
  CHECK(pancharatnam_phase(shifted).radians() == doctest::Approx(kPi / 4.0).epsilon(1e-13));
  const std::array<PureState, 3> reversed{states[2], states[1], states[0]};
  CHECK(pancharatnam_phase(reversed).radians() == doctest::Approx(-kPi / 4.0).epsilon(1e-13));

  const std::array<BlochVector, 3> v{kNorth, kX, kY};
  CHECK(solid_angle(v) == doctest::Approx(kPi / 2.0).epsilon(1e-13));
}

TEST_CASE("pancharatnam phase is half the solid angle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const BlochVector a = random_point(rng), b = random_point(rng), c = random_point(rng);
    const double omega = triangle_solid_angle(a.as_eigen(), b.as_eigen(), c.as_eigen());
    const std::array<PureState, 3> states{state_from_bloch(a), state_from_bloch(b),
                                          state_from_bloch(c)};
    const std::array<BlochVector, 3> v{a, b, c};
    CHECK(circle_distance(solid_angle(v), omega) < 1e-10);
    CHECK(circle_distance(pancharatnam_phase(states).radians(), omega / 2.0) < 1e-10);
  }
}

TEST_CASE("pancharatnam phase errors") {
  const std::array<PureState, 3> states{PureState::basis(2, 0), PureState::basis(2, 1),
                                        state_from_bloch(kX)};
  check_error_kind([&] { (void)pancharatnam_phase(states); }, ErrorKind::kOrthogonalLink);
  const std::array<PureState, 2> two{PureState::basis(2, 0), state_from_bloch(kX)};
  check_error_kind([&] { (void)pancharatnam_phase(two); }, ErrorKind::kInput);
}

TEST_CASE("equator loop") {
  std::vector<BlochVector> v;
  for (int k = 0; k < 4; ++k)
    v.push_back(BlochVector::spherical(kPi / 2.0, k * kPi / 2.0));
  CHECK(std::abs(solid_angle(v)) == doctest::Approx(2.0 * kPi).epsilon(1e-12));
  const StatePath loop = bloch_polygon_loop(v, 2000);
  const LoopPhase phase = geometric_phase_integral(loop);
  CHECK(circle_distance(phase.phase.radians(), kPi) < 1e-5);
}

TEST_CASE("transport defect") {
  const PureState phi0 = state_from_bloch(kX);
  const StatePath rotating = StatePath::sample(
      [&](double s) { return phi0.rephased(s); }, 0.0, 1.0, 1001, false);
  CHECK(parallel_transport_defect(rotating) == doctest::Approx(1.0).epsilon(1e-6));

  const StatePath geo = geodesic_path(state_from_bloch(kNorth), state_from_bloch(kX), 1001);
  CHECK(parallel_transport_defect(geo) < 1e-3);
}

TEST_CASE("geodesic midpoint") {
  const StatePath geo = geodesic_path(state_from_bloch(kNorth), state_from_bloch(kX), 101);
  const BlochVector mid = bloch_from_state(geo.samples()[50].state);
  CHECK(mid.x == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(mid.y) < 1e-12);
  CHECK(mid.z == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  check_error_kind(
      [] { (void)geodesic_path(PureState::basis(2, 0), PureState::basis(2, 1), 10); },
      ErrorKind::kOrthogonalEndpoints);
}

TEST_CASE("loop integral converges on a jittered latitude circle") {
  const double theta = 1.1;
  const double exact = kPi * (1.0 - std::cos(theta));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> jitter(-0.1, 0.1);
  double previous = 1.0;
  for (std::size_t n : {100u, 1000u, 10000u, 100000u}) {
    std::vector<PathSample> samples;
    const double h = 2.0 * kPi / static_cast<double>(n);
    for (std::size_t k = 0; k <= n; ++k) {
      double phi = static_cast<double>(k) * h;
      if (k > 0 && k < n) phi += jitter(rng) * h;
      samples.push_back({phi, state_from_bloch(BlochVector::spherical(theta, phi))});
    }
    const LoopPhase phase = geometric_phase_integral(StatePath(samples, true));
    const double err = circle_distance(phase.phase.radians(), exact);
    CHECK(err < previous);
    previous = err;
  }
  CHECK(previous < 1e-8);
}

TEST_CASE("loop integral needs a closed path") {
  const StatePath open = geodesic_path(state_from_bloch(kNorth), state_from_bloch(kX), 10);
  check_error_kind([&] { (void)geometric_phase_integral(open); }, ErrorKind::kOpenPath);
}

TEST_CASE("bloch sphere curvature") {
  const TwoParamFamily family = bloch_sphere_family();
  for (double theta : {0.4, 1.0, kPi / 2.0, 2.5}) {
    for (double phi : {0.0, 1.3, 4.0}) {
      const double k = plaquette_curvature(family, {theta, phi}, 1e-3);
      CHECK(k == doctest::Approx(1.0).epsilon(1e-4));
    }
  }
}

TEST_CASE("curvature integrates to twice the octant phase") {
  // Summed plaquette phases over the octant give its Pancharatnam phase.
  const TwoParamFamily family = bloch_sphere_family();
  const std::size_t n = 40;
  const double h = (kPi / 2.0) / static_cast<double>(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double theta = (static_cast<double>(i) + 0.5) * h;
      const double phi = (static_cast<double>(j) + 0.5) * h;
      total += plaquette_curvature(family, {theta, phi}, 1e-4) * std::sin(theta) * h * h;
    }
  }
  CHECK(total / 2.0 == doctest::Approx(kPi / 4.0).epsilon(1e-3));
}

TEST_CASE("concatenation") {
  const StatePath a = geodesic_path(state_from_bloch(kNorth), state_from_bloch(kX), 5);
  const StatePath b = geodesic_path(a.samples().back().state, state_from_bloch(kY), 5);
  const std::array<StatePath, 2> pieces{a, b};
  const StatePath joined = StatePath::concatenate(pieces, false);
  CHECK(joined.size() == 9);
  for (std::size_t k = 1; k < joined.size(); ++k)
    CHECK(joined.samples()[k].s > joined.samples()[k - 1].s);
}
