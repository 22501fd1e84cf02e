#include <array>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "geophase/interferometer.hpp"
#include "support.hpp"

using namespace geophase;
using geophase::test::check_error_kind;
using geophase::test::circle_distance;
using geophase::test::random_state;
using geophase::test::random_unitary;

namespace {

CMatrix phase_shift(double phi) {
  CMatrix u = CMatrix::Identity(2, 2);
  u(1, 1) = std::polar(1.0, phi);
  return u;
}

MZConfig config(double chi, const CMatrix& internal, const PureState& psi) {
  return MZConfig{chi, internal, DensityMatrix::from_pure(psi)};
}

}  // namespace

TEST_CASE("composite operator blocks") {
  const CMatrix c = composite_operator(kPi, pauli::x());
  CHECK((c.topLeftCorner(2, 2) + CMatrix::Identity(2, 2)).norm() < 1e-15);
  CHECK((c.bottomRightCorner(2, 2) - pauli::x()).norm() < 1e-15);
  CHECK(c.topRightCorner(2, 2).norm() == 0.0);
  CHECK(c.bottomLeftCorner(2, 2).norm() == 0.0);
}

TEST_CASE("empty interferometer") {
  const PureState zero = PureState::basis(2, 0);
  const CMatrix id = CMatrix::Identity(2, 2);
  CHECK(intensity(config(0.0, id, zero)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(intensity(config(kPi, id, zero))) < 1e-14);
  CHECK(intensity(config(kPi / 2.0, id, zero)) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("output ports share the population") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const MZConfig cfg = config(0.37 * i, random_unitary(rng, 3), random_state(rng, 3));
    const DensityMatrix out = mz_output(cfg);
    CHECK(out.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-13));
    const double p0 = out.matrix().topLeftCorner(3, 3).trace().real();
    CHECK(p0 == doctest::Approx(intensity(cfg)).epsilon(1e-13));
  }
}

TEST_CASE("intensity matches the trace formula") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const CMatrix u = random_unitary(rng, 2);
    const PureState psi = random_state(rng, 2);
    const double chi = 0.3 * i;
    const Complex tr = psi.amplitudes().dot(u * psi.amplitudes());
    const double expected = 0.5 * (1.0 + std::abs(tr) * std::cos(chi - std::arg(tr)));
    CHECK(intensity(config(chi, u, psi)) == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("relative phase on |+> shifts the fringe by half") {
  const PureState plus = state_from_bloch({1.0, 0.0, 0.0});
  for (double phi : {0.3, 1.0, 2.0, -1.2}) {
    const PhaseVisibility pv = extract_phase_visibility(fringe_scan(config(0.0, phase_shift(phi), plus), 16));
    CHECK(circle_distance(pv.phase.radians(), phi / 2.0) < 1e-12);
    CHECK(pv.visibility == doctest::Approx(std::abs(std::cos(phi / 2.0))).epsilon(1e-12));
  }
}

TEST_CASE("fringe scan stores raw intensities") {
  const PureState plus = state_from_bloch({1.0, 0.0, 0.0});
  const FringeScan scan = fringe_scan(config(0.0, phase_shift(0.8), plus), 32);
  double mean = 0.0;
  for (const auto& p : scan.points()) mean += p.intensity;
  CHECK(mean / 32.0 == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("pure state fringe reports the overlap") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 10; ++i) {
    const CMatrix u = random_unitary(rng, 3);
    const PureState psi = random_state(rng, 3);
    const Complex o = psi.amplitudes().dot(u * psi.amplitudes());
    const PhaseVisibility pv = extract_phase_visibility(fringe_scan(config(0.0, u, psi), 24));
    CHECK(circle_distance(pv.phase.radians(), std::arg(o)) < 1e-10);
    CHECK(pv.visibility == doctest::Approx(std::abs(o)).epsilon(1e-10));
  }
}

TEST_CASE("mixed input") {
  const MZConfig cfg{0.0, phase_shift(1.0), DensityMatrix::maximally_mixed(2)};
  const PhaseVisibility pv = extract_phase_visibility(fringe_scan(cfg, 16));
  CHECK(circle_distance(pv.phase.radians(), 0.5) < 1e-12);
  CHECK(pv.visibility == doctest::Approx(std::cos(0.5)).epsilon(1e-12));
}

TEST_CASE("undefined fringe phase") {
  const MZConfig cfg = config(kPi, pauli::x(), PureState::basis(2, 0));
  check_error_kind([&] { (void)extract_phase_visibility(fringe_scan(cfg, 16)); },
                   ErrorKind::kUndefinedPhase);
  check_error_kind([&] { (void)extract_phase_visibility(fringe_scan(cfg, 4)); }, ErrorKind::kInput);
  check_error_kind([] { FringeScan({{1.0, 0.5}, {0.5, 0.5}}); }, ErrorKind::kInput);
}

TEST_CASE("projective sequence reproduces the pancharatnam phase") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 10; ++i) {
    std::vector<PureState> states;
    for (int k = 0; k < 5; ++k) states.push_back(random_state(rng, 3));
    CHECK(circle_distance(projective_sequence_phase(states).radians(),
                          pancharatnam_phase(states).radians()) < 1e-10);
  }
  const std::array<PureState, 3> octant{state_from_bloch({0.0, 0.0, 1.0}),
                                        state_from_bloch({1.0, 0.0, 0.0}),
                                        state_from_bloch({0.0, 1.0, 0.0})};
  CHECK(projective_sequence_phase(octant).radians() == doctest::Approx(kPi / 4.0).epsilon(1e-12));
  const std::array<PureState, 3> blocked{PureState::basis(2, 0), PureState::basis(2, 1),
                                         state_from_bloch({1.0, 0.0, 0.0})};
  check_error_kind([&] { (void)projective_sequence_phase(blocked); }, ErrorKind::kOrthogonalLink);
}
