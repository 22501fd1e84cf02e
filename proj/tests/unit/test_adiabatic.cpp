#include <cmath>

#include <doctest.h>

#include "geophase/adiabatic.hpp"
#include "support.hpp"

using namespace geophase;
using geophase::test::check_error_kind;
using geophase::test::circle_distance;

namespace {

HamiltonianPath static_sigma_z(double duration) {
  return HamiltonianPath([](double) { return CMatrix(pauli::z()); }, duration, true);
}

// A driven qubit with no closed form, used for convergence checks.
HamiltonianPath driven_qubit() {
  return HamiltonianPath(
      [](double t) {
        return CMatrix(std::cos(t) * pauli::x() + 0.5 * t * pauli::z() + 0.3 * pauli::y());
      },
      2.0, false);
}

}  // namespace

TEST_CASE("static sigma_z for time pi") {
  const Trajectory tr = evolve_schrodinger(static_sigma_z(kPi), PureState::basis(2, 0), 100);
  CHECK(tr.states.size() == 101);
  const PureState& end = tr.states.back();
  CHECK(std::abs(end[0] - Complex(-1.0, 0.0)) < 1e-12);
  CHECK(tr.max_norm_drift < 1e-13);
}

TEST_CASE("second order convergence") {
  const HamiltonianPath h = driven_qubit();
  const PureState psi0 = PureState::basis(2, 0);
  const CVector ref = evolve_schrodinger(h, psi0, 64000).states.back().amplitudes();
  const double e1 = (evolve_schrodinger(h, psi0, 200).states.back().amplitudes() - ref).norm();
  const double e2 = (evolve_schrodinger(h, psi0, 400).states.back().amplitudes() - ref).norm();
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("hamiltonian validation") {
  CMatrix bad = pauli::x();
  bad(0, 1) = 2.0;
  check_error_kind([&] { HamiltonianPath([bad](double) { return bad; }, 1.0, false); },
                   ErrorKind::kValidation);
  const HamiltonianPath late(
      [bad](double t) { return t < 0.5 ? CMatrix(pauli::x()) : bad; }, 1.0, false);
  check_error_kind([&] { (void)late.at(0.7); }, ErrorKind::kValidation);
  check_error_kind(
      [] { HamiltonianPath([](double t) { return CMatrix(t * pauli::z()); }, 1.0, true); },
      ErrorKind::kValidation);
}

TEST_CASE("phase decomposition is consistent") {
  const double duration = 200.0;
  const HamiltonianPath h = spin_half_cone_hamiltonian(kPi / 3.0, duration);
  const FrameSample f0 = eigen_frame(h, 1).samples().front();
  const PureState up(f0.vectors.col(1));
  const Trajectory tr = evolve_schrodinger(h, up, 20000);
  const PhaseDecomposition d = phase_decomposition(tr, h, 1);
  CHECK(circle_distance(d.total, d.dynamical + d.geometric) < 1e-12);
  CHECK(d.dynamical == doctest::Approx(-duration).epsilon(1e-9));
  CHECK(circle_distance(d.geometric, -kPi / 2.0) < 0.05);
  CHECK(d.min_population > 0.99);
}

TEST_CASE("adiabaticity violation is reported") {
  const HamiltonianPath h = spin_half_cone_hamiltonian(kPi / 3.0, 0.5);
  const FrameSample f0 = eigen_frame(h, 1).samples().front();
  const Trajectory tr = evolve_schrodinger(h, PureState(f0.vectors.col(1)), 1000);
  check_error_kind([&] { (void)phase_decomposition(tr, h, 1); }, ErrorKind::kAdiabaticity);
}

TEST_CASE("berry connection of the spin-1/2 cone") {
  const double theta = kPi / 3.0;
  const double duration = 10.0;
  const HamiltonianPath h = spin_half_cone_hamiltonian(theta, duration);
  const EigenFrame smooth = eigen_frame(h, 2000, FrameGauge::kComponent);
  const auto conn = berry_connection(smooth, 1);
  const double expected = -(1.0 - std::cos(theta)) / 2.0 * (2.0 * kPi / duration);
  for (const auto& c : conn) CHECK(c.value == doctest::Approx(expected).epsilon(1e-5));
  CHECK(berry_phase(smooth, 1).radians() == doctest::Approx(-kPi / 2.0).epsilon(1e-5));

  // The parallel gauge moves the whole phase into the closing term.
  const EigenFrame parallel = eigen_frame(h, 2000, FrameGauge::kParallel);
  for (const auto& c : berry_connection(parallel, 1)) CHECK(std::abs(c.value) < 1e-12);
  CHECK(circle_distance(berry_phase(parallel, 1).radians(), -kPi / 2.0) < 1e-5);
  // The lower band carries the opposite phase.
  CHECK(circle_distance(berry_phase(smooth, 0).radians(), kPi / 2.0) < 1e-5);
}

TEST_CASE("berry connection gauge covariance") {
  const HamiltonianPath h = spin_half_cone_hamiltonian(0.9, 1.0);
  const EigenFrame frame = eigen_frame(h, 4000, FrameGauge::kComponent);
  // alpha(1) - alpha(0) = 2 pi keeps the frame single valued.
  const auto alpha = [](double s) { return 2.0 * kPi * s + 0.4 * std::sin(2.0 * kPi * s); };
  const auto dalpha = [](double s) { return 2.0 * kPi + 0.8 * kPi * std::cos(2.0 * kPi * s); };
  const EigenFrame moved = frame.rephased(1, alpha);
  const auto c0 = berry_connection(frame, 1);
  const auto c1 = berry_connection(moved, 1);
  REQUIRE(c0.size() == c1.size());
  for (std::size_t k = 0; k < c0.size(); ++k)
    CHECK(c1[k].value - c0[k].value == doctest::Approx(-dalpha(c0[k].s)).epsilon(1e-5));
  CHECK(circle_distance(berry_phase(moved, 1).radians(), berry_phase(frame, 1).radians()) < 1e-10);
}

TEST_CASE("time rescaling leaves the evolution unchanged") {
  const double theta = 0.8;
  const HamiltonianPath slow = spin_half_cone_hamiltonian(theta, 40.0, 1.0);
  const HamiltonianPath fast = spin_half_cone_hamiltonian(theta, 20.0, 2.0);
  const PureState psi0 = state_from_bloch(BlochVector::spherical(0.3, 0.2));
  const CVector a = evolve_schrodinger(slow, psi0, 4000).states.back().amplitudes();
  const CVector b = evolve_schrodinger(fast, psi0, 4000).states.back().amplitudes();
  CHECK((a - b).norm() < 1e-12);
}

TEST_CASE("cone experiment agrees across estimates") {
  const ConeReport r = spin_half_cone_experiment(kPi / 3.0, 400.0, 40000);
  CHECK(r.solid_angle == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(r.expected == doctest::Approx(-kPi / 2.0).epsilon(1e-12));
  CHECK(circle_distance(r.berry, r.expected) < 1e-4);
  CHECK(circle_distance(r.pancharatnam, r.expected) < 1e-4);
  CHECK(circle_distance(r.schrodinger.geometric, r.expected) < 0.02);
  check_error_kind([] { (void)spin_half_cone_experiment(0.0, 1.0, 10); }, ErrorKind::kDomain);
}

TEST_CASE("degenerate bands are rejected") {
  const HamiltonianPath h([](double) { return CMatrix(CMatrix::Identity(2, 2)); }, 1.0, true);
  const EigenFrame frame = eigen_frame(h, 10);
  check_error_kind([&] { (void)berry_connection(frame, 0); }, ErrorKind::kDegeneracy);
}
