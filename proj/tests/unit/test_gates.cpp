#include <array>
#include <cmath>

#include <doctest.h>

#include "geophase/gates.hpp"
#include "geophase/linalg.hpp"
#include "support.hpp"

using namespace geophase;
using geophase::test::check_error_kind;
using geophase::test::circle_distance;

namespace {

double state_fidelity(const PureState& a, const CVector& b) {
  return std::norm(a.amplitudes().dot(b));
}

const std::array<OracleSpec, 4> kOracles{OracleSpec(0, 0), OracleSpec(0, 1), OracleSpec(1, 0),
                                         OracleSpec(1, 1)};

const std::vector<double>& compiled_loop() {
  static const std::vector<double> loop = hadamard_loop_parameters();
  return loop;
}

}  // namespace

TEST_CASE("standard gates") {
  const CMatrix h = hadamard().unitary.matrix();
  CHECK((h * h).isIdentity(1e-15));
  CHECK(h(0, 0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(h(1, 1).real() == doctest::Approx(-1.0 / std::sqrt(2.0)));

  const CMatrix p = phase_gate(0.7).unitary.matrix();
  CHECK(std::abs(p(1, 1) - std::polar(1.0, 0.7)) < 1e-15);
  CHECK(std::abs(p(0, 0) - 1.0) < 1e-15);

  const GateOp cz = controlled_phase(kPi);
  CHECK(cz.arity == 2);
  CMatrix z = CMatrix::Identity(4, 4);
  z(3, 3) = -1.0;
  CHECK((cz.unitary.matrix() - z).norm() < 1e-15);
  check_error_kind([] { GateOp(UnitaryOp(CMatrix::Identity(2, 2)), 2, "bad"); },
                   ErrorKind::kDimension);
}

TEST_CASE("universal single-qubit network") {
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double theta = kPi * i / 4.0;
      const double phi = -kPi + 2.0 * kPi * j / 4.0 + 0.1;
      CVector target(2);
      target << std::cos(theta), std::polar(std::sin(theta), phi);
      CHECK(state_fidelity(universal_single_qubit(theta, phi), target) > 1.0 - 1e-12);
    }
  }
  CVector plus_i(2);
  plus_i << 1.0 / std::sqrt(2.0), kI / std::sqrt(2.0);
  CHECK(state_fidelity(universal_single_qubit(kPi / 4.0, kPi / 2.0), plus_i) > 1.0 - 1e-12);
}

TEST_CASE("deutsch algorithm") {
  for (const auto& o : kOracles) {
    const DeutschResult r = deutsch(o);
    CHECK((r.classification == DeutschClass::kConstant) == o.constant());
    CHECK(r.success_probability == doctest::Approx(1.0).epsilon(1e-14));
    const std::size_t expected = o.constant() ? 0 : 1;
    CHECK(std::abs(r.final_state[expected]) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(to_string(DeutschClass::kVarying) == "varying");
  check_error_kind([] { OracleSpec(2, 0); }, ErrorKind::kDomain);
}

TEST_CASE("aharonov-bohm phase") {
  CHECK(std::abs(ab_phase(1.3, 0) - 1.0) < 1e-15);
  CHECK(std::abs(ab_phase(2.0 * kPi, 1) - 1.0) < 1e-15);
  CHECK(std::abs(ab_phase(kPi, 2) - 1.0) < 1e-15);
  CHECK(std::abs(ab_phase(kPi, 1) + 1.0) < 1e-15);
  for (long n = -3; n <= 3; ++n)
    CHECK(std::abs(ab_phase(0.37, n) - std::pow(ab_phase(0.37, 1), static_cast<double>(n))) < 1e-13);
}

TEST_CASE("geometric phase gate") {
  // Finite loop time leaves an O(1/T) second-order adiabatic phase, about
  // 0.01-0.02 rad at the default duration.
  const GeometricGate id = geometric_phase_gate(0.0);
  CHECK(id.fidelity > 0.999);
  CHECK(std::abs(id.relative_phase) < 0.05);

  const GeometricGate quarter = geometric_phase_gate(kPi / 2.0);
  CHECK(circle_distance(quarter.relative_phase, kPi / 2.0) < 0.05);
  CHECK(linalg::gate_fidelity(quarter.simulated, phase_gate(kPi / 2.0).unitary.matrix()) > 0.999);

  PhaseGateSettings slow;
  slow.duration = 1600.0;
  const double err_fast = circle_distance(geometric_phase_gate(kPi / 2.0).relative_phase, kPi / 2.0);
  const double err_slow = circle_distance(geometric_phase_gate(kPi / 2.0, slow).relative_phase, kPi / 2.0);
  CHECK(err_slow < 0.5 * err_fast);

  const GeometricGate half = geometric_phase_gate(kPi);
  CHECK(linalg::gate_fidelity(half.simulated, pauli::z()) > 0.999);

  const GeometricGate plus = geometric_phase_gate(0.9);
  const GeometricGate minus = geometric_phase_gate(-0.9);
  CHECK(linalg::gate_fidelity(plus.simulated * minus.simulated, CMatrix::Identity(2, 2)) > 0.999);
  check_error_kind([] { (void)geometric_phase_gate(7.0); }, ErrorKind::kDomain);
}

TEST_CASE("geometric deutsch matches the gate-level algorithm") {
  GeometricDeutschSettings s;
  s.hadamard_loop = compiled_loop();
  for (const auto& o : kOracles) {
    const GeometricDeutschReport r = deutsch_geometric(o, s);
    CHECK(r.classification == deutsch(o).classification);
    CHECK(r.within_tolerance);
    CHECK(r.success_probability > 0.99);
  }
}

TEST_CASE("longer loops improve the geometric deutsch run") {
  GeometricDeutschSettings s;
  s.hadamard_loop = compiled_loop();
  s.usb_duration = 100.0;
  const double p1 = deutsch_geometric(OracleSpec(0, 0), s).success_probability;
  s.usb_duration = 200.0;
  s.cone_duration = 200.0;
  const double p2 = deutsch_geometric(OracleSpec(0, 0), s).success_probability;
  CHECK(p2 > p1);
}

TEST_CASE("relative-phase convention") {
  GeometricDeutschSettings s;
  s.hadamard_loop = compiled_loop();
  s.convention = OracleConvention::kRelativePhase;
  for (const auto& o : kOracles) {
    const GeometricDeutschReport r = deutsch_geometric(o, s);
    CHECK(r.classification == deutsch(o).classification);
  }
}
