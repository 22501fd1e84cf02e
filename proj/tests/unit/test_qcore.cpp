#include <cmath>
#include <random>

#include <doctest.h>

#include "geophase/qcore.hpp"
#include "support.hpp"

using namespace geophase;
using geophase::test::check_error_kind;

TEST_CASE("pure state normalization") {
  CVector v(2);
  v << Complex(1.0 + 5e-10, 0.0), 0.0;
  PureState psi(v);
  CHECK(psi.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-15));

  v << 2.0, 0.0;
  check_error_kind([&] { PureState bad(v); }, ErrorKind::kDomain);
  check_error_kind([] { PureState::normalized(CVector::Zero(3)); }, ErrorKind::kDomain);
  check_error_kind([] { PureState::basis(2, 2); }, ErrorKind::kDimension);
}

TEST_CASE("bloch round trip") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double theta = std::acos(1.0 - 2.0 * u(rng));
    const double phi = 2.0 * kPi * u(rng);
    const BlochVector s = BlochVector::spherical(theta, phi);
    const BlochVector back = bloch_from_state(state_from_bloch(s));
    CHECK(std::abs(back.x - s.x) < 1e-12);
    CHECK(std::abs(back.y - s.y) < 1e-12);
    CHECK(std::abs(back.z - s.z) < 1e-12);

    const BlochVector r{0.5 * s.x, 0.5 * s.y, 0.5 * s.z};
    const DensityMatrix rho = density_from_bloch(r);
    CHECK(rho.purity() == doctest::Approx(0.5 * (1.0 + 0.25)).epsilon(1e-12));
    const BlochVector rb = bloch_from_density(rho);
    CHECK(std::abs(rb.z - r.z) < 1e-12);
  }
  check_error_kind([] { density_from_bloch({1.0, 1.0, 0.0}); }, ErrorKind::kDomain);
}

TEST_CASE("state_from_bloch gauge") {
  const PureState plus = state_from_bloch({1.0, 0.0, 0.0});
  CHECK(std::abs(plus[0] - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
  CHECK(std::abs(plus[1] - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
  const PureState plus_y = state_from_bloch({0.0, 1.0, 0.0});
  CHECK(std::abs(plus_y[1] - Complex(0.0, 1.0 / std::sqrt(2.0))) < 1e-15);
}

TEST_CASE("overlap and apply") {
  const PureState zero = PureState::basis(2, 0);
  const PureState one = PureState::basis(2, 1);
  CHECK(std::abs(overlap(zero, one)) == 0.0);
  CHECK(std::abs(overlap(zero, zero) - 1.0) < 1e-15);

  const PureState flipped = apply(UnitaryOp(pauli::x()), zero);
  CHECK(std::abs(overlap(one, flipped) - 1.0) < 1e-15);

  CMatrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  h /= std::sqrt(2.0);
  const PureState plus = apply(UnitaryOp(h), zero);
  CHECK(std::abs(plus[0] - plus[1]) < 1e-15);

  // <a|b> is antilinear in the first slot.
  const PureState a = zero.rephased(0.3);
  CHECK(std::arg(overlap(a, zero)) == doctest::Approx(-0.3));
  check_error_kind([&] { (void)overlap(zero, PureState::basis(3, 0)); }, ErrorKind::kDimension);
}

TEST_CASE("unitary validation") {
  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 0) = 1.1;
  check_error_kind([&] { UnitaryOp bad(m); }, ErrorKind::kValidation);
  const UnitaryOp x(pauli::x());
  const UnitaryOp y(pauli::y());
  const CMatrix prod = (x * y).matrix();
  CHECK((prod - kI * pauli::z()).norm() < 1e-15);
  CHECK((x.adjoint() * x).matrix().isIdentity(1e-15));
}

TEST_CASE("density matrix validation") {
  CMatrix m(2, 2);
  m << 1.5, 0.0, 0.0, -0.5;
  check_error_kind([&] { DensityMatrix bad(m); }, ErrorKind::kValidation);
  CHECK(DensityMatrix::maximally_mixed(4).purity() == doctest::Approx(0.25));
}

TEST_CASE("wrap_phase") {
  CHECK(wrap_phase(kPi) == doctest::Approx(kPi));
  CHECK(wrap_phase(-kPi) == doctest::Approx(kPi));
  CHECK(wrap_phase(3.0 * kPi / 2.0) == doctest::Approx(-kPi / 2.0));
  CHECK(wrap_phase(0.25 + 8.0 * kPi) == doctest::Approx(0.25));
}
