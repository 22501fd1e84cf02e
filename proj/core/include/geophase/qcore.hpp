#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "geophase/error.hpp"

namespace geophase {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Normalized state vector. Construction renormalizes inputs whose norm is
/// within 1e-9 of one and rejects anything further off, so the stored
/// amplitudes always have unit norm to rounding.
class PureState {
 public:
  explicit PureState(CVector amplitudes);

  /// Scales arbitrary nonzero amplitudes to unit norm.
  static PureState normalized(const CVector& amplitudes);
  static PureState basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const CVector& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }

  PureState rephased(double alpha) const;
  CMatrix projector() const { return amps_ * amps_.adjoint(); }

 private:
  CVector amps_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix entries);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
  const CMatrix& matrix() const { return rho_; }
  double purity() const { return (rho_ * rho_).trace().real(); }

 private:
  CMatrix rho_;
};

/// Square matrix with U^dagger U = 1 within 1e-10 (Frobenius).
class UnitaryOp {
 public:
  explicit UnitaryOp(CMatrix entries);

  static UnitaryOp identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(u_.rows()); }
  const CMatrix& matrix() const { return u_; }
  UnitaryOp adjoint() const;

  friend UnitaryOp operator*(const UnitaryOp& a, const UnitaryOp& b);

 private:
  CMatrix u_;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  Eigen::Vector3d as_eigen() const { return {x, y, z}; }
  static BlochVector from_eigen(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }
  /// Point on the unit sphere at polar angle theta (from +z) and azimuth phi.
  static BlochVector spherical(double theta, double phi);
};

namespace pauli {
CMatrix x();
CMatrix y();
CMatrix z();
}  // namespace pauli

/// rho = (I + s . sigma) / 2.
DensityMatrix density_from_bloch(const BlochVector& s);
BlochVector bloch_from_density(const DensityMatrix& rho);

/// Bloch vector of a qubit pure state.
BlochVector bloch_from_state(const PureState& psi);
/// Qubit state (cos(theta/2), e^{i phi} sin(theta/2)) pointing along s; the
/// first amplitude is real and non-negative.
PureState state_from_bloch(const BlochVector& s);

/// <a|b>.
Complex overlap(const PureState& a, const PureState& b);
PureState apply(const UnitaryOp& u, const PureState& psi);

/// Wraps an angle into (-pi, pi].
double wrap_phase(double radians);

}  // namespace geophase
