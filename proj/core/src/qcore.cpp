#include "geophase/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace geophase {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kDimension: return "dimension";
    case ErrorKind::kInput: return "input";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kOrthogonalLink: return "orthogonal-link";
    case ErrorKind::kOrthogonalEndpoints: return "orthogonal-endpoints";
    case ErrorKind::kOpenPath: return "open-path";
    case ErrorKind::kDegenerateArc: return "degenerate-arc";
    case ErrorKind::kAdiabaticity: return "adiabaticity-violated";
    case ErrorKind::kDegeneracy: return "degeneracy";
    case ErrorKind::kGauge: return "gauge";
    case ErrorKind::kStepTooLarge: return "step-too-large";
    case ErrorKind::kSingularity: return "singularity";
    case ErrorKind::kDegeneracyCollapse: return "degeneracy-collapse";
    case ErrorKind::kResolution: return "resolution";
    case ErrorKind::kUndefinedPhase: return "undefined-phase";
    case ErrorKind::kSynthesis: return "synthesis";
  }
  return "unknown";
}

namespace {

constexpr double kNormAcceptance = 1e-9;
constexpr double kDensityTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kUnitaryTol = 1e-10;

}  // namespace

PureState::PureState(CVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() < 2) {
    throw Error(ErrorKind::kDimension, "pure state needs dimension >= 2");
  }
  const double n = amps_.norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormAcceptance) {
    throw Error(ErrorKind::kDomain,
                "state norm " + std::to_string(n) + " is not 1");
  }
  amps_ /= n;
}

PureState PureState::normalized(const CVector& amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorKind::kDomain, "cannot normalize a zero vector");
  }
  return PureState(amplitudes / n);
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw Error(ErrorKind::kDimension, "basis index out of range");
  }
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v));
}

PureState PureState::rephased(double alpha) const {
  return PureState(amps_ * std::polar(1.0, alpha));
}

DensityMatrix::DensityMatrix(CMatrix entries) : rho_(std::move(entries)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() < 1) {
    throw Error(ErrorKind::kDimension, "density matrix must be square");
  }
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kDensityTol) {
    throw Error(ErrorKind::kValidation, "density matrix is not Hermitian");
  }
  if (std::abs(rho_.trace() - Complex(1.0)) > kDensityTol) {
    throw Error(ErrorKind::kValidation, "density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPsdTol) {
    throw Error(ErrorKind::kValidation, "density matrix has a negative eigenvalue");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  CMatrix p = psi.projector();
  p = 0.5 * (p + p.adjoint()).eval();
  return DensityMatrix(std::move(p));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityMatrix(CMatrix::Identity(n, n) / static_cast<double>(dim));
}

UnitaryOp::UnitaryOp(CMatrix entries) : u_(std::move(entries)) {
  if (u_.rows() != u_.cols() || u_.rows() < 1) {
    throw Error(ErrorKind::kDimension, "unitary must be square");
  }
  const auto n = u_.rows();
  const double defect = (u_.adjoint() * u_ - CMatrix::Identity(n, n)).norm();
  if (!(defect <= kUnitaryTol)) {
    throw Error(ErrorKind::kValidation,
                "matrix is not unitary (defect " + std::to_string(defect) + ")");
  }
}

UnitaryOp UnitaryOp::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return UnitaryOp(CMatrix::Identity(n, n));
}

UnitaryOp UnitaryOp::adjoint() const { return UnitaryOp(u_.adjoint()); }

UnitaryOp operator*(const UnitaryOp& a, const UnitaryOp& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::kDimension, "unitary product dimension mismatch");
  }
  return UnitaryOp(a.u_ * b.u_);
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector BlochVector::spherical(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

namespace pauli {

CMatrix x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

CMatrix y() {
  CMatrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

CMatrix z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace pauli

DensityMatrix density_from_bloch(const BlochVector& s) {
  if (s.norm() > 1.0 + 1e-10) {
    throw Error(ErrorKind::kDomain, "point outside Bloch ball");
  }
  CMatrix rho = 0.5 * (CMatrix::Identity(2, 2) + s.x * pauli::x() +
                       s.y * pauli::y() + s.z * pauli::z());
  // Rounding of |s| slightly above 1 can leave an eigenvalue at -1e-16.
  return DensityMatrix(std::move(rho));
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw Error(ErrorKind::kDimension, "Bloch vector needs a 2x2 density matrix");
  }
  const CMatrix& m = rho.matrix();
  return {(pauli::x() * m).trace().real(), (pauli::y() * m).trace().real(),
          (pauli::z() * m).trace().real()};
}

BlochVector bloch_from_state(const PureState& psi) {
  if (psi.dim() != 2) {
    throw Error(ErrorKind::kDimension, "Bloch vector needs a qubit state");
  }
  const Complex a = psi[0];
  const Complex b = psi[1];
  const Complex ab = std::conj(a) * b;
  return {2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b)};
}

PureState state_from_bloch(const BlochVector& s) {
  const double n = s.norm();
  if (std::abs(n - 1.0) > 1e-9) {
    throw Error(ErrorKind::kDomain, "pure qubit state needs a unit Bloch vector");
  }
  const double theta = std::acos(std::clamp(s.z / n, -1.0, 1.0));
  const double phi = (std::abs(s.x) + std::abs(s.y) > 0.0) ? std::atan2(s.y, s.x) : 0.0;
  CVector v(2);
  v << std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), phi);
  return PureState(std::move(v));
}

Complex overlap(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::kDimension, "overlap dimension mismatch");
  }
  return a.amplitudes().dot(b.amplitudes());
}

PureState apply(const UnitaryOp& u, const PureState& psi) {
  if (u.dim() != psi.dim()) {
    throw Error(ErrorKind::kDimension, "operator/state dimension mismatch");
  }
  return PureState(u.matrix() * psi.amplitudes());
}

double wrap_phase(double radians) {
  double r = std::remainder(radians, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

}  // namespace geophase
