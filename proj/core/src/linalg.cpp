#include "geophase/linalg.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace geophase::linalg {

CMatrix expm_hermitian(const CMatrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const Eigen::VectorXd& w = es.eigenvalues();
  CVector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    phases(i) = std::polar(1.0, -w(i) * t);
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix log_unitary(const CMatrix& u, double branch_guard) {
  // A unitary is normal, so its Schur form is diagonal up to rounding.
  Eigen::ComplexSchur<CMatrix> schur(u);
  const CMatrix& t = schur.matrixT();
  const CMatrix& z = schur.matrixU();
  CVector logs(t.rows());
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    const Complex lambda = t(i, i);
    const double angle = std::arg(lambda);
    if (kPi - std::abs(angle) < branch_guard) {
      throw Error(ErrorKind::kStepTooLarge,
                  "holonomy eigenvalue at -1: logarithm branch undefined");
    }
    logs(i) = Complex(std::log(std::abs(lambda)), angle);
  }
  return z * logs.asDiagonal() * z.adjoint();
}

CMatrix polar_unitary(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

double gate_fidelity(const CMatrix& a, const CMatrix& b) {
  return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

double phase_insensitive_distance(const CMatrix& a, const CMatrix& b) {
  const Complex t = (b.adjoint() * a).trace();
  const Complex phase = std::abs(t) > 0.0 ? t / std::abs(t) : Complex(1.0);
  return (a - phase * b).norm();
}

bool is_hermitian(const CMatrix& m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace geophase::linalg
