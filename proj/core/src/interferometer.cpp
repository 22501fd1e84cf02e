#include "geophase/interferometer.hpp"

#include <cmath>

namespace geophase {

namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix identity(std::size_t n) {
  const auto k = static_cast<Eigen::Index>(n);
  return CMatrix::Identity(k, k);
}

CMatrix raw_output(double chi, const CMatrix& internal, const CMatrix& rho0) {
  const auto n = static_cast<std::size_t>(rho0.rows());
  if (internal.rows() != rho0.rows() || internal.cols() != rho0.cols()) {
    throw Error(ErrorKind::kDimension, "internal operator and rho0 dimensions differ");
  }
  CMatrix in0 = CMatrix::Zero(2, 2);
  in0(0, 0) = 1.0;
  const CMatrix rho_in = kron(in0, rho0);
  const CMatrix t = mz_beam_splitter(n) * mz_mirrors(n) * composite_operator(chi, internal) *
                    mz_beam_splitter(n);
  return t * rho_in * t.adjoint();
}

double port0_trace(const CMatrix& out, Eigen::Index n) {
  return out.topLeftCorner(n, n).trace().real();
}

}  // namespace

CMatrix composite_operator(double chi, const CMatrix& internal) {
  if (internal.rows() != internal.cols()) {
    throw Error(ErrorKind::kDimension, "internal operator must be square");
  }
  const auto n = static_cast<std::size_t>(internal.rows());
  CMatrix p0 = CMatrix::Zero(2, 2);
  CMatrix p1 = CMatrix::Zero(2, 2);
  p0(0, 0) = std::polar(1.0, chi);
  p1(1, 1) = 1.0;
  return kron(p1, internal) + kron(p0, identity(n));
}

UnitaryOp composite_unitary(const MZConfig& cfg) {
  if (static_cast<std::size_t>(cfg.internal.rows()) != cfg.internal_dim()) {
    throw Error(ErrorKind::kDimension, "internal operator and rho0 dimensions differ");
  }
  return UnitaryOp(composite_operator(cfg.chi, cfg.internal));
}

CMatrix mz_beam_splitter(std::size_t internal_dim) {
  CMatrix b(2, 2);
  b << 1.0, 1.0, 1.0, -1.0;
  return kron(b / std::sqrt(2.0), identity(internal_dim));
}

CMatrix mz_mirrors(std::size_t internal_dim) {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return kron(m, identity(internal_dim));
}

DensityMatrix mz_output(const MZConfig& cfg) {
  // Validates unitarity of the internal operator.
  (void)composite_unitary(cfg);
  CMatrix out = raw_output(cfg.chi, cfg.internal, cfg.rho0.matrix());
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(std::move(out));
}

double intensity(const MZConfig& cfg) {
  const CMatrix out = raw_output(cfg.chi, cfg.internal, cfg.rho0.matrix());
  return port0_trace(out, cfg.internal.rows());
}

FringeScan::FringeScan(std::vector<FringePoint> points) : points_(std::move(points)) {
  for (std::size_t k = 1; k < points_.size(); ++k) {
    if (!(points_[k].chi > points_[k - 1].chi)) {
      throw Error(ErrorKind::kInput, "fringe scan chi must be strictly increasing");
    }
  }
}

FringeScan fringe_scan(const MZConfig& cfg, std::size_t count) {
  if (count < 1) throw Error(ErrorKind::kInput, "fringe scan needs points");
  std::vector<FringePoint> pts;
  pts.reserve(count);
  MZConfig c = cfg;
  for (std::size_t k = 0; k < count; ++k) {
    c.chi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(count);
    pts.push_back({c.chi, intensity(c)});
  }
  return FringeScan(std::move(pts));
}

PhaseVisibility extract_phase_visibility(const FringeScan& scan) {
  auto pts = scan.points();
  if (pts.size() < 8) throw Error(ErrorKind::kInput, "fringe fit needs >= 8 samples");
  const double span = pts.back().chi - pts.front().chi;
  const double spacing = span / static_cast<double>(pts.size() - 1);
  if (span + spacing < 2.0 * kPi * (1.0 - 1e-9)) {
    throw Error(ErrorKind::kInput, "fringe scan must cover a full 2 pi period");
  }
  Eigen::MatrixXd design(static_cast<Eigen::Index>(pts.size()), 3);
  Eigen::VectorXd y(static_cast<Eigen::Index>(pts.size()));
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    design(i, 0) = 1.0;
    design(i, 1) = std::cos(pts[k].chi);
    design(i, 2) = std::sin(pts[k].chi);
    y(i) = pts[k].intensity;
  }
  const Eigen::Vector3d coef = design.colPivHouseholderQr().solve(y);
  const double a = coef(0);
  const double b = std::hypot(coef(1), coef(2));
  if (!(a > 0.0) || b / a < 1e-9) {
    throw Error(ErrorKind::kUndefinedPhase, "zero visibility: fringe phase is undefined");
  }
  return {PhaseValue(std::atan2(coef(2), coef(1))), b / a};
}

PhaseValue projective_sequence_phase(std::span<const PureState> states,
                                     std::size_t scan_points) {
  if (states.size() < 2) throw Error(ErrorKind::kInput, "sequence needs >= 2 states");
  const std::size_t n = states.size();
  const auto dim = static_cast<Eigen::Index>(states.front().dim());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& a = states[k];
    const auto& b = states[(k + 1) % n];
    if (a.dim() != b.dim()) throw Error(ErrorKind::kDimension, "sequence mixes dimensions");
    if (std::abs(overlap(a, b)) <= 1e-9) {
      throw Error(ErrorKind::kOrthogonalLink,
                  "orthogonal link: phase undefined through orthogonal states");
    }
  }
  // Projector chain P_n ... P_2 P_1; adjacent outer products share a state,
  // so the chain keeps every overlap <psi_{k+1}|psi_k>.
  CMatrix u = CMatrix::Identity(dim, dim);
  for (std::size_t k = 0; k < n; ++k) {
    u = states[k].projector() * u;
  }
  const CMatrix rho0 = states.front().projector();
  std::vector<FringePoint> pts;
  pts.reserve(scan_points);
  for (std::size_t k = 0; k < scan_points; ++k) {
    const double chi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(scan_points);
    pts.push_back({chi, port0_trace(raw_output(chi, u, rho0), dim)});
  }
  const PhaseVisibility pv = extract_phase_visibility(FringeScan(std::move(pts)));
  return -pv.phase;
}

}  // namespace geophase
