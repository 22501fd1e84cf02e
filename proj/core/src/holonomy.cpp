#include "geophase/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "geophase/adiabatic.hpp"
#include "geophase/linalg.hpp"

namespace geophase {

namespace {

constexpr double kGramTol = 1e-10;

double smallest_singular_value(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues().minCoeff();
}

}  // namespace

DegenerateFrame::DegenerateFrame(std::vector<DegenerateSample> samples)
    : samples_(std::move(samples)) {
  if (samples_.empty()) throw Error(ErrorKind::kInput, "degenerate frame needs samples");
  const auto rows = samples_.front().basis.rows();
  const auto cols = samples_.front().basis.cols();
  if (cols < 1 || rows < cols) throw Error(ErrorKind::kDimension, "frame must be n x k, k <= n");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& b = samples_[i].basis;
    if (b.rows() != rows || b.cols() != cols) {
      throw Error(ErrorKind::kDimension, "frame samples differ in shape");
    }
    if (i > 0 && !(samples_[i].s > samples_[i - 1].s)) {
      throw Error(ErrorKind::kInput, "frame parameters must increase");
    }
    const CMatrix gram = b.adjoint() * b;
    if ((gram - CMatrix::Identity(cols, cols)).cwiseAbs().maxCoeff() > kGramTol) {
      throw Error(ErrorKind::kValidation, "frame columns are not orthonormal");
    }
  }
}

DegenerateFrame DegenerateFrame::regauged(const CMatrix& g) const {
  auto copy = samples_;
  for (auto& s : copy) s.basis = s.basis * g;
  return DegenerateFrame(std::move(copy));
}

WZConnection wz_connection(const DegenerateFrame& frame) {
  const auto& ss = frame.samples();
  if (ss.size() < 2) throw Error(ErrorKind::kInput, "connection needs >= 2 frame samples");
  WZConnection out;
  out.steps.reserve(ss.size() - 1);
  for (std::size_t k = 0; k + 1 < ss.size(); ++k) {
    const CMatrix o = ss[k].basis.adjoint() * ss[k + 1].basis;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(linalg::hermitian_part(o), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= 0.0) {
      throw Error(ErrorKind::kGauge,
                  "frame discontinuity at s = " + std::to_string(ss[k].s) +
                      ": overlap has no positive-definite Hermitian part");
    }
    const double ds = ss[k + 1].s - ss[k].s;
    const auto n = o.rows();
    CMatrix a = kI * (o - CMatrix::Identity(n, n)) / ds;
    out.hermiticity_defect =
        std::max(out.hermiticity_defect, (a - a.adjoint()).cwiseAbs().maxCoeff());
    out.steps.push_back({0.5 * (ss[k].s + ss[k + 1].s), ds, linalg::hermitian_part(a)});
  }
  return out;
}

HolonomyMatrix::HolonomyMatrix(CMatrix u) : u_(std::move(u)) {
  const auto n = u_.rows();
  if (n != u_.cols() || n < 1) throw Error(ErrorKind::kDimension, "holonomy must be square");
  if ((u_.adjoint() * u_ - CMatrix::Identity(n, n)).norm() > 1e-9) {
    throw Error(ErrorKind::kValidation, "holonomy is not unitary");
  }
}

HolonomyMatrix path_ordered_exp(const WZConnection& a) {
  if (a.steps.empty()) throw Error(ErrorKind::kInput, "empty connection");
  const auto n = a.steps.front().a.rows();
  CMatrix u = CMatrix::Identity(n, n);
  for (const auto& step : a.steps) {
    u = linalg::expm_hermitian(step.a, -step.ds) * u;
  }
  return HolonomyMatrix(std::move(u));
}

HolonomyMatrix closed_loop_holonomy(const DegenerateFrame& frame) {
  const auto& ss = frame.samples();
  const CMatrix& first = ss.front().basis;
  const CMatrix& last = ss.back().basis;
  const CMatrix proj_first = first * first.adjoint();
  const CMatrix proj_last = last * last.adjoint();
  if ((proj_first - proj_last).cwiseAbs().maxCoeff() > 1e-6) {
    throw Error(ErrorKind::kOpenPath, "frame does not return to its initial subspace");
  }
  // The subspace is the same, so Phi_0^dagger Phi_N is unitary up to rounding.
  const CMatrix closing = linalg::polar_unitary(first.adjoint() * last);
  return HolonomyMatrix(closing * path_ordered_exp(wz_connection(frame)).matrix());
}

HolonomyMatrix discrete_holonomy(std::span<const CMatrix> loop) {
  if (loop.size() < 2) throw Error(ErrorKind::kInput, "loop needs >= 2 frames");
  CMatrix current = loop.front();
  for (std::size_t k = 1; k <= loop.size(); ++k) {
    const CMatrix& next = loop[k % loop.size()];
    const CMatrix o = next.adjoint() * current;
    if (smallest_singular_value(o) < 1e-9) {
      throw Error(ErrorKind::kGauge, "consecutive frames are orthogonal");
    }
    current = next * linalg::polar_unitary(o);
  }
  return HolonomyMatrix(linalg::polar_unitary(loop.front().adjoint() * current));
}

double rotation_angle(const CMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw Error(ErrorKind::kDimension, "rotation angle needs a 2x2 matrix");
  }
  return std::atan2(u(1, 0).real() - u(0, 1).real(), u(0, 0).real() + u(1, 1).real());
}

CMatrix field_strength_plaquette(const std::function<CMatrix(double, double)>& frame_family,
                                 std::pair<double, double> point, double delta) {
  if (!(delta > 0.0)) throw Error(ErrorKind::kInput, "plaquette step must be positive");
  const auto [x, y] = point;
  const double h = 0.5 * delta;
  const std::vector<CMatrix> corners{frame_family(x - h, y - h), frame_family(x + h, y - h),
                                     frame_family(x + h, y + h), frame_family(x - h, y + h)};
  const HolonomyMatrix w = discrete_holonomy(corners);
  return linalg::log_unitary(w.matrix(), 1e-3) / (delta * delta);
}

CMatrix usb_hamiltonian(double p, double q, double s) {
  return usb_hamiltonian(Complex(p), Complex(q), Complex(s));
}

CMatrix usb_hamiltonian(Complex p, Complex q, Complex s) {
  CMatrix h = CMatrix::Zero(4, 4);
  h(0, 1) = p;
  h(1, 2) = s;
  h(1, 3) = q;
  h(1, 0) = std::conj(p);
  h(2, 1) = std::conj(s);
  h(3, 1) = std::conj(q);
  return h;
}

PulseSchedule::PulseSchedule(std::function<Controls(double)> controls, double duration,
                             bool closed, double gap_floor)
    : controls_(std::move(controls)), duration_(duration), closed_(closed), gap_floor_(gap_floor) {
  if (!(duration_ > 0.0)) throw Error(ErrorKind::kInput, "schedule duration must be positive");
  if (!(gap_floor_ > 0.0)) throw Error(ErrorKind::kInput, "gap floor must be positive");
  if (closed_) {
    const Controls a = controls_(0.0);
    const Controls b = controls_(1.0);
    if (std::abs(a.p - b.p) > 1e-12 || std::abs(a.q - b.q) > 1e-12 ||
        std::abs(a.s - b.s) > 1e-12) {
      throw Error(ErrorKind::kValidation, "closed schedule endpoints differ");
    }
  }
}

PulseSchedule PulseSchedule::reversed() const {
  auto f = controls_;
  return PulseSchedule([f](double u) { return f(1.0 - u); }, duration_, closed_, gap_floor_);
}

PulseSchedule PulseSchedule::with_duration(double duration) const {
  return PulseSchedule(controls_, duration, closed_, gap_floor_);
}

PulseSchedule PulseSchedule::eased() const {
  auto f = controls_;
  return PulseSchedule(
      [f](double u) { return f(u - std::sin(2.0 * kPi * u) / (2.0 * kPi)); }, duration_, closed_,
      gap_floor_);
}

PulseSchedule PulseSchedule::circle_ps(double p0, double s0, double radius, double q,
                                       double duration) {
  return PulseSchedule(
      [=](double u) {
        const double a = 2.0 * kPi * u;
        return Controls{p0 + radius * std::cos(a), q, s0 + radius * std::sin(a)};
      },
      duration, true);
}

PulseSchedule PulseSchedule::from_samples(std::vector<Controls> samples, double duration,
                                          bool closed) {
  if (samples.size() < 2) throw Error(ErrorKind::kInput, "schedule needs >= 2 samples");
  auto data = std::make_shared<const std::vector<Controls>>(std::move(samples));
  return PulseSchedule(
      [data](double u) {
        const auto& d = *data;
        const double x = std::clamp(u, 0.0, 1.0) * static_cast<double>(d.size() - 1);
        const auto i = std::min(static_cast<std::size_t>(x), d.size() - 2);
        const double w = x - static_cast<double>(i);
        return Controls{(1.0 - w) * d[i].p + w * d[i + 1].p, (1.0 - w) * d[i].q + w * d[i + 1].q,
                        (1.0 - w) * d[i].s + w * d[i + 1].s};
      },
      duration, closed);
}

CMatrix canonical_dark_frame(const Controls& c) {
  const Eigen::Vector3d n(c.p, c.s, c.q);  // levels 1, 3, 4
  const Eigen::Vector3d a = n.cross(Eigen::Vector3d::UnitZ());
  if (a.norm() < 1e-12) {
    throw Error(ErrorKind::kSingularity, "dark frame undefined at P = S = 0");
  }
  const Eigen::Vector3d phi1 = a.normalized();
  const Eigen::Vector3d phi2 = n.normalized().cross(phi1);
  CMatrix f = CMatrix::Zero(4, 2);
  f(0, 0) = phi1(0);
  f(2, 0) = phi1(1);
  f(3, 0) = phi1(2);
  f(0, 1) = phi2(0);
  f(2, 1) = phi2(1);
  f(3, 1) = phi2(2);
  return f;
}

DegenerateFrame null_space_frame(const std::function<CMatrix(double)>& family, std::size_t steps,
                                 const CMatrix& reference, FrameAlignment alignment,
                                 double gap_floor) {
  if (steps < 1) throw Error(ErrorKind::kInput, "frame needs >= 1 step");
  const auto k = reference.cols();
  std::vector<DegenerateSample> samples;
  samples.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(steps);
    const CMatrix h = family(u);
    if (h.rows() != reference.rows()) {
      throw Error(ErrorKind::kDimension, "reference frame and Hamiltonian dimensions differ");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const Eigen::VectorXd& w = es.eigenvalues();
    std::vector<Eigen::Index> order(static_cast<std::size_t>(w.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index a, Eigen::Index b) { return std::abs(w(a)) < std::abs(w(b)); });
    if (static_cast<Eigen::Index>(order.size()) <= k) {
      throw Error(ErrorKind::kDimension, "degenerate subspace fills the whole space");
    }
    const double gap = std::abs(w(order[static_cast<std::size_t>(k)]));
    if (gap < gap_floor) {
      throw Error(ErrorKind::kDegeneracyCollapse,
                  "bright-state gap " + std::to_string(gap) + " below floor at u = " +
                      std::to_string(u));
    }
    CMatrix null(h.rows(), k);
    for (Eigen::Index j = 0; j < k; ++j) null.col(j) = es.eigenvectors().col(order[static_cast<std::size_t>(j)]);

    const CMatrix& target =
        (i == 0 || alignment == FrameAlignment::kReference) ? reference : samples.back().basis;
    const CMatrix o = null.adjoint() * target;
    if (smallest_singular_value(o) < 1e-3) {
      throw Error(ErrorKind::kGauge,
                  "alignment overlap is singular at u = " + std::to_string(u) +
                      (alignment == FrameAlignment::kReference ? "; try sequential alignment"
                                                               : ""));
    }
    samples.push_back({u, null * linalg::polar_unitary(o)});
  }
  return DegenerateFrame(std::move(samples));
}

DegenerateFrame usb_dark_frame(const PulseSchedule& schedule, std::size_t steps,
                               FrameAlignment alignment) {
  const CMatrix reference = canonical_dark_frame(schedule.at(0.0));
  return null_space_frame(
      [&schedule](double u) {
        const Controls c = schedule.at(u);
        return usb_hamiltonian(c.p, c.q, c.s);
      },
      steps, reference, alignment, schedule.gap_floor());
}

HolonomyMatrix usb_holonomy(const PulseSchedule& schedule, std::size_t steps,
                            FrameAlignment alignment) {
  if (!schedule.closed()) throw Error(ErrorKind::kOpenPath, "holonomy needs a closed schedule");
  return closed_loop_holonomy(usb_dark_frame(schedule, steps, alignment));
}

double usb_gamma_polygon(std::span<const Controls> polygon, double singularity_floor) {
  if (polygon.size() < 2) throw Error(ErrorKind::kInput, "polygon needs >= 2 points");
  auto form = [singularity_floor](const Controls& c) {
    const double rho2 = c.p * c.p + c.s * c.s;
    if (rho2 < singularity_floor * singularity_floor) {
      throw Error(ErrorKind::kSingularity, "loop passes through P = S = 0");
    }
    const double f = c.q / (rho2 * std::sqrt(rho2 + c.q * c.q));
    return std::pair<double, double>{f * c.s, -f * c.p};  // coefficients of dP, dS
  };
  double acc = 0.0;
  auto prev = form(polygon[0]);
  for (std::size_t k = 0; k + 1 < polygon.size(); ++k) {
    const auto next = form(polygon[k + 1]);
    acc += 0.5 * (prev.first + next.first) * (polygon[k + 1].p - polygon[k].p) +
           0.5 * (prev.second + next.second) * (polygon[k + 1].s - polygon[k].s);
    prev = next;
  }
  return acc;
}

double usb_gamma_closed_form(const PulseSchedule& schedule, std::size_t quadrature_steps,
                             double singularity_floor) {
  if (!schedule.closed()) throw Error(ErrorKind::kOpenPath, "closed form needs a closed loop");
  if (quadrature_steps < 2) throw Error(ErrorKind::kInput, "need >= 2 quadrature steps");
  std::vector<Controls> poly;
  poly.reserve(quadrature_steps + 1);
  for (std::size_t k = 0; k <= quadrature_steps; ++k) {
    poly.push_back(schedule.at(static_cast<double>(k) / static_cast<double>(quadrature_steps)));
  }
  return usb_gamma_polygon(poly, singularity_floor);
}

DarkEvolution usb_dark_evolution(const PulseSchedule& schedule, double duration,
                                 std::size_t steps) {
  if (!(duration > 0.0)) throw Error(ErrorKind::kInput, "duration must be positive");
  const HamiltonianPath h(
      [&schedule, duration](double t) {
        const Controls c = schedule.at(t / duration);
        return usb_hamiltonian(c.p, c.q, c.s);
      },
      duration, schedule.closed());
  const CMatrix frame0 = canonical_dark_frame(schedule.at(0.0));

  DarkEvolution out;
  out.projected = CMatrix::Zero(2, 2);
  for (Eigen::Index b = 0; b < 2; ++b) {
    const Trajectory traj = evolve_schrodinger(h, PureState(CVector(frame0.col(b))), steps);
    const CVector c = frame0.adjoint() * traj.states.back().amplitudes();
    out.projected.col(b) = c;
    out.leakage = std::max(out.leakage, 1.0 - c.squaredNorm());
  }
  return out;
}

FullEvolutionReport usb_full_evolution_check(const PulseSchedule& schedule, double duration,
                                             std::size_t steps, std::size_t holonomy_steps) {
  if (!schedule.closed()) throw Error(ErrorKind::kOpenPath, "evolution check needs a closed loop");
  const DarkEvolution ev = usb_dark_evolution(schedule, duration, steps);
  FullEvolutionReport r;
  r.duration = duration;
  r.projected = ev.projected;
  r.leakage = ev.leakage;
  r.holonomy = usb_holonomy(schedule, holonomy_steps).matrix();
  r.distance = (r.projected - r.holonomy).norm();
  r.projected_angle = rotation_angle(r.projected);
  r.holonomy_angle = rotation_angle(r.holonomy);
  return r;
}

}  // namespace geophase
