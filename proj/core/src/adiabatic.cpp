#include "geophase/adiabatic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "geophase/linalg.hpp"

namespace geophase {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kGapFloor = 1e-9;

}  // namespace

HamiltonianPath::HamiltonianPath(std::function<CMatrix(double)> evaluator, double duration,
                                 bool closed)
    : evaluator_(std::move(evaluator)), duration_(duration), closed_(closed) {
  if (!(duration_ > 0.0)) {
    throw Error(ErrorKind::kInput, "Hamiltonian path duration must be positive");
  }
  const CMatrix h0 = at(0.0);
  dim_ = static_cast<std::size_t>(h0.rows());
  if (closed_) {
    const CMatrix h1 = at(duration_);
    if ((h1 - h0).cwiseAbs().maxCoeff() > kHermitianTol) {
      throw Error(ErrorKind::kValidation, "closed Hamiltonian path has H(0) != H(T)");
    }
  }
}

CMatrix HamiltonianPath::at(double t) const {
  CMatrix h = evaluator_(t);
  if (!linalg::is_hermitian(h, kHermitianTol)) {
    throw Error(ErrorKind::kValidation,
                "Hamiltonian is not Hermitian at t = " + std::to_string(t));
  }
  return h;
}

Trajectory evolve_schrodinger(const HamiltonianPath& h, const PureState& psi0,
                              std::size_t steps) {
  if (steps < 2) throw Error(ErrorKind::kInput, "Schrodinger integration needs >= 2 steps");
  if (psi0.dim() != h.dim()) {
    throw Error(ErrorKind::kDimension, "initial state and Hamiltonian dimensions differ");
  }
  const double dt = h.duration() / static_cast<double>(steps);
  Trajectory out;
  out.times.reserve(steps + 1);
  out.states.reserve(steps + 1);
  out.times.push_back(0.0);
  out.states.push_back(psi0);
  CVector v = psi0.amplitudes();
  for (std::size_t k = 0; k < steps; ++k) {
    const double t_mid = (static_cast<double>(k) + 0.5) * dt;
    v = linalg::expm_hermitian(h.at(t_mid), dt) * v;
    out.max_norm_drift = std::max(out.max_norm_drift, std::abs(v.norm() - 1.0));
    out.times.push_back(static_cast<double>(k + 1) * dt);
    out.states.emplace_back(v);
  }
  return out;
}

PhaseDecomposition phase_decomposition(const Trajectory& trajectory, const HamiltonianPath& h,
                                       std::size_t band, const AdiabaticSettings& settings) {
  const auto& times = trajectory.times;
  const auto& states = trajectory.states;
  if (times.size() != states.size() || times.size() < 2) {
    throw Error(ErrorKind::kInput, "trajectory needs >= 2 matching samples");
  }
  if (band >= h.dim()) throw Error(ErrorKind::kInput, "band index out of range");

  PhaseDecomposition out;
  double worst_time = 0.0;
  std::vector<double> energies(times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.at(times[k]));
    const auto b = static_cast<Eigen::Index>(band);
    energies[k] = es.eigenvalues()(b);
    const double pop = std::norm(es.eigenvectors().col(b).dot(states[k].amplitudes()));
    if (pop < out.min_population) {
      out.min_population = pop;
      worst_time = times[k];
    }
  }
  if (out.min_population < settings.population_threshold) {
    throw Error(ErrorKind::kAdiabaticity,
                "adiabaticity violated: band population " +
                    std::to_string(out.min_population) + " at t = " + std::to_string(worst_time));
  }
  double integral = 0.0;
  for (std::size_t k = 0; k + 1 < times.size(); ++k) {
    integral += 0.5 * (energies[k] + energies[k + 1]) * (times[k + 1] - times[k]);
  }
  out.total = std::arg(overlap(states.front(), states.back()));
  out.dynamical = -integral;
  out.geometric = wrap_phase(out.total - out.dynamical);
  return out;
}

EigenFrame::EigenFrame(std::vector<FrameSample> samples, bool closed)
    : samples_(std::move(samples)), closed_(closed) {
  if (samples_.empty()) throw Error(ErrorKind::kInput, "eigenframe needs samples");
  const auto rows = samples_.front().vectors.rows();
  const auto cols = samples_.front().vectors.cols();
  for (std::size_t k = 0; k < samples_.size(); ++k) {
    const auto& f = samples_[k];
    if (f.vectors.rows() != rows || f.vectors.cols() != cols) {
      throw Error(ErrorKind::kDimension, "eigenframe samples differ in shape");
    }
    if (k > 0 && !(f.s > samples_[k - 1].s)) {
      throw Error(ErrorKind::kInput, "eigenframe parameters must increase");
    }
    const CMatrix gram = f.vectors.adjoint() * f.vectors;
    if ((gram - CMatrix::Identity(cols, cols)).cwiseAbs().maxCoeff() > 1e-10) {
      throw Error(ErrorKind::kValidation, "eigenframe columns are not orthonormal");
    }
  }
}

bool EigenFrame::continuous(std::size_t band) const {
  const auto b = static_cast<Eigen::Index>(band);
  for (std::size_t k = 0; k + 1 < samples_.size(); ++k) {
    if (samples_[k].vectors.col(b).dot(samples_[k + 1].vectors.col(b)).real() <= 0.0) {
      return false;
    }
  }
  return true;
}

EigenFrame EigenFrame::rephased(std::size_t band,
                                const std::function<double(double)>& alpha) const {
  auto copy = samples_;
  const auto b = static_cast<Eigen::Index>(band);
  for (auto& f : copy) f.vectors.col(b) *= std::polar(1.0, alpha(f.s));
  return EigenFrame(std::move(copy), closed_);
}

std::vector<PureState> EigenFrame::band_states(std::size_t band) const {
  std::vector<PureState> out;
  out.reserve(samples_.size());
  for (const auto& f : samples_) {
    out.emplace_back(CVector(f.vectors.col(static_cast<Eigen::Index>(band))));
  }
  return out;
}

EigenFrame eigen_frame(const HamiltonianPath& h, std::size_t steps, FrameGauge gauge) {
  if (steps < 1) throw Error(ErrorKind::kInput, "eigenframe needs >= 1 step");
  std::vector<FrameSample> samples;
  samples.reserve(steps + 1);
  std::vector<Eigen::Index> anchor;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = h.duration() * static_cast<double>(k) / static_cast<double>(steps);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h.at(t));
    FrameSample f{t, es.eigenvalues(), es.eigenvectors()};
    const auto n = f.vectors.cols();
    if (k == 0) {
      anchor.resize(static_cast<std::size_t>(n));
      for (Eigen::Index j = 0; j < n; ++j) {
        f.vectors.col(j).cwiseAbs().maxCoeff(&anchor[static_cast<std::size_t>(j)]);
      }
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      Complex ref;
      if (gauge == FrameGauge::kParallel) {
        if (k == 0) continue;
        ref = f.vectors.col(j).dot(samples.back().vectors.col(j));
      } else {
        ref = std::conj(f.vectors(anchor[static_cast<std::size_t>(j)], j));
      }
      if (std::abs(ref) < 1e-9) {
        throw Error(ErrorKind::kDegeneracy,
                    "eigenvector gauge undefined at t = " + std::to_string(t) +
                        " (zero overlap); band crossing or gauge singularity");
      }
      f.vectors.col(j) *= ref / std::abs(ref);
    }
    samples.push_back(std::move(f));
  }
  return EigenFrame(std::move(samples), h.closed());
}

std::vector<ConnectionSample> berry_connection(const EigenFrame& frame, std::size_t band) {
  const auto& ss = frame.samples();
  if (band >= frame.bands()) throw Error(ErrorKind::kInput, "band index out of range");
  if (ss.size() < 2) throw Error(ErrorKind::kInput, "connection needs >= 2 samples");
  const auto b = static_cast<Eigen::Index>(band);
  for (const auto& f : ss) {
    const auto n = f.energies.size();
    if (n == 0) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != b && std::abs(f.energies(j) - f.energies(b)) < kGapFloor) {
        throw Error(ErrorKind::kDegeneracy,
                    "band crossing at s = " + std::to_string(f.s) +
                        "; use the holonomy module for degenerate subspaces");
      }
    }
  }
  std::vector<ConnectionSample> out;
  out.reserve(ss.size() - 1);
  for (std::size_t k = 0; k + 1 < ss.size(); ++k) {
    const Complex o = ss[k].vectors.col(b).dot(ss[k + 1].vectors.col(b));
    if (std::abs(o) < 1e-9) {
      throw Error(ErrorKind::kDegeneracy, "frame discontinuity: zero overlap between samples");
    }
    const double ds = ss[k + 1].s - ss[k].s;
    out.push_back({0.5 * (ss[k].s + ss[k + 1].s), -std::arg(o) / ds});
  }
  return out;
}

PhaseValue berry_phase(const EigenFrame& frame, std::size_t band) {
  if (!frame.closed()) {
    throw Error(ErrorKind::kOpenPath, "Berry phase needs a closed loop");
  }
  const auto& ss = frame.samples();
  if (ss.size() < 2) return PhaseValue(0.0);
  const auto conn = berry_connection(frame, band);
  double acc = 0.0;
  for (std::size_t k = 0; k < conn.size(); ++k) {
    acc += conn[k].value * (ss[k + 1].s - ss[k].s);
  }
  const auto b = static_cast<Eigen::Index>(band);
  acc -= std::arg(ss.back().vectors.col(b).dot(ss.front().vectors.col(b)));
  return PhaseValue(acc);
}

HamiltonianPath spin_half_cone_hamiltonian(double theta, double duration, double field) {
  const CMatrix sx = pauli::x();
  const CMatrix sy = pauli::y();
  const CMatrix sz = pauli::z();
  auto eval = [=](double t) -> CMatrix {
    const double phi = 2.0 * kPi * t / duration;
    const BlochVector n = BlochVector::spherical(theta, phi);
    return field * (n.x * sx + n.y * sy + n.z * sz);
  };
  // cos/sin of 2 pi are not exactly (1, 0), so closure is checked to 1e-12 only.
  return HamiltonianPath(eval, duration, true);
}

ConeReport spin_half_cone_experiment(double theta, double duration, std::size_t steps,
                                     double field, const AdiabaticSettings& settings) {
  if (!(theta > 0.0 && theta < kPi)) {
    throw Error(ErrorKind::kDomain, "cone polar angle must lie in (0, pi)");
  }
  if (!(duration > 0.0)) throw Error(ErrorKind::kDomain, "duration must be positive");
  constexpr std::size_t kUpper = 1;
  const HamiltonianPath h = spin_half_cone_hamiltonian(theta, duration, field);

  ConeReport r;
  r.theta = theta;
  r.duration = duration;
  r.solid_angle = 2.0 * kPi * (1.0 - std::cos(theta));
  r.expected = wrap_phase(-0.5 * r.solid_angle);

  const EigenFrame frame = eigen_frame(h, steps, FrameGauge::kParallel);
  r.berry = berry_phase(frame, kUpper).radians();

  auto eig = frame.band_states(kUpper);
  eig.pop_back();  // the last sample repeats the first ray
  r.pancharatnam = (-pancharatnam_phase(eig)).radians();

  const PureState psi0 = eig.front();
  const Trajectory traj = evolve_schrodinger(h, psi0, steps);
  r.schrodinger = phase_decomposition(traj, h, kUpper, settings);
  r.adiabatic_residual = 1.0 - r.schrodinger.min_population;

  r.max_pairwise_gap = std::max({phase_distance(r.berry, r.pancharatnam),
                                 phase_distance(r.berry, r.schrodinger.geometric),
                                 phase_distance(r.pancharatnam, r.schrodinger.geometric)});
  return r;
}

}  // namespace geophase
