#include "geophase/phase_abelian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace geophase {

namespace {

constexpr double kLinkFloor = 1e-9;

Complex checked_link(const PureState& a, const PureState& b, std::size_t k) {
  const Complex o = overlap(a, b);
  if (std::abs(o) <= kLinkFloor) {
    throw Error(ErrorKind::kOrthogonalLink,
                "orthogonal link at index " + std::to_string(k) +
                    ": phase undefined through orthogonal states");
  }
  return o;
}

Eigen::Vector3d slerp(const Eigen::Vector3d& a, const Eigen::Vector3d& b, double t) {
  const double c = std::clamp(a.dot(b), -1.0, 1.0);
  const double angle = std::acos(c);
  if (angle < 1e-15) return a;
  const double s = std::sin(angle);
  return (std::sin((1.0 - t) * angle) / s) * a + (std::sin(t * angle) / s) * b;
}

// Signed solid angle of the geodesic triangle (a, b, c).
double triangle_solid_angle(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                            const Eigen::Vector3d& c) {
  const double num = a.dot(b.cross(c));
  const double den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(num, den);
}

}  // namespace

double phase_distance(double a, double b) { return std::abs(wrap_phase(a - b)); }

StatePath::StatePath(std::vector<PathSample> samples, bool closed)
    : samples_(std::move(samples)), closed_(closed) {
  if (samples_.empty()) {
    throw Error(ErrorKind::kInput, "state path needs at least one sample");
  }
  const std::size_t dim = samples_.front().state.dim();
  for (std::size_t k = 0; k < samples_.size(); ++k) {
    if (samples_[k].state.dim() != dim) {
      throw Error(ErrorKind::kDimension, "state path mixes dimensions");
    }
    if (k > 0 && !(samples_[k].s > samples_[k - 1].s)) {
      throw Error(ErrorKind::kInput, "path parameters must be strictly increasing");
    }
  }
  if (closed_ && samples_.size() > 1) {
    const double m = std::abs(overlap(samples_.front().state, samples_.back().state));
    if (m <= 1.0 - 1e-8) {
      throw Error(ErrorKind::kInput, "closed path endpoints differ by more than a phase");
    }
  }
}

std::vector<PureState> StatePath::states() const {
  std::vector<PureState> out;
  out.reserve(samples_.size());
  for (const auto& p : samples_) out.push_back(p.state);
  return out;
}

StatePath StatePath::sample(const std::function<PureState(double)>& f, double s0,
                            double s1, std::size_t n, bool closed) {
  if (n < 1) throw Error(ErrorKind::kInput, "need at least one sample");
  std::vector<PathSample> samples;
  samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = n == 1 ? s0 : s0 + (s1 - s0) * static_cast<double>(k) /
                                            static_cast<double>(n - 1);
    samples.push_back({s, f(s)});
  }
  return StatePath(std::move(samples), closed);
}

StatePath StatePath::concatenate(std::span<const StatePath> pieces, bool closed) {
  std::vector<PathSample> out;
  for (const auto& piece : pieces) {
    auto ss = piece.samples();
    std::size_t start = 0;
    double shift = 0.0;
    if (!out.empty()) {
      if (std::abs(overlap(out.back().state, ss.front().state)) <= 1.0 - 1e-8) {
        throw Error(ErrorKind::kInput, "path pieces do not join");
      }
      start = 1;
      shift = out.back().s - ss.front().s;
    }
    for (std::size_t k = start; k < ss.size(); ++k) {
      out.push_back({ss[k].s + shift, ss[k].state});
    }
  }
  return StatePath(std::move(out), closed);
}

PhaseValue pancharatnam_phase(std::span<const PureState> states) {
  if (states.size() < 3) {
    throw Error(ErrorKind::kInput, "Pancharatnam phase needs at least 3 states");
  }
  Complex product(1.0);
  const std::size_t n = states.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex link = checked_link(states[k], states[(k + 1) % n], k);
    // Keep the running product O(1) so long sequences cannot underflow.
    product *= link / std::abs(link);
  }
  return PhaseValue(std::arg(product));
}

double parallel_transport_defect(const StatePath& path) {
  auto ss = path.samples();
  if (ss.size() < 2) {
    throw Error(ErrorKind::kInput, "transport defect needs at least 2 samples");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k + 1 < ss.size(); ++k) {
    const double ds = ss[k + 1].s - ss[k].s;
    worst = std::max(worst, std::abs(overlap(ss[k].state, ss[k + 1].state).imag()) / ds);
  }
  return worst;
}

LoopPhase geometric_phase_integral(const StatePath& path) {
  if (!path.closed()) {
    throw Error(ErrorKind::kOpenPath, "geometric phase is gauge invariant only on loops");
  }
  auto ss = path.samples();
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < ss.size(); ++k) {
    acc += checked_link(ss[k].state, ss[k + 1].state, k).imag();
  }
  if (ss.size() > 1) {
    acc += std::arg(overlap(ss.back().state, ss.front().state));
  }
  LoopPhase out;
  out.phase = PhaseValue(acc);
  out.unwrapped = acc;
  out.winding = static_cast<int>(std::lround((acc - out.phase.radians()) / (2.0 * kPi)));
  return out;
}

StatePath geodesic_path(const PureState& a, const PureState& b, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::kInput, "geodesic needs at least 2 samples");
  const Complex ab = overlap(a, b);
  const double c = std::abs(ab);
  if (c <= kLinkFloor) {
    throw Error(ErrorKind::kOrthogonalEndpoints,
                "orthogonal endpoints: geodesic is not unique");
  }
  const CVector bb = b.amplitudes() * (std::conj(ab) / c);
  const double angle = std::acos(std::min(c, 1.0));
  std::vector<PathSample> samples;
  samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(n - 1);
    CVector v;
    if (angle < 1e-12) {
      v = a.amplitudes();
    } else {
      const double s = std::sin(angle);
      v = (std::sin((1.0 - t) * angle) / s) * a.amplitudes() +
          (std::sin(t * angle) / s) * bb;
    }
    samples.push_back({t, PureState::normalized(v)});
  }
  return StatePath(std::move(samples), false);
}

StatePath bloch_polygon_loop(std::span<const BlochVector> vertices, std::size_t per_arc) {
  if (vertices.size() < 2 || per_arc < 1) {
    throw Error(ErrorKind::kInput, "polygon loop needs >= 2 vertices and >= 1 sample per arc");
  }
  std::vector<PathSample> samples;
  const std::size_t n = vertices.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Vector3d a = vertices[i].as_eigen();
    const Eigen::Vector3d b = vertices[(i + 1) % n].as_eigen();
    if ((a + b).norm() < 1e-9) {
      throw Error(ErrorKind::kDegenerateArc, "antipodal consecutive vertices");
    }
    for (std::size_t k = 0; k < per_arc; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(per_arc);
      samples.push_back({s, state_from_bloch(BlochVector::from_eigen(slerp(a, b, t).normalized()))});
      s += 1.0;
    }
  }
  samples.push_back({s, state_from_bloch(vertices.front())});
  return StatePath(std::move(samples), true);
}

double solid_angle(std::span<const BlochVector> vertices) {
  if (vertices.size() < 3) {
    throw Error(ErrorKind::kInput, "solid angle needs at least 3 vertices");
  }
  std::vector<Eigen::Vector3d> v;
  v.reserve(vertices.size());
  for (const auto& b : vertices) {
    if (std::abs(b.norm() - 1.0) > 1e-9) {
      throw Error(ErrorKind::kDomain, "solid angle vertices must be unit vectors");
    }
    v.push_back(b.as_eigen());
  }
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if ((v[i] + v[(i + 1) % n]).norm() < 1e-9) {
      throw Error(ErrorKind::kDegenerateArc, "antipodal consecutive vertices");
    }
  }
  // Fan from a reference point that is not antipodal to any vertex; the fan
  // sum is the enclosed oriented area modulo 4 pi for any such reference.
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& x : v) centroid += x;
  std::vector<Eigen::Vector3d> candidates{v.front()};
  if (centroid.norm() > 1e-6) candidates.push_back(centroid.normalized());
  for (int axis = 0; axis < 3; ++axis) {
    Eigen::Vector3d e = Eigen::Vector3d::Zero();
    e(axis) = 1.0;
    candidates.push_back(e);
    candidates.push_back(-e);
  }
  Eigen::Vector3d ref = candidates.front();
  for (const auto& c : candidates) {
    double closest = 2.0;
    for (const auto& x : v) closest = std::min(closest, (c + x).norm());
    if (closest > 1e-3) {
      ref = c;
      break;
    }
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += triangle_solid_angle(ref, v[i], v[(i + 1) % n]);
  }
  double r = std::remainder(total, 4.0 * kPi);
  if (r <= -2.0 * kPi) r += 4.0 * kPi;
  return r;
}

double plaquette_curvature(const TwoParamFamily& family, std::pair<double, double> point,
                           double delta) {
  if (!(delta > 0.0)) throw Error(ErrorKind::kInput, "plaquette step must be positive");
  const auto [s, t] = point;
  const double h = 0.5 * delta;
  const std::array<PureState, 4> corners{
      family.evaluator(s - h, t - h), family.evaluator(s + h, t - h),
      family.evaluator(s + h, t + h), family.evaluator(s - h, t + h)};
  const double phase = pancharatnam_phase(corners).radians();
  const double element = family.area_element ? family.area_element(s, t) : 1.0;
  return 2.0 * phase / (delta * delta * element);
}

TwoParamFamily bloch_sphere_family() {
  TwoParamFamily f;
  f.evaluator = [](double theta, double phi) {
    CVector v(2);
    v << std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), phi);
    return PureState(std::move(v));
  };
  f.area_element = [](double theta, double) { return std::sin(theta); };
  return f;
}

TwoParamFamily coherent_state_family(std::size_t fock_dim) {
  if (fock_dim < 2) throw Error(ErrorKind::kDimension, "Fock truncation must be >= 2");
  TwoParamFamily f;
  f.evaluator = [fock_dim](double x, double y) {
    const Complex alpha(x, y);
    CVector v(static_cast<Eigen::Index>(fock_dim));
    Complex term(1.0);
    for (std::size_t n = 0; n < fock_dim; ++n) {
      if (n > 0) term *= alpha / std::sqrt(static_cast<double>(n));
      v(static_cast<Eigen::Index>(n)) = term;
    }
    return PureState::normalized(v);
  };
  f.area_element = [](double, double) { return 1.0; };
  return f;
}

}  // namespace geophase
