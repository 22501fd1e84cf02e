#include "geophase/loop_compiler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "geophase/error.hpp"

namespace geophase {

namespace {
// Minimum distance to P = S = 0, in units of the longest quadrature step.
constexpr double kClearanceSteps = 50.0;
}  // namespace

PulseFamily::PulseFamily(std::string description, std::vector<double> lower,
                         std::vector<double> upper, Generator generator)
    : description_(std::move(description)),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      generator_(std::move(generator)) {
  if (lower_.empty() || lower_.size() != upper_.size()) {
    throw Error(ErrorKind::kDimension, "family bounds must be non-empty and equal in size");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!(lower_[i] <= upper_[i])) throw Error(ErrorKind::kInput, "family box is empty");
  }
}

PulseFamily PulseFamily::circle_ps(double q) {
  return PulseFamily(
      "circle in (P, S) at Q = " + std::to_string(q) + ": (P0, S0, r)", {0.0, 0.0, 0.0},
      {3.0, 3.0, 2.0},
      [q](std::span<const double> p) { return PulseSchedule::circle_ps(p[0], p[1], p[2], q); });
}

bool PulseFamily::contains(std::span<const double> p) const {
  if (p.size() != lower_.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= lower_[i] && p[i] <= upper_[i])) return false;
  }
  return true;
}

PulseSchedule PulseFamily::schedule(std::span<const double> p) const {
  if (!contains(p)) throw Error(ErrorKind::kDomain, "parameters outside the family box");
  return generator_(p);
}

double evaluate_loop(const PulseFamily& family, std::span<const double> p,
                     std::size_t quadrature_steps) {
  const PulseSchedule loop = family.schedule(p);
  if (quadrature_steps < 2) throw Error(ErrorKind::kInput, "need >= 2 quadrature steps");
  // The integrand varies on the scale of the distance to P = S = 0; the
  // trapezoid rule is only trusted when that distance spans many steps.
  double clearance = std::numeric_limits<double>::infinity();
  double longest = 0.0;
  Controls prev = loop.at(0.0);
  for (std::size_t k = 1; k <= quadrature_steps; ++k) {
    const Controls c = loop.at(static_cast<double>(k) / static_cast<double>(quadrature_steps));
    clearance = std::min(clearance, std::hypot(c.p, c.s));
    longest = std::max(longest, std::hypot(c.p - prev.p, c.s - prev.s));
    prev = c;
  }
  if (longest > 0.0 && clearance < kClearanceSteps * longest) {
    throw Error(ErrorKind::kResolution,
                "loop passes within " + std::to_string(clearance) +
                    " of P = S = 0; too close for the quadrature step");
  }
  return usb_gamma_closed_form(loop, quadrature_steps);
}

namespace {

using Point = std::vector<double>;

struct Objective {
  const PulseFamily& family;
  double target;
  std::size_t quadrature;
  std::size_t evaluations = 0;

  double operator()(const Point& p) {
    ++evaluations;
    try {
      return std::abs(evaluate_loop(family, p, quadrature) - target);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kSingularity || e.kind() == ErrorKind::kDomain ||
          e.kind() == ErrorKind::kResolution) {
        return std::numeric_limits<double>::infinity();
      }
      throw;
    }
  }
};

Point clamp_to(const PulseFamily& family, Point p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::clamp(p[i], family.lower()[i], family.upper()[i]);
  }
  return p;
}

struct Vertex {
  Point x;
  double f;
};

// Box-projected Nelder-Mead with the standard coefficients.
Vertex nelder_mead(Objective& objective, const PulseFamily& family, const Point& start,
                   std::size_t budget, double stop_value) {
  const std::size_t n = start.size();
  std::vector<Vertex> simplex;
  simplex.push_back({start, objective(start)});
  for (std::size_t i = 0; i < n; ++i) {
    Point x = start;
    const double span = family.upper()[i] - family.lower()[i];
    const double step = 0.1 * (span > 0.0 ? span : 1.0);
    x[i] = (x[i] + step <= family.upper()[i]) ? x[i] + step : x[i] - step;
    x = clamp_to(family, x);
    simplex.push_back({x, objective(x)});
  }
  const auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  const std::size_t limit = objective.evaluations + budget;

  auto blend = [&](const Point& c, const Point& w, double t) {
    Point r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = c[i] + t * (w[i] - c[i]);
    return clamp_to(family, r);
  };

  while (objective.evaluations < limit) {
    std::sort(simplex.begin(), simplex.end(), by_value);
    if (simplex.front().f <= stop_value) break;
    double diameter = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        diameter = std::max(diameter, std::abs(simplex[k].x[i] - simplex[0].x[i]));
      }
    }
    if (diameter < 1e-13) break;

    Point centroid(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k].x[i] / static_cast<double>(n);
    }
    Vertex& worst = simplex[n];
    const Vertex reflected{blend(centroid, worst.x, -1.0), 0.0};
    const double fr = objective(reflected.x);
    if (fr < simplex[0].f) {
      const Point ex = blend(centroid, worst.x, -2.0);
      const double fe = objective(ex);
      worst = fe < fr ? Vertex{ex, fe} : Vertex{reflected.x, fr};
    } else if (fr < simplex[n - 1].f) {
      worst = {reflected.x, fr};
    } else {
      const bool outside = fr < worst.f;
      const Point con = blend(centroid, outside ? reflected.x : worst.x, 0.5);
      const double fc = objective(con);
      if (fc < (outside ? fr : worst.f)) {
        worst = {con, fc};
      } else {
        for (std::size_t k = 1; k <= n; ++k) {
          simplex[k].x = blend(simplex[0].x, simplex[k].x, 0.5);
          simplex[k].f = objective(simplex[k].x);
        }
      }
    }
  }
  std::sort(simplex.begin(), simplex.end(), by_value);
  return simplex.front();
}

}  // namespace

CompileResult compile_rotation(double target, const PulseFamily& family,
                               const CompileSettings& settings) {
  if (settings.grid_points < 2) throw Error(ErrorKind::kInput, "grid needs >= 2 points per axis");
  if (settings.restarts < 1) throw Error(ErrorKind::kInput, "need at least one restart");
  const std::size_t n = family.size();
  Objective objective{family, target, settings.quadrature_steps};

  CompileResult result;
  result.target = target;
  result.seed = settings.seed;
  result.reachable_min = std::numeric_limits<double>::infinity();
  result.reachable_max = -std::numeric_limits<double>::infinity();

  // Coarse grid: reachability bound and the first starting point.
  Vertex best{Point(n), std::numeric_limits<double>::infinity()};
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= settings.grid_points;
  for (std::size_t idx = 0; idx < total; ++idx) {
    Point x(n);
    std::size_t rem = idx;
    for (std::size_t i = 0; i < n; ++i) {
      const double t = static_cast<double>(rem % settings.grid_points) /
                       static_cast<double>(settings.grid_points - 1);
      rem /= settings.grid_points;
      x[i] = family.lower()[i] + t * (family.upper()[i] - family.lower()[i]);
    }
    double value = 0.0;
    try {
      value = evaluate_loop(family, x, settings.quadrature_steps);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kSingularity && e.kind() != ErrorKind::kResolution) throw;
      continue;
    }
    ++objective.evaluations;
    result.reachable_min = std::min(result.reachable_min, value);
    result.reachable_max = std::max(result.reachable_max, value);
    const double f = std::abs(value - target);
    if (f < best.f) best = {x, f};
  }

  const double stop_value = 1e-3 * settings.tol;
  for (std::size_t restart = 0; restart < settings.restarts; ++restart) {
    Point start(n);
    if (restart == 0 && std::isfinite(best.f)) {
      start = best.x;
    } else {
      std::seed_seq seq{static_cast<std::uint32_t>(settings.seed),
                        static_cast<std::uint32_t>(settings.seed >> 32),
                        static_cast<std::uint32_t>(restart)};
      std::mt19937_64 rng(seq);
      for (std::size_t i = 0; i < n; ++i) {
        std::uniform_real_distribution<double> dist(family.lower()[i], family.upper()[i]);
        start[i] = dist(rng);
      }
    }
    const Vertex v = nelder_mead(objective, family, start, settings.max_evaluations, stop_value);
    if (v.f < best.f) best = v;
    if (best.f <= stop_value) break;
  }

  if (!std::isfinite(best.f)) {
    throw Error(ErrorKind::kSynthesis, "every candidate loop hit the singularity");
  }
  result.parameters = best.x;
  result.achieved = evaluate_loop(family, best.x, settings.quadrature_steps);
  result.residual = std::abs(result.achieved - target);
  result.converged = result.residual < settings.tol;
  result.evaluations = objective.evaluations;

  const PulseSchedule loop = family.schedule(best.x);
  // Sequential alignment also copes with loops that wind around P = S = 0.
  result.verification = rotation_angle(
      usb_holonomy(loop, settings.verification_steps, FrameAlignment::kSequential).matrix());
  result.verification_gap = std::abs(wrap_phase(result.achieved - result.verification));
  return result;
}

std::vector<BlochVector> compile_bloch_loop(double omega) {
  if (!(std::abs(omega) < 2.0 * kPi)) {
    throw Error(ErrorKind::kDomain, "target solid angle must satisfy |omega| < 2 pi");
  }
  const auto arcs =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::abs(omega) / (0.5 * kPi))));
  std::vector<BlochVector> loop{{0.0, 0.0, 1.0}};
  for (std::size_t j = 0; j <= arcs; ++j) {
    const double phi = omega * static_cast<double>(j) / static_cast<double>(arcs);
    loop.push_back({std::cos(phi), std::sin(phi), 0.0});
  }
  return loop;
}

NoiseReport noise_robustness(const PulseSchedule& loop, std::span<const double> sigmas,
                             std::size_t trials, std::uint64_t seed, std::size_t samples) {
  if (!loop.closed()) throw Error(ErrorKind::kOpenPath, "noise study needs a closed loop");
  if (trials < 100) throw Error(ErrorKind::kInput, "need >= 100 trials per level");
  if (samples < 8) throw Error(ErrorKind::kInput, "need >= 8 samples");

  std::vector<Controls> nominal(samples + 1);
  double cp = 0.0;
  double cs = 0.0;
  for (std::size_t k = 0; k <= samples; ++k) {
    nominal[k] = loop.at(static_cast<double>(k) / static_cast<double>(samples));
    if (k < samples) {
      cp += nominal[k].p / static_cast<double>(samples);
      cs += nominal[k].s / static_cast<double>(samples);
    }
  }
  double radius = 0.0;
  for (const auto& c : nominal) radius = std::max(radius, std::hypot(c.p - cp, c.s - cs));

  NoiseReport report;
  report.seed = seed;
  report.samples = samples;
  report.nominal = usb_gamma_polygon(nominal, loop.gap_floor());

  std::vector<double> window(samples + 1);
  for (std::size_t k = 0; k <= samples; ++k) {
    const double s = std::sin(kPi * static_cast<double>(k) / static_cast<double>(samples));
    window[k] = s * s;
  }
  window.front() = 0.0;
  window.back() = 0.0;

  for (std::size_t level = 0; level < sigmas.size(); ++level) {
    const double sigma = sigmas[level];
    if (!(sigma >= 0.0) || !(sigma < 0.1 * radius)) {
      throw Error(ErrorKind::kDomain, "noise level must satisfy 0 <= sigma < 0.1 * loop radius");
    }
    NoiseLevel out;
    out.sigma = sigma;
    out.trials = trials;
    std::vector<double> errors;
    errors.reserve(trials);
    std::vector<Controls> noisy(nominal);
    for (std::size_t trial = 0; trial < trials; ++trial) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(level), static_cast<std::uint32_t>(trial)};
      std::mt19937_64 rng(seq);
      std::normal_distribution<double> normal(0.0, 1.0);
      for (std::size_t k = 0; k <= samples; ++k) {
        const double dp = normal(rng);
        const double ds = normal(rng);
        noisy[k].p = nominal[k].p + sigma * window[k] * dp;
        noisy[k].s = nominal[k].s + sigma * window[k] * ds;
      }
      try {
        errors.push_back(std::abs(usb_gamma_polygon(noisy, loop.gap_floor()) - report.nominal));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kSingularity) throw;
        ++out.singular;
      }
    }
    out.valid = static_cast<double>(out.singular) < 0.01 * static_cast<double>(trials);
    if (!errors.empty()) {
      const double m = std::accumulate(errors.begin(), errors.end(), 0.0) /
                       static_cast<double>(errors.size());
      double var = 0.0;
      for (double e : errors) var += (e - m) * (e - m);
      out.mean_error = m;
      out.std_error =
          errors.size() > 1 ? std::sqrt(var / static_cast<double>(errors.size() - 1)) : 0.0;
    }
    report.levels.push_back(out);
  }

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t count = 0;
  for (const auto& l : report.levels) {
    if (!l.valid || !(l.sigma > 0.0) || !(l.mean_error > 0.0)) continue;
    const double x = std::log(l.sigma);
    const double y = std::log(l.mean_error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count >= 2) {
    const double c = static_cast<double>(count);
    const double denom = c * sxx - sx * sx;
    if (denom > 0.0) report.slope = (c * sxy - sx * sy) / denom;
  }
  return report;
}

}  // namespace geophase
