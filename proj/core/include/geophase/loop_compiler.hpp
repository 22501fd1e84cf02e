#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "geophase/holonomy.hpp"
#include "geophase/qcore.hpp"

namespace geophase {

/// Box-bounded parameterization of closed control loops.
class PulseFamily {
 public:
  using Generator = std::function<PulseSchedule(std::span<const double>)>;

  PulseFamily(std::string description, std::vector<double> lower, std::vector<double> upper,
              Generator generator);

  /// Circles P = P0 + r cos, S = S0 + r sin at fixed Q; parameters (P0, S0, r)
  /// in [0, 3] x [0, 3] x [0, 2].
  static PulseFamily circle_ps(double q = 1.0);

  std::size_t size() const { return lower_.size(); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  const std::string& description() const { return description_; }
  bool contains(std::span<const double> p) const;
  /// Throws kDomain outside the box.
  PulseSchedule schedule(std::span<const double> p) const;

 private:
  std::string description_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  Generator generator_;
};

/// Closed-form dark-state angle of one family member. Throws kResolution when
/// the loop comes closer to P = S = 0 than 50 quadrature steps.
double evaluate_loop(const PulseFamily& family, std::span<const double> p,
                     std::size_t quadrature_steps = 4096);

struct CompileSettings {
  double tol = 1e-3;
  std::size_t max_evaluations = 3000;  ///< per restart
  std::size_t restarts = 8;
  std::size_t grid_points = 7;  ///< per dimension for the reachability scan
  std::uint64_t seed = 1;
  std::size_t quadrature_steps = 4096;
  std::size_t verification_steps = 100000;
};

struct CompileResult {
  std::vector<double> parameters;
  double target = 0.0;
  double achieved = 0.0;
  double residual = 0.0;
  double verification = 0.0;  ///< rotation angle of usb_holonomy on the result
  double verification_gap = 0.0;
  bool converged = false;
  double reachable_min = 0.0;  ///< extremes of the coarse grid scan
  double reachable_max = 0.0;
  std::size_t evaluations = 0;
  std::uint64_t seed = 0;
};

/// Nelder-Mead search for parameters whose closed-form angle hits `target`.
/// Restart 0 starts at the best grid point; the rest start at seeded random
/// points. Never throws for an unreachable target; `converged` is false.
CompileResult compile_rotation(double target, const PulseFamily& family,
                               const CompileSettings& settings = {});

/// Spherical polygon with apex at the north pole and an equatorial run of
/// azimuthal width `omega`, split so no arc exceeds pi/2. Its oriented
/// solid angle is `omega`. Requires |omega| < 2 pi.
std::vector<BlochVector> compile_bloch_loop(double omega);

struct NoiseLevel {
  double sigma = 0.0;
  std::size_t trials = 0;
  std::size_t singular = 0;  ///< trials that hit the P = S = 0 singularity
  bool valid = true;
  double mean_error = 0.0;
  double std_error = 0.0;
};

struct NoiseReport {
  double nominal = 0.0;
  std::vector<NoiseLevel> levels;
  double slope = 0.0;  ///< log-log fit of mean error against sigma (sigma > 0)
  std::uint64_t seed = 0;
  std::size_t samples = 0;
};

/// Perturbs P and S on `samples` + 1 uniform points with Gaussian noise of
/// width sigma * sin^2(pi u) (closure preserved, endpoints pinned) and
/// recomputes the closed-form angle per trial. Each (level, trial) pair
/// draws from its own seeded stream.
NoiseReport noise_robustness(const PulseSchedule& loop, std::span<const double> sigmas,
                             std::size_t trials, std::uint64_t seed, std::size_t samples = 4096);

}  // namespace geophase
