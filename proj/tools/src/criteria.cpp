#include "geophase_tools/criteria.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "geophase/adiabatic.hpp"
#include "geophase/classical_analog.hpp"
#include "geophase/gates.hpp"
#include "geophase/holonomy.hpp"
#include "geophase/interferometer.hpp"
#include "geophase/linalg.hpp"
#include "geophase/loop_compiler.hpp"
#include "geophase/phase_abelian.hpp"
#include "geophase_tools/experiments.hpp"

namespace geophase::tools {

namespace {

// Tolerances and budgets, as stated by the acceptance criteria.
constexpr double kOctantTol = 1e-12;
constexpr double kLoopIntegralTol = 1e-4;
constexpr std::size_t kLoopSamples = 10000;
constexpr double kCurvatureTol = 1e-3;
constexpr double kCurvatureDelta = 1e-2;
constexpr int kCurvaturePoints = 20;
constexpr int kRephasings = 1000;
constexpr double kGaugeTol = 1e-9;
constexpr double kConeTheta = kPi / 2;
constexpr double kConeDuration = 200.0;
constexpr double kConeAgreement = 0.05;
constexpr double kConeImprovement = 2.0;
constexpr int kInterferometerConfigs = 200;
constexpr double kIntensityTol = 1e-9;
constexpr double kFitTol = 1e-6;
constexpr double kHolonomyAngleTol = 1e-4;
constexpr std::size_t kHolonomySteps = 100000;
constexpr double kProjectedTol = 0.02;
constexpr double kLeakageTol = 1e-3;
constexpr double kEvolutionDuration = 100.0;
constexpr double kCompileTol = 1e-3;
constexpr double kGateTol = 0.05;
constexpr double kDeutschExactTol = 1e-14;
constexpr double kDeutschSuccess = 0.99;
constexpr double kDeutschBaseDuration = 100.0;
constexpr double kFoucaultSlopeTol = 0.02;
constexpr double kFoucaultClosedFormTol = 0.05;
constexpr double kFoucaultRatio = 50.0;
constexpr double kNoiseSlopeLow = 1.5;
constexpr double kNoiseSlopeHigh = 2.5;
constexpr std::size_t kNoiseTrials = 1000;
constexpr double kReproducibilityTol = 1e-12;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

CVector random_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v;
}

CMatrix random_matrix(std::mt19937_64& rng, Eigen::Index n) {
  CMatrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m.col(j) = random_vector(rng, n);
  return m;
}

Outcome octant() {
  const double r = 1.0 / std::sqrt(2.0);
  CVector plus(2), circ(2);
  plus << r, r;
  circ << r, Complex(0.0, r);
  const std::vector<PureState> s{PureState::basis(2, 0), PureState(plus), PureState(circ)};
  const double bargmann = pancharatnam_phase(s).radians();
  const double err1 = std::abs(bargmann - kPi / 4);

  const std::vector<BlochVector> corners{{0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
  const StatePath loop = bloch_polygon_loop(corners, kLoopSamples / 3 + 1);
  const double integral_phase = geometric_phase_integral(loop).phase.radians();
  const double err2 = phase_distance(integral_phase, kPi / 4);
  return {err1 < kOctantTol && err2 < kLoopIntegralTol && loop.size() >= kLoopSamples,
          "bargmann error " + fmt("%.3g", err1) + ", loop integral error " + fmt("%.3g", err2) +
              " at " + std::to_string(loop.size()) + " samples"};
}

Outcome curvature() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> th(0.2, kPi - 0.2), ph(0.0, 2.0 * kPi);
  const TwoParamFamily f = bloch_sphere_family();
  double worst = 0.0;
  for (int i = 0; i < kCurvaturePoints; ++i) {
    const double t = th(rng);
    const double p = ph(rng);
    worst = std::max(worst, std::abs(plaquette_curvature(f, {t, p}, kCurvatureDelta) - 1.0));
  }
  return {worst < kCurvatureTol, "max |K - 1| = " + fmt("%.3g", worst) + " over " +
                                     std::to_string(kCurvaturePoints) + " points"};
}

Outcome gauge() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::vector<PureState> seq;
  for (int k = 0; k < 6; ++k) seq.push_back(PureState::normalized(random_vector(rng, 3)));
  const double base = pancharatnam_phase(seq).radians();

  const HamiltonianPath h = spin_half_cone_hamiltonian(1.0, 1.0);
  const EigenFrame frame = eigen_frame(h, 400);
  const double berry = berry_phase(frame, 1).radians();

  double worst_p = 0.0;
  double worst_b = 0.0;
  std::uniform_int_distribution<int> harmonic(1, 5);
  for (int trial = 0; trial < kRephasings; ++trial) {
    std::vector<PureState> re;
    for (const auto& s : seq) re.push_back(s.rephased(angle(rng)));
    worst_p = std::max(worst_p, phase_distance(pancharatnam_phase(re).radians(), base));

    const double c = angle(rng), a = angle(rng), b = angle(rng), d = angle(rng);
    const int m = harmonic(rng);
    const EigenFrame g = frame.rephased(
        1, [=](double s) { return c + a * std::sin(2.0 * kPi * m * s + b) + d * s; });
    worst_b = std::max(worst_b, phase_distance(berry_phase(g, 1).radians(), berry));
  }
  return {worst_p < kGaugeTol && worst_b < kGaugeTol,
          "max shift: pancharatnam " + fmt("%.3g", worst_p) + ", berry " + fmt("%.3g", worst_b)};
}

Outcome cone() {
  const auto steps = [](double t) { return static_cast<std::size_t>(t * 50.0); };
  const ConeReport a = spin_half_cone_experiment(kConeTheta, kConeDuration, steps(kConeDuration));
  const ConeReport b =
      spin_half_cone_experiment(kConeTheta, 2 * kConeDuration, steps(2 * kConeDuration));
  const double ratio = a.max_pairwise_gap / b.max_pairwise_gap;
  return {a.max_pairwise_gap < kConeAgreement && ratio >= kConeImprovement,
          "pairwise gap " + fmt("%.4g", a.max_pairwise_gap) + " at T=200, " +
              fmt("%.4g", b.max_pairwise_gap) + " at T=400 (ratio " + fmt("%.4f", ratio) + ")"};
}

Outcome interferometer() {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim(2, 4), pts(8, 64);
  double worst_i = 0.0;
  double worst_phase = 0.0;
  double worst_vis = 0.0;
  for (int c = 0; c < kInterferometerConfigs; ++c) {
    const Eigen::Index n = dim(rng);
    const CMatrix g = random_matrix(rng, n);
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace();
    const CMatrix u = linalg::polar_unitary(random_matrix(rng, n));
    const MZConfig cfg{0.0, u, DensityMatrix(linalg::hermitian_part(rho))};
    const Complex tr = (u * cfg.rho0.matrix()).trace();
    const FringeScan scan = fringe_scan(cfg, static_cast<std::size_t>(pts(rng)));
    for (const auto& p : scan.points()) {
      const double model = 0.5 * (1.0 + std::abs(tr) * std::cos(p.chi - std::arg(tr)));
      worst_i = std::max(worst_i, std::abs(p.intensity - model));
    }
    const PhaseVisibility fit = extract_phase_visibility(scan);
    worst_phase = std::max(worst_phase, phase_distance(fit.phase.radians(), std::arg(tr)));
    worst_vis = std::max(worst_vis, std::abs(fit.visibility - std::abs(tr)));
  }
  return {worst_i < kIntensityTol && worst_phase < kFitTol && worst_vis < kFitTol,
          "intensity " + fmt("%.3g", worst_i) + ", phase " + fmt("%.3g", worst_phase) +
              ", visibility " + fmt("%.3g", worst_vis)};
}

Outcome holonomy() {
  const PulseSchedule loop = PulseSchedule::circle_ps(2.0, 2.0, 0.5, 1.0);
  const double closed = usb_gamma_closed_form(loop, kHolonomySteps);
  const auto r = usb_full_evolution_check(loop, kEvolutionDuration,
                                          static_cast<std::size_t>(kEvolutionDuration * 100),
                                          kHolonomySteps);
  const double angle_err = std::abs(r.holonomy_angle - closed);
  return {angle_err < kHolonomyAngleTol && r.distance < kProjectedTol && r.leakage < kLeakageTol,
          "gamma " + fmt("%.10f", closed) + ", angle error " + fmt("%.3g", angle_err) +
              ", projected distance " + fmt("%.3g", r.distance) + ", leakage " +
              fmt("%.3g", r.leakage)};
}

Outcome synthesis() {
  const CompileResult c = compile_rotation(kPi / 4, PulseFamily::circle_ps(1.0));
  const GeometricGate g = geometric_phase_gate(kPi);
  const double fid = linalg::gate_fidelity(pauli::z(), g.simulated);
  return {c.residual < kCompileTol && c.verification_gap < kCompileTol && 1.0 - fid < kGateTol,
          "residual " + fmt("%.3g", c.residual) + ", verification gap " +
              fmt("%.3g", c.verification_gap) + ", sigma_z infidelity " + fmt("%.3g", 1.0 - fid)};
}

Outcome deutsch_criterion() {
  bool plain = true;
  double worst_plain = 0.0;
  for (int f0 = 0; f0 < 2; ++f0) {
    for (int f1 = 0; f1 < 2; ++f1) {
      const DeutschResult r = deutsch(OracleSpec(f0, f1));
      const bool right = (r.classification == DeutschClass::kConstant) == (f0 == f1);
      plain = plain && right;
      worst_plain = std::max(worst_plain, std::abs(1.0 - r.success_probability));
    }
  }
  plain = plain && worst_plain < kDeutschExactTol;

  GeometricDeutschSettings s;
  s.hadamard_loop = hadamard_loop_parameters();
  bool geometric = true;
  double min_success = 1.0;
  std::string trace;
  for (int f0 = 0; f0 < 2; ++f0) {
    for (int f1 = 0; f1 < 2; ++f1) {
      const OracleSpec o(f0, f1);
      double previous = -1.0;
      for (int k = 0; k < 4; ++k) {
        s.usb_duration = s.cone_duration = kDeutschBaseDuration * std::pow(2.0, k);
        const auto r = deutsch_geometric(o, s);
        const bool agree = r.classification == deutsch(o).classification;
        if (k == 0) {
          geometric = geometric && agree && r.success_probability > kDeutschSuccess;
          min_success = std::min(min_success, r.success_probability);
        }
        geometric = geometric && agree && r.success_probability > previous;
        previous = r.success_probability;
      }
      trace += " f=" + std::to_string(f0) + std::to_string(f1) + ":" +
               fmt("%.6f", previous);
    }
  }
  return {plain && geometric, "plain max |1 - p| " + fmt("%.3g", worst_plain) +
                                  ", geometric min p at T=100 " + fmt("%.6f", min_success) +
                                  ", p at T=800" + trace};
}

Outcome foucault() {
  const double earth = 1.0 / kFoucaultRatio;
  const double lat[4] = {kPi / 6, kPi / 4, kPi / 3, 5 * kPi / 12};
  double num = 0.0, den = 0.0;
  for (double th : lat) {
    PendulumParams p{1.0, 1.0, earth, th};
    const double per = p.swing_period();
    const auto traj = foucault_integrate(p, 1.0, 40 * per, 40 * 200);
    const double e = earth * std::cos(th);
    num += precession_rate(traj, p) * e;
    den += e * e;
  }
  const double slope = num / den;

  PendulumParams p{1.0, 1.0, earth, kPi / 4};
  const double per = p.swing_period();
  const auto traj = foucault_integrate(p, closed_form_initial_state(p, 1.0), 10 * per, 10 * 200);
  double err = 0.0;
  for (const auto& s : traj) {
    err = std::max(err, std::abs(std::complex<double>(s.state.x, s.state.y) -
                                 foucault_closed_form(p, 1.0, s.t)));
  }
  return {std::abs(slope - 1.0) < kFoucaultSlopeTol && err < kFoucaultClosedFormTol,
          "rate slope " + fmt("%.5f", slope) + ", closed-form relative error " + fmt("%.4f", err)};
}

Outcome noise_criterion() {
  const PulseSchedule loop = PulseSchedule::circle_ps(2.0, 2.0, 0.5, 1.0);
  const std::vector<double> sigmas{0.005, 0.01, 0.02, 0.04};
  const NoiseReport a = noise_robustness(loop, sigmas, kNoiseTrials, 20240601);
  const NoiseReport b = noise_robustness(loop, sigmas, kNoiseTrials, 20240601);
  bool same = a.slope == b.slope;
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    same = same && a.levels[i].mean_error == b.levels[i].mean_error && a.levels[i].valid;
  }
  return {same && a.slope >= kNoiseSlopeLow && a.slope <= kNoiseSlopeHigh,
          "slope " + fmt("%.4f", a.slope) + (same ? ", rerun identical" : ", rerun differs")};
}

Outcome reproducibility() {
  bool ok = true;
  std::string detail;
  for (int id : kSelftestCriteria) {
    const CriterionResult r = run_criterion(id);
    ok = ok && r.passed;
    detail += "criterion " + std::to_string(id) + (r.passed ? " pass; " : " FAIL; ");
  }
  double worst = 0.0;
  for (const auto& e : registry()) {
    Json again = e.example;
    again["workers"] = 3;
    const ResultTable first = run_config(e.example);
    const ResultTable second = run_config(again);
    worst = std::max(worst, max_numeric_difference(first, second));
  }
  ok = ok && worst <= kReproducibilityTol;
  return {ok, detail + "max rerun difference over " + std::to_string(registry().size()) +
                  " example configs " + fmt("%.3g", worst)};
}

struct Entry {
  const char* title;
  double limit;
  Outcome (*run)();
};

const Entry kEntries[] = {
    {"octant phase", 1.0, octant},
    {"Bloch curvature", 1.0, curvature},
    {"gauge invariance", 5.0, gauge},
    {"adiabatic three-way check", 30.0, cone},
    {"interferometer law", 10.0, interferometer},
    {"dark-state holonomy three-way check", 60.0, holonomy},
    {"gate synthesis", 120.0, synthesis},
    {"Deutsch", 120.0, deutsch_criterion},
    {"Foucault", 30.0, foucault},
    {"noise robustness", 120.0, noise_criterion},
    {"CLI reproducibility", 600.0, reproducibility},
};

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > 11) throw std::out_of_range("criteria are numbered 1..11");
  const Entry& e = kEntries[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = e.title;
  r.time_limit = e.limit;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Outcome o = e.run();
    r.passed = o.passed;
    r.detail = o.detail;
  } catch (const std::exception& ex) {
    r.passed = false;
    r.detail = std::string("exception: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.seconds > r.time_limit) {
    r.passed = false;
    r.detail += "; exceeded " + fmt("%.0f", r.time_limit) + " s";
  }
  return r;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << " ("
     << fmt("%.2f", r.seconds) << " s) " << r.detail;
  return os.str();
}

}  // namespace geophase::tools
