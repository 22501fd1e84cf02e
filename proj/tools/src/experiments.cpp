#include "geophase_tools/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <random>
#include <thread>

#include "geophase/adiabatic.hpp"
#include "geophase/classical_analog.hpp"
#include "geophase/error.hpp"
#include "geophase/gates.hpp"
#include "geophase/holonomy.hpp"
#include "geophase/interferometer.hpp"
#include "geophase/loop_compiler.hpp"
#include "geophase/phase_abelian.hpp"

namespace geophase::tools {

namespace {

double num(const Json& p, const char* key) { return p.at(key).get<double>(); }
std::int64_t integer(const Json& p, const char* key) { return p.at(key).get<std::int64_t>(); }

std::size_t count(const Json& p, const char* key, std::int64_t minimum) {
  const auto v = integer(p, key);
  if (v < minimum) {
    throw SchemaError(std::string("params.") + key + ": must be >= " + std::to_string(minimum));
  }
  return static_cast<std::size_t>(v);
}

Complex entry(const Json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  return {e[0].get<double>(), e[1].get<double>()};
}

CMatrix matrix(const Json& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = entry(rows[i][j]);
  }
  return m;
}

std::vector<PureState> states(const Json& rows) {
  std::vector<PureState> out;
  for (const auto& r : rows) {
    CVector v(static_cast<Eigen::Index>(r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) v(static_cast<Eigen::Index>(i)) = entry(r[i]);
    out.push_back(PureState::normalized(v));
  }
  return out;
}

Json sweep(double start, double stop, std::size_t n) {
  return Json{{"start", start}, {"stop", stop}, {"count", n}};
}

ParamSpec number(std::string name, double def, std::string desc, bool sweepable = false,
                 bool overridable = false) {
  return {std::move(name), ParamType::kNumber, def, std::move(desc), sweepable, overridable, {}};
}

ParamSpec integral(std::string name, std::int64_t def, std::string desc,
                   bool overridable = false) {
  return {std::move(name), ParamType::kInteger, def, std::move(desc), false, overridable, {}};
}

// ---------------------------------------------------------------------------

Experiment pancharatnam() {
  const double r = 1.0 / std::sqrt(2.0);
  Json octant = Json::array({Json::array({1.0, 0.0}), Json::array({r, r}),
                             Json::array({r, Json::array({0.0, r})})});
  Experiment e;
  e.schema = {"pancharatnam",
              "Bargmann phase of a state cycle and the dense geodesic-loop integral through it",
              {{"states", ParamType::kComplexStates, octant,
                "state vectors; entries are numbers or [re, im]", false, false, {}},
               integral("loop_samples", 10000, "total samples on the geodesic loop", true)},
              {"n_states", "dim", "pancharatnam_phase", "loop_samples", "loop_phase",
               "loop_error", "transport_defect"}};
  e.example = {{"experiment", "pancharatnam"}, {"params", {{"states", octant}}}, {"seed", 1}};
  e.run_point = [](const Json& p, const PointContext&) {
    const auto psi = states(p.at("states"));
    const std::size_t total = count(p, "loop_samples", 16);
    const PhaseValue bargmann = pancharatnam_phase(psi);
    const std::size_t per_arc = std::max<std::size_t>(2, total / psi.size() + 1);
    std::vector<StatePath> arcs;
    PureState start = psi.front();
    for (std::size_t k = 0; k < psi.size(); ++k) {
      arcs.push_back(geodesic_path(start, psi[(k + 1) % psi.size()], per_arc));
      start = arcs.back().samples().back().state;
    }
    const StatePath loop = StatePath::concatenate(arcs, true);
    const LoopPhase integral_phase = geometric_phase_integral(loop);
    return std::vector<Row>{{static_cast<std::int64_t>(psi.size()),
                             static_cast<std::int64_t>(psi.front().dim()), bargmann.radians(),
                             static_cast<std::int64_t>(loop.size()),
                             integral_phase.phase.radians(),
                             phase_distance(integral_phase.phase.radians(), bargmann.radians()),
                             parallel_transport_defect(loop)}};
  };
  return e;
}

Experiment curvature() {
  Experiment e;
  e.schema = {"curvature",
              "Plaquette curvature at seeded random base points of a two-parameter family",
              {{"family", ParamType::kString, "bloch", "bloch or coherent", false, false,
                {"bloch", "coherent"}},
               number("delta", 1e-2, "plaquette side", true, true),
               integral("points", 20, "random base points per sweep point"),
               integral("fock_dim", 40, "Fock truncation of the coherent family")},
              {"point", "u", "v", "delta", "curvature"}};
  e.example = {{"experiment", "curvature"},
               {"params", {{"family", "bloch"}, {"delta", sweep(0.005, 0.02, 2)}, {"points", 5}}},
               {"seed", 11}};
  e.run_point = [](const Json& p, const PointContext& ctx) {
    const bool bloch = p.at("family").get<std::string>() == "bloch";
    const double delta = num(p, "delta");
    const std::size_t points = count(p, "points", 1);
    const TwoParamFamily family =
        bloch ? bloch_sphere_family() : coherent_state_family(count(p, "fock_dim", 2));
    std::mt19937_64 rng(ctx.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Row> rows;
    for (std::size_t i = 0; i < points; ++i) {
      const double a = unit(rng);
      const double b = unit(rng);
      const double u = bloch ? 0.2 + a * (kPi - 0.4) : -1.0 + 2.0 * a;
      const double v = bloch ? 2.0 * kPi * b : -1.0 + 2.0 * b;
      rows.push_back({static_cast<std::int64_t>(i), u, v, delta,
                      plaquette_curvature(family, {u, v}, delta)});
    }
    return rows;
  };
  return e;
}

Experiment berry_cone() {
  Experiment e;
  e.schema = {"berry-cone",
              "Spin-1/2 field sweeping a cone: connection, Bargmann and Schrodinger phases",
              {number("theta", kPi / 2, "cone opening angle", true),
               number("duration", 200.0, "loop time in units of 1/field", true),
               number("field", 1.0, "field magnitude B"),
               integral("steps_per_unit", 50, "integration steps per unit time", true)},
              {"theta", "duration", "solid_angle", "expected", "berry", "pancharatnam",
               "schrodinger", "dynamical", "adiabatic_residual", "max_pairwise_gap"}};
  e.example = {{"experiment", "berry-cone"},
               {"params", {{"theta", sweep(0.5, 1.5707963267948966, 3)}, {"duration", 100.0}}},
               {"seed", 3},
               {"workers", 2}};
  e.run_point = [](const Json& p, const PointContext&) {
    const double t = num(p, "duration");
    const auto steps = static_cast<std::size_t>(
        std::ceil(t * static_cast<double>(count(p, "steps_per_unit", 1))));
    const ConeReport r = spin_half_cone_experiment(num(p, "theta"), t, steps, num(p, "field"));
    return std::vector<Row>{{r.theta, r.duration, r.solid_angle, r.expected, r.berry,
                             r.pancharatnam, r.schrodinger.geometric, r.schrodinger.dynamical,
                             r.adiabatic_residual, r.max_pairwise_gap}};
  };
  return e;
}

Experiment foucault() {
  Experiment e;
  e.schema = {"foucault",
              "Foucault pendulum: fitted precession rate and closed-form comparison",
              {number("colatitude", kPi / 4, "angle from the rotation axis", true),
               number("omega", 1.0, "swing frequency"),
               number("earth_rate", 0.02, "rotation rate"),
               number("periods", 40.0, "integration time in swing periods"),
               integral("steps_per_period", 200, "steps per swing period", true),
               number("x0", 1.0, "release amplitude")},
              {"colatitude", "expected_rate", "measured_rate", "precession_angle",
               "daily_geometric_phase", "daily_precession", "closed_form_error",
               "energy_drift", "adiabatic_ratio"}};
  e.example = {{"experiment", "foucault"},
               {"params", {{"colatitude", sweep(0.5, 1.5707963267948966, 3)}, {"periods", 20.0}}},
               {"seed", 5}};
  e.run_point = [](const Json& p, const PointContext&) {
    PendulumParams pp;
    pp.omega = num(p, "omega");
    pp.earth_rate = num(p, "earth_rate");
    pp.colatitude = num(p, "colatitude");
    pp.validate();
    const double x0 = num(p, "x0");
    const double per = pp.swing_period();
    const double periods = num(p, "periods");
    const std::size_t spp = count(p, "steps_per_period", 64);
    const auto traj = foucault_integrate(
        pp, x0, periods * per, static_cast<std::size_t>(std::ceil(periods * static_cast<double>(spp))));
    const double rate = precession_rate(traj, pp);

    // Closed form over ten periods from its own matched initial velocity.
    const auto cf = foucault_integrate(pp, closed_form_initial_state(pp, x0), 10.0 * per, 10 * spp);
    double err = 0.0;
    for (const auto& s : cf) {
      const auto z = foucault_closed_form(pp, x0, s.t);
      err = std::max(err, std::abs(std::complex<double>(s.state.x, s.state.y) - z));
    }
    const double e0 = pendulum_energy(pp, traj.front().state);
    double drift = 0.0;
    for (const auto& s : traj) drift = std::max(drift, std::abs(pendulum_energy(pp, s.state) - e0));
    const DailyPhase daily = foucault_daily_phase(pp.colatitude);
    return std::vector<Row>{{pp.colatitude, pp.earth_rate * std::cos(pp.colatitude), rate,
                             precession_angle(traj, pp), daily.geometric, daily.precession,
                             err / std::abs(x0), drift / e0, adiabatic_ratio(pp)}};
  };
  return e;
}

Experiment mzi() {
  Experiment e;
  e.schema = {"mzi",
              "Mach-Zehnder fringes with an internal unitary on one arm",
              {integral("chi_points", 64, "fringe samples over [0, 2 pi)"),
               {"internal_phases", ParamType::kNumberList, Json::array({0.0, kPi / 3}),
                "diagonal internal unitary, used when 'internal' is empty", false, false, {}},
               {"internal", ParamType::kComplexMatrix, Json::array(),
                "internal unitary", false, false, {}},
               {"rho0", ParamType::kComplexMatrix, Json::array(),
                "internal density matrix; empty means maximally mixed", false, false, {}}},
              {"chi", "intensity", "model", "fitted_phase", "fitted_visibility", "trace_phase",
               "trace_modulus"}};
  e.example = {{"experiment", "mzi"}, {"params", {{"chi_points", 64}}}, {"seed", 2}};
  e.run_point = [](const Json& p, const PointContext&) {
    CMatrix u;
    if (!p.at("internal").empty()) {
      u = matrix(p.at("internal"));
    } else {
      const auto phases = p.at("internal_phases").get<std::vector<double>>();
      u = CMatrix::Zero(static_cast<Eigen::Index>(phases.size()),
                        static_cast<Eigen::Index>(phases.size()));
      for (std::size_t i = 0; i < phases.size(); ++i) {
        u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = std::polar(1.0, phases[i]);
      }
    }
    const DensityMatrix rho = p.at("rho0").empty()
                                  ? DensityMatrix::maximally_mixed(static_cast<std::size_t>(u.rows()))
                                  : DensityMatrix(matrix(p.at("rho0")));
    MZConfig cfg{0.0, u, rho};
    composite_unitary(cfg);
    const Complex tr = (u * rho.matrix()).trace();
    const FringeScan scan = fringe_scan(cfg, count(p, "chi_points", 8));
    const PhaseVisibility fit = extract_phase_visibility(scan);
    std::vector<Row> rows;
    for (const auto& pt : scan.points()) {
      rows.push_back({pt.chi, pt.intensity, 0.5 * (1.0 + std::abs(tr) * std::cos(pt.chi - std::arg(tr))),
                      fit.phase.radians(), fit.visibility, std::arg(tr), std::abs(tr)});
    }
    return rows;
  };
  return e;
}

Experiment usb_holonomy_experiment() {
  Experiment e;
  e.schema = {"usb-holonomy",
              "Dark-state holonomy of a circular (P, S) loop: closed form, connection, full evolution",
              {number("p0", 2.0, "circle centre P"), number("s0", 2.0, "circle centre S"),
               number("radius", 0.5, "circle radius"), number("q", 1.0, "fixed Q"),
               integral("holonomy_steps", 100000, "frame samples for the connection", true),
               number("duration", 100.0, "evolution time", true),
               integral("steps_per_unit", 100, "Schrodinger steps per unit time", true)},
              {"duration", "closed_form", "holonomy_angle", "projected_angle", "distance",
               "leakage"}};
  e.example = {{"experiment", "usb-holonomy"},
               {"params", {{"duration", sweep(25.0, 50.0, 2)}, {"holonomy_steps", 20000}}},
               {"seed", 4},
               {"workers", 2}};
  e.run_point = [](const Json& p, const PointContext&) {
    const PulseSchedule loop = PulseSchedule::circle_ps(num(p, "p0"), num(p, "s0"),
                                                        num(p, "radius"), num(p, "q"));
    const double t = num(p, "duration");
    const auto steps = static_cast<std::size_t>(
        std::ceil(t * static_cast<double>(count(p, "steps_per_unit", 1))));
    const auto r = usb_full_evolution_check(loop, t, steps, count(p, "holonomy_steps", 16));
    return std::vector<Row>{{t, usb_gamma_closed_form(loop, 100000), r.holonomy_angle,
                             r.projected_angle, r.distance, r.leakage}};
  };
  return e;
}

Experiment compile_loop() {
  Experiment e;
  e.schema = {"compile-loop",
              "Simplex search for a circular (P, S) loop with a target dark-state angle",
              {number("target", kPi / 4, "target rotation angle", true),
               number("q", 1.0, "fixed Q"), number("tol", 1e-3, "residual tolerance", false, true),
               integral("restarts", 8, "simplex restarts"),
               integral("max_evaluations", 3000, "objective budget per restart", true),
               integral("verification_steps", 100000, "holonomy samples for verification", true)},
              {"target", "p0", "s0", "radius", "achieved", "residual", "verification",
               "verification_gap", "converged", "evaluations", "reachable_min", "reachable_max"}};
  e.example = {{"experiment", "compile-loop"},
               {"params", {{"target", 0.5}, {"verification_steps", 20000}}},
               {"seed", 8}};
  e.run_point = [](const Json& p, const PointContext& ctx) {
    CompileSettings s;
    s.tol = num(p, "tol");
    s.restarts = count(p, "restarts", 1);
    s.max_evaluations = count(p, "max_evaluations", 10);
    s.verification_steps = count(p, "verification_steps", 16);
    s.seed = ctx.seed;
    const CompileResult r = compile_rotation(num(p, "target"), PulseFamily::circle_ps(num(p, "q")), s);
    return std::vector<Row>{{r.target, r.parameters[0], r.parameters[1], r.parameters[2],
                             r.achieved, r.residual, r.verification, r.verification_gap,
                             static_cast<std::int64_t>(r.converged),
                             static_cast<std::int64_t>(r.evaluations), r.reachable_min,
                             r.reachable_max}};
  };
  return e;
}

Experiment noise() {
  Experiment e;
  e.schema = {"noise-robustness",
              "Closed-form angle under windowed Gaussian control noise",
              {number("p0", 2.0, "circle centre P"), number("s0", 2.0, "circle centre S"),
               number("radius", 0.5, "circle radius"), number("q", 1.0, "fixed Q"),
               {"sigmas", ParamType::kNumberList, Json::array({0.005, 0.01, 0.02, 0.04}),
                "noise levels", false, false, {}},
               integral("trials", 1000, "trials per level", true),
               integral("samples", 4096, "control samples around the loop", true)},
              {"sigma", "trials", "singular", "valid", "mean_error", "std_error", "slope",
               "nominal"}};
  e.example = {{"experiment", "noise-robustness"},
               {"params", {{"trials", 200}, {"samples", 512}}},
               {"seed", 42}};
  e.run_point = [](const Json& p, const PointContext& ctx) {
    const PulseSchedule loop = PulseSchedule::circle_ps(num(p, "p0"), num(p, "s0"),
                                                        num(p, "radius"), num(p, "q"));
    const auto sigmas = p.at("sigmas").get<std::vector<double>>();
    const NoiseReport r =
        noise_robustness(loop, sigmas, count(p, "trials", 1), ctx.seed, count(p, "samples", 8));
    std::vector<Row> rows;
    for (const auto& l : r.levels) {
      rows.push_back({l.sigma, static_cast<std::int64_t>(l.trials),
                      static_cast<std::int64_t>(l.singular), static_cast<std::int64_t>(l.valid),
                      l.mean_error, l.std_error, r.slope, r.nominal});
    }
    return rows;
  };
  return e;
}

Experiment deutsch_experiment() {
  Experiment e;
  e.schema = {"deutsch", "Phase-oracle Deutsch algorithm on all four oracles", {},
              {"f0", "f1", "classification", "p0", "p1", "success_probability"}};
  e.example = {{"experiment", "deutsch"}, {"seed", 0}};
  e.run_point = [](const Json&, const PointContext&) {
    std::vector<Row> rows;
    for (int f0 = 0; f0 < 2; ++f0) {
      for (int f1 = 0; f1 < 2; ++f1) {
        const DeutschResult r = deutsch(OracleSpec(f0, f1));
        rows.push_back({std::int64_t{f0}, std::int64_t{f1}, std::string(to_string(r.classification)),
                        std::norm(r.final_state[0]), std::norm(r.final_state[1]),
                        r.success_probability});
      }
    }
    return rows;
  };
  return e;
}

Experiment deutsch_geometric_experiment() {
  Experiment e;
  e.schema = {"deutsch-geometric",
              "Deutsch algorithm with geometric oracle phases and holonomic Hadamards",
              {number("duration", 100.0, "adiabatic time of each loop", true),
               {"convention", ParamType::kString, "branch-phase",
                "branch-phase or relative-phase oracle", false, false,
                {"branch-phase", "relative-phase"}},
               number("time_step", 0.01, "integration step", false, true),
               number("field", 1.0, "spin field for the oracle loops"),
               {"hadamard_loop", ParamType::kNumberList, Json::array(),
                "circle (P0, S0, r) with a pi/4 angle; compiled when empty", false, false, {}}},
              {"duration", "f0", "f1", "classification", "expected", "success_probability",
               "branch_phase0", "branch_phase1", "hadamard_leakage", "hadamard_angle"}};
  e.example = {{"experiment", "deutsch-geometric"},
               {"params", {{"duration", sweep(50.0, 100.0, 2)}}},
               {"seed", 6},
               {"workers", 2}};
  e.run_point = [](const Json& p, const PointContext& ctx) {
    GeometricDeutschSettings s;
    s.usb_duration = num(p, "duration");
    s.cone_duration = s.usb_duration;
    s.time_step = num(p, "time_step");
    s.field = num(p, "field");
    s.convention = p.at("convention").get<std::string>() == "branch-phase"
                       ? OracleConvention::kBranchPhase
                       : OracleConvention::kRelativePhase;
    s.compile.seed = ctx.seed;
    const auto loop = p.at("hadamard_loop").get<std::vector<double>>();
    if (!loop.empty()) {
      if (loop.size() != 3) throw SchemaError("params.hadamard_loop: expected (P0, S0, r)");
      s.hadamard_loop = loop;
    } else {
      s.hadamard_loop = hadamard_loop_parameters(s.compile);
    }
    std::vector<Row> rows;
    for (int f0 = 0; f0 < 2; ++f0) {
      for (int f1 = 0; f1 < 2; ++f1) {
        const OracleSpec o(f0, f1);
        const auto r = deutsch_geometric(o, s);
        rows.push_back({s.usb_duration, std::int64_t{f0}, std::int64_t{f1},
                        std::string(to_string(r.classification)),
                        std::string(to_string(deutsch(o).classification)), r.success_probability,
                        r.branch_phase0, r.branch_phase1, r.hadamard_leakage, r.hadamard_angle});
      }
    }
    return rows;
  };
  return e;
}

Experiment ab() {
  Experiment e;
  e.schema = {"ab-phase",
              "Aharonov-Bohm factor exp(-i n flux) by winding number",
              {number("flux", kPi, "enclosed flux in units hbar = c = e = 1", true),
               {"windings", ParamType::kNumberList, Json::array({-2, -1, 0, 1, 2}),
                "integer winding numbers", false, false, {}}},
              {"flux", "winding", "re", "im", "phase"}};
  e.example = {{"experiment", "ab-phase"},
               {"params", {{"flux", sweep(0.0, 6.283185307179586, 5)}}},
               {"seed", 0}};
  e.run_point = [](const Json& p, const PointContext&) {
    const double flux = num(p, "flux");
    std::vector<Row> rows;
    for (const auto& w : p.at("windings")) {
      if (!w.is_number_integer()) throw SchemaError("params.windings: entries must be integers");
      const long n = w.get<long>();
      const Complex z = ab_phase(flux, n);
      rows.push_back({flux, static_cast<std::int64_t>(n), z.real(), z.imag(), std::arg(z)});
    }
    return rows;
  };
  return e;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

const std::vector<Experiment>& registry() {
  static const std::vector<Experiment> all{
      pancharatnam(), curvature(),     berry_cone(),   foucault(),
      mzi(),          usb_holonomy_experiment(),        compile_loop(),
      noise(),        deutsch_experiment(), deutsch_geometric_experiment(), ab()};
  return all;
}

const Experiment* find_experiment(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.schema.name == name) return &e;
  }
  return nullptr;
}

std::uint64_t point_seed(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), 0x9e3779b9u};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

ResultTable run_experiment(const ExperimentConfig& cfg, const Experiment& experiment) {
  const std::vector<Json> points = expand_sweeps(cfg, experiment.schema);
  std::vector<std::vector<Row>> results(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        results[i] = experiment.run_point(points[i], {point_seed(cfg.seed, i), i});
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(cfg.workers, points.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ResultTable table(experiment.schema.columns);
  table.set_meta("tool", std::string(kToolName) + " " + kToolVersion);
  table.set_meta("experiment", experiment.schema.name);
  table.set_meta("seed", std::to_string(cfg.seed));
  table.set_meta("workers", std::to_string(cfg.workers));
  table.set_meta("sweep_points", std::to_string(points.size()));
  table.set_meta("timestamp", utc_now());
  table.set_meta("config", cfg.raw.dump());
  table.set_meta("resolved_params", cfg.params.dump());
  for (auto& rows : results) {
    for (auto& r : rows) table.add_row(std::move(r));
  }
  return table;
}

ExperimentConfig prepare_config(const Json& raw) {
  if (!raw.is_object() || !raw.contains("experiment") || !raw["experiment"].is_string()) {
    throw SchemaError("config: missing string 'experiment'");
  }
  const auto name = raw["experiment"].get<std::string>();
  const Experiment* e = find_experiment(name);
  if (!e) throw SchemaError("config: unknown experiment '" + name + "'; see `geophase list`");
  return validate_config(raw, e->schema);
}

ResultTable run_config(const Json& raw) {
  const ExperimentConfig cfg = prepare_config(raw);
  return run_experiment(cfg, *find_experiment(cfg.experiment));
}

}  // namespace geophase::tools
