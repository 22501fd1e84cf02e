#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geophase/loop_compiler.hpp"
#include "geophase/qcore.hpp"

namespace geophase {

/// Unitary on `arity` qubits (dimension 2^arity).
struct GateOp {
  GateOp(UnitaryOp unitary, std::size_t arity, std::string label);

  UnitaryOp unitary;
  std::size_t arity;
  std::string label;
};

GateOp hadamard();
/// diag(1, e^{i phi})
GateOp phase_gate(double phi);
/// diag(1, 1, 1, e^{i phi})
GateOp controlled_phase(double phi);

/// H, phase(2 theta), H, phase(pi/2 + phi) applied to |0>. Equals
/// cos(theta)|0> + e^{i phi} sin(theta)|1> up to a global phase.
PureState universal_single_qubit(double theta, double phi);

/// f(0), f(1).
struct OracleSpec {
  OracleSpec(int f0, int f1);
  int f0;
  int f1;
  bool constant() const { return f0 == f1; }
};

enum class DeutschClass { kConstant, kVarying };
std::string_view to_string(DeutschClass c);

struct DeutschResult {
  DeutschClass classification = DeutschClass::kConstant;
  PureState final_state = PureState::basis(2, 0);
  double success_probability = 0.0;  ///< probability of the correct outcome
};

/// Phase-oracle Deutsch algorithm: H|0>, e^{i pi f(x)}, H, measure.
DeutschResult deutsch(const OracleSpec& oracle);

/// exp(-i n flux) for winding number n (units with hbar = c = e = 1).
Complex ab_phase(double flux, long winding);

struct PhaseGateSettings {
  double duration = 400.0;  ///< total loop time in units of 1/field
  double time_step = 0.01;
  double field = 1.0;
  double tolerance = 0.05;  ///< on 1 - gate fidelity
};

struct GeometricGate {
  GateOp gate;                     ///< ideal diag(1, e^{i phi})
  std::vector<BlochVector> loop;   ///< polygon vertices, closed back to the first
  CMatrix simulated;               ///< transport operator with dynamical phases removed
  double relative_phase = 0.0;     ///< arg(simulated_11 / simulated_00)
  double fidelity = 0.0;
};

/// Drives a spin-1/2 field B n(t) . sigma around the geodesic polygon of
/// solid angle phi (each arc eased to start and stop at rest), evolves |0>
/// and |1> from the north pole, strips the dynamical phases -+B T and checks
/// the result against diag(e^{-i phi/2}, e^{i phi/2}) ~ phase_gate(phi).
/// Throws kSynthesis with the measured phase when 1 - fidelity > tolerance.
GeometricGate geometric_phase_gate(double phi, const PhaseGateSettings& settings = {});

/// Time profile u(t/T) along a control loop.
enum class LoopProfile {
  kLinear,  ///< constant speed; start and stop kicks interfere, so leakage oscillates in T
  kEased,   ///< u - sin(2 pi u)/(2 pi): at rest at both ends
  /// u - sin(pi u)/pi: starts at rest, stops at speed. The stop kick alone
  /// sets the leakage, which then falls off as 1/T^2 without oscillation.
  kEaseIn,
};

PulseSchedule with_profile(const PulseSchedule& loop, LoopProfile profile);

/// Dark-state Hadamard: the 2x2 projected four-level evolution around `loop`
/// composed with the dark-state relabeling diag(1, -1).
struct HolonomicHadamard {
  CMatrix matrix;
  double leakage = 0.0;
  double angle = 0.0;  ///< rotation angle of the projected evolution
};
HolonomicHadamard holonomic_hadamard(const PulseSchedule& loop, double duration,
                                     double time_step, LoopProfile profile = LoopProfile::kEaseIn);

enum class OracleConvention {
  /// Each branch x carries its own phase e^{i pi f(x)} from an ancilla
  /// spin loop of solid angle 2 pi f(x).
  kBranchPhase,
  /// The qubit itself is transported around a loop of solid angle
  /// pi (f(1) - f(0)), giving the relative phase only.
  kRelativePhase,
};
std::string_view to_string(OracleConvention c);

struct GeometricDeutschSettings {
  double usb_duration = 100.0;
  double cone_duration = 100.0;
  double field = 1.0;
  double time_step = 0.01;
  LoopProfile hadamard_profile = LoopProfile::kEaseIn;
  OracleConvention convention = OracleConvention::kBranchPhase;
  /// Circle parameters (P0, S0, r) with closed-form angle pi/4 at Q = 1;
  /// compiled on demand when empty.
  std::optional<std::vector<double>> hadamard_loop;
  CompileSettings compile;
  double success_threshold = 0.99;
};

struct GeometricDeutschReport {
  DeutschClass classification = DeutschClass::kConstant;
  double success_probability = 0.0;
  OracleConvention convention = OracleConvention::kBranchPhase;
  double branch_phase0 = 0.0;  ///< measured geometric phase on branch 0
  double branch_phase1 = 0.0;
  double hadamard_leakage = 0.0;
  double hadamard_angle = 0.0;
  std::vector<double> hadamard_loop;
  bool within_tolerance = false;  ///< success_probability > threshold
};

GeometricDeutschReport deutsch_geometric(const OracleSpec& oracle,
                                         const GeometricDeutschSettings& settings = {});

/// Circle parameters (P0, S0, r) at Q = 1 compiled for a pi/4 dark-state rotation.
std::vector<double> hadamard_loop_parameters(const CompileSettings& settings = {});

}  // namespace geophase
