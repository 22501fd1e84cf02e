#pragma once

#include <span>
#include <utility>
#include <vector>

#include "geophase/phase_abelian.hpp"
#include "geophase/qcore.hpp"

namespace geophase {

/// Mach-Zehnder interferometer whose |1~> arm applies `internal` to an
/// N-level internal degree of freedom and whose |0~> arm carries the U(1)
/// phase chi. The full space is path (x) internal, path index major.
struct MZConfig {
  double chi = 0.0;
  CMatrix internal;  ///< N x N; unitary unless built by projective_sequence_phase
  DensityMatrix rho0;

  std::size_t internal_dim() const { return static_cast<std::size_t>(rho0.dim()); }
};

/// |1~><1~| (x) U_i + e^{i chi} |0~><0~| (x) 1.
CMatrix composite_operator(double chi, const CMatrix& internal);
UnitaryOp composite_unitary(const MZConfig& cfg);

/// Beam-splitter, mirror and arm operators lifted to the full space.
CMatrix mz_beam_splitter(std::size_t internal_dim);
CMatrix mz_mirrors(std::size_t internal_dim);

/// U_B U_M U U_B (|0~><0~| (x) rho0) (...)^dagger for a unitary internal
/// operator.
DensityMatrix mz_output(const MZConfig& cfg);

/// Trace of the |0~> block of the output. The raw operator product is used,
/// so non-unitary internal operators are embedded without renormalization.
/// For unitary configs this equals (1 + |Tr(U_i rho0)| cos(chi - arg Tr(U_i rho0))) / 2,
/// i.e. the fringe normalized to 1 for U_i = 1, chi = 0.
double intensity(const MZConfig& cfg);

struct FringePoint {
  double chi;
  double intensity;
};

/// Strictly increasing chi samples covering at least one period.
class FringeScan {
 public:
  explicit FringeScan(std::vector<FringePoint> points);

  std::span<const FringePoint> points() const { return points_; }

 private:
  std::vector<FringePoint> points_;
};

/// Intensities on `count` equally spaced chi in [0, 2 pi).
FringeScan fringe_scan(const MZConfig& cfg, std::size_t count);

struct PhaseVisibility {
  PhaseValue phase;
  double visibility = 0.0;
};

/// Linear least squares of I(chi) = a + c cos chi + s sin chi; the fringe
/// shift is atan2(s, c) and the visibility hypot(c, s) / a.
PhaseVisibility extract_phase_visibility(const FringeScan& scan);

/// Pancharatnam phase measured interferometrically: the projector chain
/// |psi_n><psi_n|psi_{n-1}> ... <psi_2|psi_1><psi_1| is placed in the internal arm with
/// rho0 = |psi_1><psi_1| and the fringe shift is fitted. That shift equals
/// arg <psi_1|psi_n><psi_n|psi_{n-1}>...<psi_2|psi_1>, the conjugate cyclic
/// product, so the Pancharatnam phase is its negative.
PhaseValue projective_sequence_phase(std::span<const PureState> states,
                                     std::size_t scan_points = 16);

}  // namespace geophase
