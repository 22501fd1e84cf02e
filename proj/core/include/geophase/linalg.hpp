#pragma once

#include "geophase/qcore.hpp"

namespace geophase::linalg {

/// exp(-i H t) for Hermitian H, via the spectral decomposition (exactly
/// unitary to rounding).
CMatrix expm_hermitian(const CMatrix& h, double t);

/// Principal logarithm of a unitary matrix, computed through its complex
/// Schur form. Throws kStepTooLarge when an eigenvalue lies within
/// `branch_guard` radians of -1, where the principal branch is ill-defined.
CMatrix log_unitary(const CMatrix& u, double branch_guard = 1e-6);

/// Unitary factor of the polar decomposition m = U P.
CMatrix polar_unitary(const CMatrix& m);

CMatrix hermitian_part(const CMatrix& m);

/// Overlap |Tr(A^dagger B)| / d: the Choi-vector fidelity of two gates with
/// the global phase quotiented out. Equals 1 iff A = e^{ia} B.
double gate_fidelity(const CMatrix& a, const CMatrix& b);

/// Frobenius distance after removing the optimal global phase.
double phase_insensitive_distance(const CMatrix& a, const CMatrix& b);

bool is_hermitian(const CMatrix& m, double tol);

}  // namespace geophase::linalg
