#pragma once

namespace uur::tol {

// One knob for all construction-time sanity checks: Hermiticity, unitarity,
// state norm, density-matrix trace, Bloch-ball membership, PSD negativity.
inline constexpr double validation = 1e-10;

// Jacobi eigensolver stops once the off-diagonal Frobenius norm drops here.
inline constexpr double jacobi_off_diagonal = 1e-14;
inline constexpr int jacobi_max_sweeps = 100;

// A Gram determinant of unitary expectation values is real and nonnegative in
// exact arithmetic; computed values get this much slack before we call it a bug.
inline constexpr double gram_imag = 1e-9;
inline constexpr double gram_negative = -1e-9;

// Emitted curve points must satisfy every bound up to this slack.
inline constexpr double curve_soundness = 1e-9;

}  // namespace uur::tol
