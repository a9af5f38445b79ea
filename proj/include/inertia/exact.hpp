#pragma once

#include "inertia/matrix.hpp"

namespace inertia {

/// Inertia by recursive Hermitian congruence diagonalization over the
/// Gaussian rationals. No tolerances: zero counts are certified.
/// Pivot order: largest-magnitude diagonal entry (ties by lowest index);
/// when the active diagonal is all zero, the first nonzero off-diagonal
/// pair is split into one positive and one negative pivot.
/// Throws NotExact for Float-mode input.
Inertia inertia_exact(const HermitianMatrix& a);

/// Returns S * A * S^dagger. S must be invertible: checked by exact
/// determinant when both operands are exact, by a condition estimate
/// otherwise. Throws Singular.
HermitianMatrix congruence(const HermitianMatrix& a, const Matrix& s);

/// Inertia in the matrix's own mode: exact congruence for Exact matrices,
/// spectral counting at `tol` for Float ones.
Inertia inertia_auto(const HermitianMatrix& a, double tol = 1e-9);

}  // namespace inertia
