#pragma once

#include <vector>

#include "inertia/matrix.hpp"

namespace inertia {

/// Eigendecomposition of a Hermitian matrix: eigenvalues ascending,
/// eigenvectors as orthonormal columns of a Float-mode matrix
/// (column k pairs with eigenvalues[k]).
struct Spectrum {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;

  double spectral_radius() const;
};

/// Cyclic Jacobi diagonalization with two-sided complex rotations.
/// Exact input is converted to Float first. Deterministic for identical
/// input bits. Throws NonConvergence past the sweep budget.
Spectrum eig_hermitian(const HermitianMatrix& a, int max_sweeps = 100);

/// Counts eigenvalues below -tol*s, within, and above +tol*s where
/// s = max(1, spectral radius).
Inertia inertia_of_eigenvalues(const std::vector<double>& eigenvalues, double tol);

/// Inertia by spectral counting at a relative threshold (default 1e-9).
Inertia inertia_float(const HermitianMatrix& a, double tol = 1e-9);

}  // namespace inertia
