#pragma once

#include <cstdint>
#include <utility>

#include "inertia/matrix.hpp"
#include "inertia/sampling.hpp"
#include "inertia/shapes.hpp"

namespace inertia {

/// Pair (L, R) of local invertible operators with i.i.d. complex standard
/// normal entries, resampled until both condition estimates are below 1e4.
/// Deterministic per seed.
std::pair<Matrix, Matrix> random_local_invertible(const BipartiteShape& shape,
                                                  std::uint64_t seed);

/// Verifies the transpose bookkeeping of local conjugations:
/// ((L (x) R) rho (L (x) R)^dagger)^Gamma equals
/// (conj(L) (x) R) rho^Gamma (conj(L) (x) R)^dagger entrywise within tol.
bool pt_equivariance_check(const HermitianMatrix& rho, const BipartiteShape& shape,
                           const Matrix& l, const Matrix& r, double tol = 1e-10);

/// Class label of a state with non-positive partial transpose: the inertia
/// of its partial transpose. Distinct labels certify inequivalence under
/// local invertible operations; equal labels are inconclusive.
struct SloccClass {
  BipartiteShape shape;
  Inertia pt_inertia;
};

SloccClass classify(const HermitianMatrix& rho, const BipartiteShape& shape, double tol = 1e-9);

/// For 2 x n partial-transpose inertias (which always have neg < pos):
/// distinct labels stay distinct for every number of tensor copies, so this
/// is simply label inequality. Throws BadSpec when neg >= pos, where the
/// injectivity argument does not apply.
bool strong_inequivalence(const Inertia& in1, const BipartiteShape& shape1, const Inertia& in2,
                          const BipartiteShape& shape2, unsigned n_copies);

}  // namespace inertia
