#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "inertia/matrix.hpp"
#include "inertia/shapes.hpp"

namespace inertia {

/// Partial transpose with respect to the first factor: block (i,j) of the
/// m x m grid of n x n blocks moves to block (j,i). Involution; preserves
/// Hermiticity, trace and mode.
HermitianMatrix partial_transpose(const HermitianMatrix& a, const BipartiteShape& shape);

/// Transposes the factors listed in `subset` (1-based indices into the
/// shape). The empty subset is the identity; the full subset is the global
/// transpose. Equals the composition of single-factor transposes.
HermitianMatrix partial_transpose_multi(const HermitianMatrix& a, const MultiShape& shape,
                                        const std::vector<std::size_t>& subset);

enum class Keep { First, Second };

/// Trace over the discarded factor; preserves trace and mode.
HermitianMatrix partial_trace(const HermitianMatrix& a, const BipartiteShape& shape, Keep keep);

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b);
Matrix kron(const Matrix& a, const Matrix& b);

/// Zero-padding embedding: |i,j> of the `from` space maps to |i,j> of the
/// `to` space, every new row and column is zero. Commutes with the partial
/// transpose.
HermitianMatrix embed(const HermitianMatrix& a, const BipartiteShape& from,
                      const BipartiteShape& to);

/// (L (x) R) A (L (x) R)^dagger with L m x m and R n x n.
HermitianMatrix local_conjugate(const HermitianMatrix& a, const BipartiteShape& shape,
                                const Matrix& l, const Matrix& r);

/// Reindexes the tensor factors by `perm` (new factor i is old factor
/// perm[i], 0-based). Returns the permuted matrix and its shape.
std::pair<HermitianMatrix, MultiShape> reorder_factors(const HermitianMatrix& a,
                                                       const MultiShape& shape,
                                                       const std::vector<std::size_t>& perm);

/// True iff the partial transpose has no negative eigenvalue. Requires a
/// positive semidefinite input (checked in the matrix's own mode);
/// throws NotAState otherwise.
bool is_ppt(const HermitianMatrix& a, const BipartiteShape& shape, double tol = 1e-9);

}  // namespace inertia
