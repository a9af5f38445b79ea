#include "inertia/slocc.hpp"

#include <cmath>

#include "inertia/bipartite.hpp"
#include "inertia/exact.hpp"

namespace inertia {

std::pair<Matrix, Matrix> random_local_invertible(const BipartiteShape& shape,
                                                  std::uint64_t seed) {
  Rng rng(seed);
  auto draw = [&rng](std::size_t dim) {
    for (;;) {
      Matrix m = ginibre(dim, rng);
      if (m.condition_estimate() < 1e4) return m;
    }
  };
  Matrix l = draw(shape.m);
  Matrix r = draw(shape.n);
  return {std::move(l), std::move(r)};
}

bool pt_equivariance_check(const HermitianMatrix& rho, const BipartiteShape& shape,
                           const Matrix& l, const Matrix& r, double tol) {
  shape.require_dim(rho.dim());
  const HermitianMatrix lhs =
      partial_transpose(local_conjugate(rho, shape, l, r), shape);
  const HermitianMatrix rhs =
      local_conjugate(partial_transpose(rho, shape), shape, l.conj_entries(), r);
  const double scale = std::max({1.0, lhs.raw().max_abs(), rhs.raw().max_abs()});
  return lhs.raw().max_abs_diff(rhs.raw()) <= tol * scale;
}

SloccClass classify(const HermitianMatrix& rho, const BipartiteShape& shape, double tol) {
  shape.require_dim(rho.dim());
  if (inertia_auto(rho, tol).neg != 0) throw NotAState("input has a negative eigenvalue");
  const Inertia in = inertia_auto(partial_transpose(rho, shape), tol);
  if (in.neg == 0) throw NotNpt("partial transpose has no negative eigenvalue");
  return SloccClass{shape, in};
}

bool strong_inequivalence(const Inertia& in1, const BipartiteShape& shape1, const Inertia& in2,
                          const BipartiteShape& shape2, unsigned n_copies) {
  if (n_copies < 1) throw BadSpec("need at least one copy");
  if (in1.dim() != shape1.dim() || in2.dim() != shape2.dim()) {
    throw BadSpec("inertia components must sum to the shape dimension");
  }
  if (in1.neg >= in1.pos || in2.neg >= in2.pos) {
    throw BadSpec("requires neg < pos, as holds for 2 x n partial transposes");
  }
  // Distinct (neg, pos) pairs give distinct copy counts for every power, and
  // equal triples force equal dimensions, so label inequality decides.
  return in1 != in2;
}

}  // namespace inertia
