#pragma once

#include <string>
#include <vector>

#include "inertia/matrix.hpp"
#include "inertia/shapes.hpp"

namespace inertia {

enum class SeparabilityVerdict { SeparableByCriterion, CriterionInapplicable };

struct BipartitionRow {
  std::vector<std::size_t> subset;  // 1-based factor indices, sorted
  Inertia inertia;
  std::size_t rank = 0;
  /// Fourth-largest |eigenvalue| in Float mode: the margin of the rank <= 3
  /// decision (0 when the dimension is below 4 or in Exact mode).
  double margin = 0.0;
};

/// Rank survey of every partial transpose: one row per nonempty proper
/// subset up to complement symmetry (the representative contains factor 1),
/// plus the trivial class (the state itself). The verdict is
/// SeparableByCriterion iff every rank is at most three, which certifies
/// separability of the state and all its partial transposes.
struct BipartitionRankReport {
  MultiShape shape;
  std::vector<BipartitionRow> rows;
  std::size_t state_rank = 0;
  SeparabilityVerdict verdict = SeparabilityVerdict::CriterionInapplicable;
};

BipartitionRankReport rank_pt_all_bipartitions(const HermitianMatrix& rho, const MultiShape& shape,
                                               double tol = 1e-9);

/// For a state with non-positive partial transpose: true iff the partial
/// transpose has rank at least four and at least three positive
/// eigenvalues. This always holds; the operation exists as a falsification
/// probe. Throws NotAState / NotNpt on bad inputs.
bool npt_rank_bound_check(const HermitianMatrix& rho, const BipartiteShape& shape,
                          double tol = 1e-9);

}  // namespace inertia
