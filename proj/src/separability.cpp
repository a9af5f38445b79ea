#include "inertia/separability.hpp"

#include <algorithm>
#include <cmath>

#include "inertia/bipartite.hpp"
#include "inertia/eig.hpp"
#include "inertia/exact.hpp"

namespace inertia {

namespace {

double fourth_largest_abs_eigenvalue(const HermitianMatrix& a) {
  if (a.dim() < 4) return 0.0;
  Spectrum s = eig_hermitian(a);
  std::vector<double> mags(s.eigenvalues.size());
  for (std::size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(s.eigenvalues[i]);
  std::sort(mags.begin(), mags.end(), std::greater<>());
  return mags[3];
}

}  // namespace

BipartitionRankReport rank_pt_all_bipartitions(const HermitianMatrix& rho, const MultiShape& shape,
                                               double tol) {
  shape.require_dim(rho.dim());
  if (inertia_auto(rho, tol).neg != 0) throw NotAState("input has a negative eigenvalue");

  BipartitionRankReport report;
  report.shape = shape;
  report.state_rank = inertia_auto(rho, tol).rank();

  const std::size_t k = shape.k();
  bool all_small = report.state_rank <= 3;
  // Representatives of {S, S^c} pairs: subsets containing factor 1.
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); mask += 2) {
    if (mask == (std::size_t{1} << k) - 1) continue;  // full set ~ trivial class
    std::vector<std::size_t> subset;
    for (std::size_t f = 0; f < k; ++f) {
      if (mask & (std::size_t{1} << f)) subset.push_back(f + 1);
    }
    const HermitianMatrix pt = partial_transpose_multi(rho, shape, subset);
    BipartitionRow row;
    row.subset = subset;
    row.inertia = inertia_auto(pt, tol);
    row.rank = row.inertia.rank();
    if (!pt.is_exact()) row.margin = fourth_largest_abs_eigenvalue(pt);
    all_small = all_small && row.rank <= 3;
    report.rows.push_back(std::move(row));
  }
  report.verdict = all_small ? SeparabilityVerdict::SeparableByCriterion
                             : SeparabilityVerdict::CriterionInapplicable;
  return report;
}

bool npt_rank_bound_check(const HermitianMatrix& rho, const BipartiteShape& shape, double tol) {
  shape.require_dim(rho.dim());
  if (inertia_auto(rho, tol).neg != 0) throw NotAState("input has a negative eigenvalue");
  const Inertia in = inertia_auto(partial_transpose(rho, shape), tol);
  if (in.neg == 0) throw NotNpt("partial transpose has no negative eigenvalue");
  return in.rank() >= 4 && in.pos >= 3;
}

}  // namespace inertia
