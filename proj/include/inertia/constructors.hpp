#pragma once

#include <utility>
#include <vector>

#include "inertia/bipartite.hpp"
#include "inertia/matrix.hpp"
#include "inertia/shapes.hpp"

namespace inertia {

/// Parameters of a qubit-qudit X-state: the density matrix is supported on
/// the diagonal and the antidiagonal. Blocks: M11 = diag(a_1..a_n),
/// M22 = diag(b_n..b_1), and the upper-right block carries r_j e^{i theta_j}
/// on its antidiagonal. PSD iff r_j <= sqrt(a_j b_j) for all j.
struct XStateParams {
  std::size_t n = 2;
  std::vector<double> a, b, r, theta;

  void validate() const;
};

/// Schmidt data for a bipartite pure state: positive coefficients s_1..s_r
/// with r <= m <= n.
struct SchmidtSpec {
  std::size_t r = 1, m = 1, n = 1;
  std::vector<double> coefficients;  // empty means all ones

  void validate() const;
};

/// |psi><psi| with |psi> = sum_i s_i |i,i>, zero-padded to m x n.
/// Entries are exact (doubles convert losslessly to rationals).
std::pair<HermitianMatrix, BipartiteShape> pure_state(const SchmidtSpec& spec);

/// Closed form for the partial-transpose inertia of a Schmidt-rank-r pure
/// state on m x n: ((r^2-r)/2, mn-r^2, (r^2+r)/2).
Inertia pure_state_inertia(std::size_t r, std::size_t m, std::size_t n);

/// Assembles the X-state density matrix. Exact mode when every theta_j is
/// zero, Float otherwise. Throws NotPsd when some r_j > sqrt(a_j b_j).
std::pair<HermitianMatrix, BipartiteShape> xstate(const XStateParams& params);

/// Eigenvalues of the X-state itself: lambda_j(+/-) = (a_j+b_j)/2 +/-
/// sqrt(r_j^2 + d_j^2), d_j = (a_j-b_j)/2. Order: (j=1 -,+), (j=2 -,+), ...
std::vector<double> xstate_spectrum(const XStateParams& params);

/// Eigenvalues of the partially transposed X-state: mu_j(+/-) uses
/// r_{n+1-j} in place of r_j. Same ordering convention.
std::vector<double> xstate_pt_spectrum(const XStateParams& params);

/// Parameter family whose partial transpose has exactly k negative
/// eigenvalues (1 <= k <= floor(n/2)): slots j <= k get a_j = b_j = 1,
/// mirrored slots get a = b = 4 with antidiagonal weight r = 2, everything
/// else diagonal 1.
XStateParams xstate_with_k_negatives(std::size_t n, std::size_t k);

/// The four 2x3 exemplar states built on the Bell projector
/// B = (|00>+|11>)(<00|+<11|): B itself, B + |02><02|, B + I/10, and
/// B + (|01>+|12>)(<01|+<12|), paired with their partial-transpose inertias
/// (1,2,3), (1,1,4), (1,0,5), (2,0,4).
struct Example2x3 {
  HermitianMatrix state;
  BipartiteShape shape;
  Inertia pt_inertia;
};
std::vector<Example2x3> paper_examples_2x3();

/// Diagonal separable state with p unit cells |ij><ij| filled in row-major
/// order; rank p, partial transpose fixed.
HermitianMatrix diagonal_separable(std::size_t m, std::size_t n, std::size_t p);

/// Two-qubit witness W = (Bell projector)^Gamma + beta with
/// beta = |00><00| + a|11><11| + b(|01>+|10>)(h.c.) + c(|01>-|10>)(h.c.).
/// Requires a,b > 0, c in (0,1/2) and 2(1+a) - (1+b-c)^2 < 0; both W and
/// its partial transpose are then non-PSD and block-positive.
/// Throws ConstraintViolated naming the failed inequality.
HermitianMatrix two_qubit_double_ew(double a, double b, double c);

/// Rank-(j-1) staircase state sum_{i=1}^{j-1} (|0,i-1>+|1,i>)(h.c.) on 2 x j;
/// its partial transpose has full rank and inertia (j-1, 0, j+1), certified
/// exactly at build time.
std::pair<HermitianMatrix, BipartiteShape> staircase_state(std::size_t j);

}  // namespace inertia
