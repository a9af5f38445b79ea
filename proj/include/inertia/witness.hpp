#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inertia/matrix.hpp"
#include "inertia/sampling.hpp"
#include "inertia/shapes.hpp"

namespace inertia {

/// Spectral feasibility test for two-qubit block-positive operators: a
/// descending 4-tuple (mu1 >= ... >= mu4) is the spectrum of some
/// block-positive operator iff mu3 >= 0, mu4 >= -mu2 and
/// mu4 >= -sqrt(mu1 mu3). Throws Unsorted for out-of-order input.
bool two_qubit_block_positive(const std::vector<double>& eigs_descending);

/// Normalized product vector a (x) b.
struct ProductVector {
  std::vector<cd> a, b;
};

enum class EwClass { Psd, EntanglementWitness, NotBlockPositive, Inconclusive };

/// Result of the see-saw product-state minimization. NotBlockPositive comes
/// with a concrete violating vector (always a sound certificate);
/// EntanglementWitness is sampling-based and one-sided.
struct EwVerdict {
  EwClass classification = EwClass::Inconclusive;
  std::optional<ProductVector> witness_vector;
  double min_value = 0.0;
  int restarts_used = 0;
  std::uint64_t seed = kDefaultSeed;
};

std::string to_string(EwClass c);

/// Classifies a Hermitian operator: PSD when it has no negative eigenvalue;
/// otherwise minimizes <a,b|W|a,b> by alternating minimal-eigenvector
/// updates over `budget` seeded restarts. A minimum below -1e-9 * max(1,|W|)
/// certifies NotBlockPositive; otherwise the operator is reported as an
/// entanglement witness.
EwVerdict is_entanglement_witness(const HermitianMatrix& w, const BipartiteShape& shape,
                                  int budget = 64, std::uint64_t seed = kDefaultSeed);

/// Product expectation <a,b|W|a,b> (real part; the value is real for
/// Hermitian W).
double product_expectation(const HermitianMatrix& w, const BipartiteShape& shape,
                           const ProductVector& v);

enum class GammaClass { NptState, Witness, Inconclusive };

/// For a witness W, classifies its partial transpose: a PSD partial
/// transpose of a non-PSD Hermitian is an NPT state, otherwise the see-saw
/// check runs on it. One of the two outcomes must hold.
struct ClosureReport {
  EwVerdict w_verdict;
  Inertia in_w;
  Inertia in_w_gamma;
  GammaClass gamma_class = GammaClass::Inconclusive;
  std::optional<EwVerdict> gamma_verdict;
  bool closure_holds = false;
};

ClosureReport ew_or_npt_closure_check(const HermitianMatrix& w, const BipartiteShape& shape,
                                      int budget = 64, std::uint64_t seed = kDefaultSeed);

enum class BoundContext { GeneralWitness, NptGamma };

/// Eigenvalue-count bounds for a witness spectrum on m x n:
/// 1 <= neg <= (m-1)(n-1) and 2 <= pos <= mn-1; partial transposes of NPT
/// states additionally need pos >= 3 and rank >= 4. Returns the violated
/// bounds (empty means all hold).
std::vector<std::string> bound_check(const Inertia& in, const BipartiteShape& shape,
                                     BoundContext context = BoundContext::GeneralWitness);

/// Options for the kernel product-vector search.
struct KernelSearchOptions {
  int starts = 128;
  std::uint64_t seed = kDefaultSeed;
  double sigma2_tol = 1e-8;  // relative second-singular-value threshold
};

struct ProductSearchResult {
  std::vector<ProductVector> vectors;
  /// d + k - (m-1)(n-1) when positive: how many product vectors the kernel
  /// is guaranteed to contain.
  std::size_t guaranteed = 0;
  /// False when fewer than `guaranteed` vectors were found (soft failure).
  bool complete = true;
};

/// Finds linearly independent product vectors in the kernel of a Hermitian
/// operator: a closed-form pencil check when m = 2 and the kernel has
/// dimension <= 2, multi-start alternating ascent on the kernel projector
/// otherwise. Throws NoKernel when the kernel is trivial at tolerance tol.
ProductSearchResult find_product_in_kernel(const HermitianMatrix& wg, const BipartiteShape& shape,
                                           double tol = 1e-9,
                                           const KernelSearchOptions& opts = {});

enum class ReduceMode { ProjectedOut, CongruenceReduced };

struct ReduceResult {
  HermitianMatrix state;
  BipartiteShape shape;
  ReduceMode mode;
  Inertia pt_inertia_before;
  Inertia pt_inertia_after;
};

/// Shrinks a 2 x n state whose partial transpose has a kernel product
/// vector to a 2 x (n-1) state: after rotating the product vector onto
/// |0,0>, either the |1,0> row of the partial transpose also vanishes and
/// the first column of the second factor is projected out
/// ((a,b,c) -> (a,b-2,c)), or that row is cleared by a congruence
/// ((a,b,c) -> (a,b-1,c-1)). Exact throughout when the kernel product
/// vector is a computational-basis cell of an exact state.
ReduceResult reduce_2xn(const HermitianMatrix& rho, const BipartiteShape& shape,
                        double tol = 1e-9, const KernelSearchOptions& opts = {});

}  // namespace inertia
