#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "inertia/matrix.hpp"
#include "inertia/shapes.hpp"

namespace inertia {

/// Default seed for every randomized procedure; the CLI lets the
/// INERTIA_LAB_SEED environment variable override it.
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Deterministic random source for complex Gaussian draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double gauss() { return normal_(gen_); }
  cd complex_gauss() { return cd{normal_(gen_), normal_(gen_)}; }
  double uniform() { return uniform_(gen_); }
  std::uint64_t next_seed() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Square matrix with i.i.d. complex standard normal entries.
Matrix ginibre(std::size_t dim, Rng& rng);

std::vector<cd> random_unit_vector(std::size_t dim, Rng& rng);

/// G G^dagger with G square Ginibre (Hilbert-Schmidt measure, unnormalized).
HermitianMatrix random_state_hs(std::size_t dim, Rng& rng);

/// G G^dagger with G of size dim x k (induced measure with k ancilla levels).
HermitianMatrix random_state_induced(std::size_t dim, std::size_t k, Rng& rng);

/// Rejection-samples Hilbert-Schmidt states until the partial transpose has
/// a negative eigenvalue.
HermitianMatrix random_npt_state(const BipartiteShape& shape, Rng& rng, double tol = 1e-9,
                                 int max_tries = 100000);

/// Convex mixture of `terms` random product projectors.
HermitianMatrix random_separable_state(const BipartiteShape& shape, std::size_t terms, Rng& rng);

/// Diagonal state with uniform random non-negative diagonal entries.
HermitianMatrix random_diagonal_state(std::size_t dim, Rng& rng);

/// Diagonal state supported on `rank` randomly chosen cells with weights
/// bounded away from zero.
HermitianMatrix random_low_rank_diagonal(std::size_t dim, std::size_t rank, Rng& rng);

}  // namespace inertia
