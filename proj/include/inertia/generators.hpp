#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "inertia/json_io.hpp"
#include "inertia/matrix.hpp"
#include "inertia/shapes.hpp"

namespace inertia {

enum class Verified { Unverified, ExactVerified, FloatVerified };

/// A constructed state, the inertia its partial transpose is claimed to
/// have, and the replayable construction recipe. Replaying the recipe
/// reproduces the state bit-exactly; ExactVerified means the claim was
/// recomputed by exact congruence.
struct WitnessCertificate {
  HermitianMatrix state;
  BipartiteShape shape;
  Inertia claimed;
  json recipe;
  Verified verified = Verified::Unverified;
};

/// Recomputes the partial-transpose inertia in the state's own mode and
/// stamps the certificate. Returns false (leaving it Unverified) on
/// mismatch.
bool verify_certificate(WitnessCertificate& cert, double tol = 1e-9);

json certificate_to_json(const WitnessCertificate& cert, bool with_state = false);
WitnessCertificate certificate_from_json(const json& j);

/// Rebuilds a state from a recipe: either a single constructor object
/// {"kind": ...} or an array of steps ("construct" / "matrix" / "embed" /
/// "add_products" / "shift").
std::pair<HermitianMatrix, BipartiteShape> replay_recipe(const json& recipe);

/// sigma = rho + x I with x = half the smallest magnitude among the
/// negative eigenvalues of the partial transpose (x = 1 when there are
/// none); the partial-transpose inertia moves from (a,b,c) to (a,0,b+c).
/// In exact mode x is snapped to a rational and the result re-certified.
WitnessCertificate shift_to_full_rank(const HermitianMatrix& rho, const BipartiteShape& shape,
                                      json base_recipe = json());

/// Embeds rho (whose partial transpose must have no zero eigenvalues) into
/// the larger shape and adds l computational-basis product projectors on
/// cells outside the embedded block, in row-major order. The partial-
/// transpose inertia moves from (a,0,b+c) to (a, D-l, b+c+l) with
/// D = to.m*to.n - from.m*from.n.
WitnessCertificate pad_and_add_products(const HermitianMatrix& rho, const BipartiteShape& from,
                                        const BipartiteShape& to, std::size_t l,
                                        json base_recipe = json());

/// All (n-1)^2 attainable partial-transpose inertias of 2 x n states with
/// non-positive partial transpose, each witnessed by an exactly certified
/// state: the 2 x j staircase seed padded into 2 x n with l = 0..2(n-j)
/// product cells, ordered by (j, l).
std::vector<WitnessCertificate> enumerate_n2n(std::size_t n, std::size_t jobs = 1);

/// The (n-1)^2 expected inertias, in the same (j, l) order.
std::vector<Inertia> expected_n2n_inertias(std::size_t n);

/// Partial-transpose inertia of a Kronecker product under the pairwise
/// regrouping (first factors together, second factors together):
/// (a1 c2 + a2 c1, b1 m2 n2 + b2 m1 n1 - b1 b2, a1 a2 + c1 c2).
Inertia kron_inertia(const Inertia& in1, const BipartiteShape& shape1, const Inertia& in2,
                     const BipartiteShape& shape2);

/// Negative/positive eigenvalue counts of the N-fold tensor power of an
/// operator with a negative and c positive eigenvalues: the products with
/// an odd/even number of negative factors,
/// ((a+c)^N -/+ (c-a)^N) / 2. The zero count follows from the dimension.
std::pair<std::uint64_t, std::uint64_t> ncopy_inertia(const Inertia& in, unsigned n_copies);

}  // namespace inertia
