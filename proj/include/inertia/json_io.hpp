#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "inertia/matrix.hpp"
#include "inertia/shapes.hpp"

namespace inertia {

using nlohmann::json;

/// Matrix wire format: { "dim": d, "mode": "exact"|"float",
/// "entries": [[re,im], ...] } with dim*dim row-major pairs. Exact entries
/// are canonical "p/q" strings, float entries are JSON numbers.
/// Serialization is canonical: parse followed by dump is the identity on
/// canonical documents.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json hermitian_to_json(const HermitianMatrix& m);
HermitianMatrix hermitian_from_json(const json& j);

/// Shape wire format: { "dims": [m, n] } or { "dims": [d1, ..., dk] }.
json shape_to_json(const BipartiteShape& s);
json shape_to_json(const MultiShape& s);
BipartiteShape bipartite_shape_from_json(const json& j);
MultiShape multi_shape_from_json(const json& j);

/// Inertia as the array [neg, zero, pos].
json inertia_to_json(const Inertia& in);
Inertia inertia_from_json(const json& j);

/// Subsets as sorted 1-based index arrays.
json subset_to_json(const std::vector<std::size_t>& subset);
std::vector<std::size_t> subset_from_json(const json& j);

}  // namespace inertia
