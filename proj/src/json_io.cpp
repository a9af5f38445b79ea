#include "inertia/json_io.hpp"

#include <cmath>

namespace inertia {

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  const std::size_t d = m.dim();
  if (m.is_exact()) {
    for (const auto& e : m.exact_entries()) {
      entries.push_back(json::array({e.re_str(), e.im_str()}));
    }
  } else {
    for (const auto& e : m.float_entries()) {
      entries.push_back(json::array({e.real(), e.imag()}));
    }
  }
  return json{{"dim", d}, {"mode", m.is_exact() ? "exact" : "float"}, {"entries", entries}};
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("mode") || !j.contains("entries")) {
    throw BadSpec("matrix json needs dim, mode and entries");
  }
  const std::size_t d = j.at("dim").get<std::size_t>();
  const std::string mode = j.at("mode").get<std::string>();
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != d * d) {
    throw BadSpec("matrix json entries must hold dim*dim pairs");
  }
  if (mode == "exact") {
    Matrix m(d, Mode::Exact);
    auto& e = m.exact_entries();
    for (std::size_t k = 0; k < d * d; ++k) {
      const json& pair = entries.at(k);
      if (!pair.is_array() || pair.size() != 2) throw BadSpec("matrix entry must be [re, im]");
      e[k] = GaussianRational::from_strings(pair.at(0).get<std::string>(),
                                            pair.at(1).get<std::string>());
    }
    return m;
  }
  if (mode == "float") {
    Matrix m(d, Mode::Float);
    auto& e = m.float_entries();
    for (std::size_t k = 0; k < d * d; ++k) {
      const json& pair = entries.at(k);
      if (!pair.is_array() || pair.size() != 2) throw BadSpec("matrix entry must be [re, im]");
      const double re = pair.at(0).get<double>();
      const double im = pair.at(1).get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) throw BadSpec("matrix entry not finite");
      e[k] = cd{re, im};
    }
    return m;
  }
  throw BadSpec("matrix mode must be \"exact\" or \"float\"");
}

json hermitian_to_json(const HermitianMatrix& m) { return matrix_to_json(m.raw()); }

HermitianMatrix hermitian_from_json(const json& j) {
  return HermitianMatrix::checked(matrix_from_json(j));
}

json shape_to_json(const BipartiteShape& s) { return json{{"dims", {s.m, s.n}}}; }

json shape_to_json(const MultiShape& s) { return json{{"dims", s.dims}}; }

namespace {

std::vector<std::size_t> dims_from_json(const json& j) {
  const json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("dims")) throw BadSpec("shape json needs a dims array");
    arr = &j.at("dims");
  }
  if (!arr->is_array() || arr->empty()) throw BadSpec("shape dims must be a non-empty array");
  std::vector<std::size_t> dims;
  for (const auto& v : *arr) dims.push_back(v.get<std::size_t>());
  return dims;
}

}  // namespace

BipartiteShape bipartite_shape_from_json(const json& j) {
  auto dims = dims_from_json(j);
  if (dims.size() != 2) throw BadSpec("bipartite shape needs exactly two dims");
  return {dims[0], dims[1]};
}

MultiShape multi_shape_from_json(const json& j) { return MultiShape(dims_from_json(j)); }

json inertia_to_json(const Inertia& in) { return json::array({in.neg, in.zero, in.pos}); }

Inertia inertia_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw BadSpec("inertia must be [neg, zero, pos]");
  return Inertia{j.at(0).get<std::size_t>(), j.at(1).get<std::size_t>(),
                 j.at(2).get<std::size_t>()};
}

json subset_to_json(const std::vector<std::size_t>& subset) {
  json arr = json::array();
  for (std::size_t s : subset) arr.push_back(s);
  return arr;
}

std::vector<std::size_t> subset_from_json(const json& j) {
  if (!j.is_array()) throw BadSpec("subset must be a sorted 1-based index array");
  std::vector<std::size_t> out;
  for (const auto& v : j) out.push_back(v.get<std::size_t>());
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i - 1] >= out[i]) throw BadSpec("subset must be strictly increasing");
  }
  return out;
}

}  // namespace inertia
