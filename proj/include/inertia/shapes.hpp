#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "inertia/errors.hpp"

namespace inertia {

/// Tensor factorization metadata for a bipartite operator: first-factor
/// dimension m, second-factor dimension n. Index convention throughout:
/// |i,j> maps to row i*n + j (first factor slowest). m <= n is not enforced.
struct BipartiteShape {
  std::size_t m = 1;
  std::size_t n = 1;

  BipartiteShape() = default;
  BipartiteShape(std::size_t m_, std::size_t n_) : m(m_), n(n_) {
    if (m == 0 || n == 0) throw BadSpec("factor dimensions must be >= 1");
  }

  std::size_t dim() const { return m * n; }
  void require_dim(std::size_t d) const {
    if (dim() != d) throw ShapeMismatch("shape does not factor the matrix dimension");
  }
  bool operator==(const BipartiteShape&) const = default;
};

/// Ordered list of factor dimensions (d1, ..., dk), k >= 2.
struct MultiShape {
  std::vector<std::size_t> dims;

  MultiShape() = default;
  explicit MultiShape(std::vector<std::size_t> d) : dims(std::move(d)) {
    if (dims.size() < 2) throw BadSpec("multi-shape needs at least two factors");
    for (std::size_t v : dims) {
      if (v == 0) throw BadSpec("factor dimensions must be >= 1");
    }
  }

  std::size_t k() const { return dims.size(); }
  std::size_t dim() const {
    std::size_t p = 1;
    for (std::size_t v : dims) p *= v;
    return p;
  }
  void require_dim(std::size_t d) const {
    if (dim() != d) throw ShapeMismatch("shape does not factor the matrix dimension");
  }
  bool operator==(const MultiShape&) const = default;
};

}  // namespace inertia
