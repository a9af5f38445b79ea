#include "inertia/sampling.hpp"

#include <cmath>

#include "inertia/bipartite.hpp"
#include "inertia/eig.hpp"

namespace inertia {

Matrix ginibre(std::size_t dim, Rng& rng) {
  Matrix m(dim, Mode::Float);
  auto& e = m.float_entries();
  for (auto& v : e) v = rng.complex_gauss();
  return m;
}

std::vector<cd> random_unit_vector(std::size_t dim, Rng& rng) {
  std::vector<cd> v(dim);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& x : v) {
      x = rng.complex_gauss();
      norm2 += std::norm(x);
    }
  } while (norm2 < 1e-12);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& x : v) x *= inv;
  return v;
}

namespace {

Matrix gram(const std::vector<cd>& g, std::size_t dim, std::size_t cols) {
  Matrix out(dim, Mode::Float);
  auto& e = out.float_entries();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      cd s{0.0, 0.0};
      for (std::size_t k = 0; k < cols; ++k) s += g[i * cols + k] * std::conj(g[j * cols + k]);
      e[i * dim + j] = s;
      e[j * dim + i] = std::conj(s);
    }
  }
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = cd{e[i * dim + i].real(), 0.0};
  return out;
}

}  // namespace

HermitianMatrix random_state_hs(std::size_t dim, Rng& rng) {
  return random_state_induced(dim, dim, rng);
}

HermitianMatrix random_state_induced(std::size_t dim, std::size_t k, Rng& rng) {
  if (k == 0) throw BadSpec("induced measure needs k >= 1");
  std::vector<cd> g(dim * k);
  for (auto& v : g) v = rng.complex_gauss();
  return HermitianMatrix::trusted(gram(g, dim, k));
}

HermitianMatrix random_npt_state(const BipartiteShape& shape, Rng& rng, double tol,
                                 int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    HermitianMatrix rho = random_state_hs(shape.dim(), rng);
    if (inertia_float(partial_transpose(rho, shape), tol).neg > 0) return rho;
  }
  throw Error("failed to sample an NPT state within the try budget");
}

HermitianMatrix random_separable_state(const BipartiteShape& shape, std::size_t terms, Rng& rng) {
  if (terms == 0) throw BadSpec("need at least one product term");
  Matrix out(shape.dim(), Mode::Float);
  auto& e = out.float_entries();
  for (std::size_t t = 0; t < terms; ++t) {
    const auto a = random_unit_vector(shape.m, rng);
    const auto b = random_unit_vector(shape.n, rng);
    const double w = rng.uniform();
    for (std::size_t i = 0; i < shape.m; ++i) {
      for (std::size_t j = 0; j < shape.n; ++j) {
        const cd vi = a[i] * b[j];
        for (std::size_t ip = 0; ip < shape.m; ++ip) {
          for (std::size_t jp = 0; jp < shape.n; ++jp) {
            e[(i * shape.n + j) * shape.dim() + (ip * shape.n + jp)] +=
                w * vi * std::conj(a[ip] * b[jp]);
          }
        }
      }
    }
  }
  return HermitianMatrix::checked(std::move(out));
}

HermitianMatrix random_diagonal_state(std::size_t dim, Rng& rng) {
  Matrix out(dim, Mode::Float);
  auto& e = out.float_entries();
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = cd{rng.uniform(), 0.0};
  return HermitianMatrix::trusted(std::move(out));
}

HermitianMatrix random_low_rank_diagonal(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank < 1 || rank > dim) throw BadSpec("rank must be in [1, dim]");
  std::vector<std::size_t> cells(dim);
  for (std::size_t i = 0; i < dim; ++i) cells[i] = i;
  for (std::size_t i = 0; i < rank; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.uniform() * double(dim - i));
    std::swap(cells[i], cells[std::min(j, dim - 1)]);
  }
  Matrix out(dim, Mode::Float);
  auto& e = out.float_entries();
  for (std::size_t i = 0; i < rank; ++i) {
    e[cells[i] * dim + cells[i]] = cd{0.1 + rng.uniform(), 0.0};
  }
  return HermitianMatrix::trusted(std::move(out));
}

}  // namespace inertia
