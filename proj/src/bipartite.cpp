#include "inertia/bipartite.hpp"

#include <algorithm>

#include "inertia/eig.hpp"
#include "inertia/exact.hpp"

namespace inertia {

namespace {

// Applies an index remapping (r, c) -> (row_map(r), col_map(c)) generically
// over both storage modes.
template <class T, class F>
std::vector<T> remap_entries(const std::vector<T>& in, std::size_t d, F index_of_source) {
  std::vector<T> out(d * d, T{});
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      out[r * d + c] = in[index_of_source(r, c)];
    }
  }
  return out;
}

template <class F>
Matrix remap_matrix(const Matrix& a, F index_of_source) {
  const std::size_t d = a.dim();
  Matrix out(d, a.mode());
  if (a.is_exact()) {
    out.exact_entries() = remap_entries(a.exact_entries(), d, index_of_source);
  } else {
    out.float_entries() = remap_entries(a.float_entries(), d, index_of_source);
  }
  return out;
}

}  // namespace

HermitianMatrix partial_transpose(const HermitianMatrix& a, const BipartiteShape& shape) {
  shape.require_dim(a.dim());
  const std::size_t n = shape.n;
  const std::size_t d = a.dim();
  // Block (ri, ci) of the output is block (ci, ri) of the input.
  auto index_of_source = [n, d](std::size_t r, std::size_t c) {
    const std::size_t ri = r / n, rj = r % n;
    const std::size_t ci = c / n, cj = c % n;
    return (ci * n + rj) * d + (ri * n + cj);
  };
  return HermitianMatrix::trusted(remap_matrix(a.raw(), index_of_source));
}

HermitianMatrix partial_transpose_multi(const HermitianMatrix& a, const MultiShape& shape,
                                        const std::vector<std::size_t>& subset) {
  shape.require_dim(a.dim());
  const std::size_t k = shape.k();
  std::vector<bool> flip(k, false);
  for (std::size_t s : subset) {
    if (s < 1 || s > k) throw BadSubset("subset index out of range");
    if (flip[s - 1]) throw BadSubset("subset index repeated");
    flip[s - 1] = true;
  }
  const std::size_t d = a.dim();
  const auto& dims = shape.dims;
  auto digits = [&](std::size_t idx, std::vector<std::size_t>& out) {
    for (std::size_t f = k; f-- > 0;) {
      out[f] = idx % dims[f];
      idx /= dims[f];
    }
  };
  std::vector<std::size_t> rd(k), cdg(k);
  auto index_of_source = [&](std::size_t r, std::size_t c) {
    digits(r, rd);
    digits(c, cdg);
    std::size_t sr = 0, sc = 0;
    for (std::size_t f = 0; f < k; ++f) {
      const std::size_t a_dig = flip[f] ? cdg[f] : rd[f];
      const std::size_t b_dig = flip[f] ? rd[f] : cdg[f];
      sr = sr * dims[f] + a_dig;
      sc = sc * dims[f] + b_dig;
    }
    return sr * d + sc;
  };
  return HermitianMatrix::trusted(remap_matrix(a.raw(), index_of_source));
}

namespace {

template <class T>
std::vector<T> ptrace_entries(const std::vector<T>& in, std::size_t m, std::size_t n, Keep keep) {
  const std::size_t d = m * n;
  const std::size_t out_d = (keep == Keep::First) ? m : n;
  std::vector<T> out(out_d * out_d, T{});
  if (keep == Keep::Second) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t jp = 0; jp < n; ++jp) {
        T s{};
        for (std::size_t i = 0; i < m; ++i) s = s + in[(i * n + j) * d + (i * n + jp)];
        out[j * n + jp] = s;
      }
    }
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t ip = 0; ip < m; ++ip) {
        T s{};
        for (std::size_t j = 0; j < n; ++j) s = s + in[(i * n + j) * d + (ip * n + j)];
        out[i * m + ip] = s;
      }
    }
  }
  return out;
}

}  // namespace

HermitianMatrix partial_trace(const HermitianMatrix& a, const BipartiteShape& shape, Keep keep) {
  shape.require_dim(a.dim());
  const std::size_t out_d = (keep == Keep::First) ? shape.m : shape.n;
  Matrix out(out_d, a.mode());
  if (a.is_exact()) {
    out.exact_entries() = ptrace_entries(a.raw().exact_entries(), shape.m, shape.n, keep);
  } else {
    out.float_entries() = ptrace_entries(a.raw().float_entries(), shape.m, shape.n, keep);
  }
  return HermitianMatrix::trusted(std::move(out));
}

namespace {

template <class T>
std::vector<T> kron_entries(const std::vector<T>& a, std::size_t da, const std::vector<T>& b,
                            std::size_t db) {
  const std::size_t d = da * db;
  std::vector<T> out(d * d, T{});
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      const T& aij = a[i * da + j];
      for (std::size_t k = 0; k < db; ++k) {
        for (std::size_t l = 0; l < db; ++l) {
          out[(i * db + k) * d + (j * db + l)] = aij * b[k * db + l];
        }
      }
    }
  }
  return out;
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.is_exact() && b.is_exact()) {
    Matrix out(a.dim() * b.dim(), Mode::Exact);
    out.exact_entries() = kron_entries(a.exact_entries(), a.dim(), b.exact_entries(), b.dim());
    return out;
  }
  Matrix af = a.to_float(), bf = b.to_float();
  Matrix out(a.dim() * b.dim(), Mode::Float);
  out.float_entries() = kron_entries(af.float_entries(), af.dim(), bf.float_entries(), bf.dim());
  return out;
}

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix::trusted(kron(a.raw(), b.raw()));
}

HermitianMatrix embed(const HermitianMatrix& a, const BipartiteShape& from,
                      const BipartiteShape& to) {
  from.require_dim(a.dim());
  if (to.m < from.m || to.n < from.n) throw ShapeMismatch("embedding target is smaller");
  Matrix out(to.dim(), a.mode());
  for (std::size_t i = 0; i < from.m; ++i) {
    for (std::size_t j = 0; j < from.n; ++j) {
      for (std::size_t ip = 0; ip < from.m; ++ip) {
        for (std::size_t jp = 0; jp < from.n; ++jp) {
          out.set(i * to.n + j, ip * to.n + jp, a.entry(i * from.n + j, ip * from.n + jp));
        }
      }
    }
  }
  return HermitianMatrix::trusted(std::move(out));
}

HermitianMatrix local_conjugate(const HermitianMatrix& a, const BipartiteShape& shape,
                                const Matrix& l, const Matrix& r) {
  shape.require_dim(a.dim());
  if (l.dim() != shape.m || r.dim() != shape.n) {
    throw ShapeMismatch("local operator dimensions do not match the shape");
  }
  Matrix x = kron(l, r);
  Matrix out = x.multiply(a.raw()).multiply(x.adjoint());
  if (out.is_exact()) return HermitianMatrix::trusted(std::move(out));
  return HermitianMatrix::checked(std::move(out));
}

std::pair<HermitianMatrix, MultiShape> reorder_factors(const HermitianMatrix& a,
                                                       const MultiShape& shape,
                                                       const std::vector<std::size_t>& perm) {
  shape.require_dim(a.dim());
  const std::size_t k = shape.k();
  if (perm.size() != k) throw BadSubset("permutation length must equal the factor count");
  std::vector<bool> seen(k, false);
  for (std::size_t p : perm) {
    if (p >= k || seen[p]) throw BadSubset("not a permutation of the factors");
    seen[p] = true;
  }
  std::vector<std::size_t> new_dims(k);
  for (std::size_t f = 0; f < k; ++f) new_dims[f] = shape.dims[perm[f]];

  const std::size_t d = a.dim();
  const auto& dims = shape.dims;
  std::vector<std::size_t> rd(k), cdg(k), ro(k), co(k);
  auto index_of_source = [&](std::size_t r, std::size_t c) {
    // Digits of r, c in the new factor ordering.
    std::size_t rr = r, cc = c;
    for (std::size_t f = k; f-- > 0;) {
      rd[f] = rr % new_dims[f];
      rr /= new_dims[f];
      cdg[f] = cc % new_dims[f];
      cc /= new_dims[f];
    }
    for (std::size_t f = 0; f < k; ++f) {
      ro[perm[f]] = rd[f];
      co[perm[f]] = cdg[f];
    }
    std::size_t sr = 0, sc = 0;
    for (std::size_t f = 0; f < k; ++f) {
      sr = sr * dims[f] + ro[f];
      sc = sc * dims[f] + co[f];
    }
    return sr * d + sc;
  };
  return {HermitianMatrix::trusted(remap_matrix(a.raw(), index_of_source)),
          MultiShape(new_dims)};
}

bool is_ppt(const HermitianMatrix& a, const BipartiteShape& shape, double tol) {
  shape.require_dim(a.dim());
  if (inertia_auto(a, tol).neg != 0) {
    throw NotAState("input has a negative eigenvalue");
  }
  return inertia_auto(partial_transpose(a, shape), tol).neg == 0;
}

}  // namespace inertia
