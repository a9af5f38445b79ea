#include "inertia/witness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "inertia/bipartite.hpp"
#include "inertia/eig.hpp"
#include "inertia/exact.hpp"

namespace inertia {

bool two_qubit_block_positive(const std::vector<double>& eigs) {
  if (eigs.size() != 4) throw BadSpec("expected four eigenvalues");
  for (std::size_t i = 1; i < 4; ++i) {
    if (eigs[i - 1] < eigs[i]) throw Unsorted("eigenvalues must be sorted descending");
  }
  const double mu1 = eigs[0], mu2 = eigs[1], mu3 = eigs[2], mu4 = eigs[3];
  if (mu3 < 0.0) return false;
  if (mu4 < -mu2) return false;
  return mu4 >= -std::sqrt(mu1 * mu3);
}

std::string to_string(EwClass c) {
  switch (c) {
    case EwClass::Psd:
      return "psd";
    case EwClass::EntanglementWitness:
      return "entanglement_witness";
    case EwClass::NotBlockPositive:
      return "not_block_positive";
    default:
      return "inconclusive";
  }
}

namespace {

std::vector<cd> column_of(const Matrix& m, std::size_t col) {
  const auto& e = m.float_entries();
  const std::size_t d = m.dim();
  std::vector<cd> v(d);
  for (std::size_t r = 0; r < d; ++r) v[r] = e[r * d + col];
  return v;
}

// K[i][i'] = sum_{j,j'} conj(b_j) W[(i,j),(i',j')] b_{j'}
HermitianMatrix contract_second(const std::vector<cd>& w, std::size_t m, std::size_t n,
                                const std::vector<cd>& b) {
  const std::size_t d = m * n;
  Matrix out(m, Mode::Float);
  auto& e = out.float_entries();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t ip = 0; ip < m; ++ip) {
      cd s{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) {
        const cd bj = std::conj(b[j]);
        for (std::size_t jp = 0; jp < n; ++jp) {
          s += bj * w[(i * n + j) * d + (ip * n + jp)] * b[jp];
        }
      }
      e[i * m + ip] = s;
    }
  }
  return HermitianMatrix::checked(std::move(out));
}

// K[j][j'] = sum_{i,i'} conj(a_i) W[(i,j),(i',j')] a_{i'}
HermitianMatrix contract_first(const std::vector<cd>& w, std::size_t m, std::size_t n,
                               const std::vector<cd>& a) {
  const std::size_t d = m * n;
  Matrix out(n, Mode::Float);
  auto& e = out.float_entries();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t jp = 0; jp < n; ++jp) {
      cd s{0.0, 0.0};
      for (std::size_t i = 0; i < m; ++i) {
        const cd ai = std::conj(a[i]);
        for (std::size_t ip = 0; ip < m; ++ip) {
          s += ai * w[(i * n + j) * d + (ip * n + jp)] * a[ip];
        }
      }
      e[j * n + jp] = s;
    }
  }
  return HermitianMatrix::checked(std::move(out));
}

// Alternating minimal-eigenvector descent from (a, b). Each half-step is the
// global optimum for the frozen factor, so the value is monotone.
double seesaw_minimize(const std::vector<cd>& w, std::size_t m, std::size_t n,
                       std::vector<cd>& a, std::vector<cd>& b, double scale) {
  double value = 0.0;
  bool have_value = false;
  for (int iter = 0; iter < 200; ++iter) {
    const Spectrum sa = eig_hermitian(contract_second(w, m, n, b));
    a = column_of(sa.eigenvectors, 0);
    const Spectrum sb = eig_hermitian(contract_first(w, m, n, a));
    b = column_of(sb.eigenvectors, 0);
    const double next = sb.eigenvalues.front();
    if (have_value && std::abs(next - value) < 1e-12 * std::max(1.0, scale)) {
      value = next;
      break;
    }
    value = next;
    have_value = true;
  }
  return value;
}

}  // namespace

double product_expectation(const HermitianMatrix& w, const BipartiteShape& shape,
                           const ProductVector& v) {
  shape.require_dim(w.dim());
  if (v.a.size() != shape.m || v.b.size() != shape.n) {
    throw ShapeMismatch("product vector does not match the shape");
  }
  const auto wf = w.raw().to_float();
  const auto& e = wf.float_entries();
  const std::size_t d = w.dim();
  cd s{0.0, 0.0};
  for (std::size_t i = 0; i < shape.m; ++i) {
    for (std::size_t j = 0; j < shape.n; ++j) {
      const cd left = std::conj(v.a[i] * v.b[j]);
      for (std::size_t ip = 0; ip < shape.m; ++ip) {
        for (std::size_t jp = 0; jp < shape.n; ++jp) {
          s += left * e[(i * shape.n + j) * d + (ip * shape.n + jp)] * (v.a[ip] * v.b[jp]);
        }
      }
    }
  }
  return s.real();
}

EwVerdict is_entanglement_witness(const HermitianMatrix& w, const BipartiteShape& shape,
                                  int budget, std::uint64_t seed) {
  shape.require_dim(w.dim());
  EwVerdict verdict;
  verdict.seed = seed;

  const Spectrum spec = eig_hermitian(w);
  const double radius = spec.spectral_radius();
  const double scale = std::max(1.0, radius);
  if (inertia_of_eigenvalues(spec.eigenvalues, 1e-9).neg == 0) {
    verdict.classification = EwClass::Psd;
    return verdict;
  }

  const auto wf = w.raw().to_float();
  const auto& e = wf.float_entries();
  Rng rng(seed);
  double best = std::numeric_limits<double>::infinity();
  ProductVector best_vec;
  const double threshold = -1e-9 * scale;

  for (int r = 0; r < budget; ++r) {
    std::vector<cd> a = random_unit_vector(shape.m, rng);
    std::vector<cd> b = random_unit_vector(shape.n, rng);
    const double value = seesaw_minimize(e, shape.m, shape.n, a, b, scale);
    ++verdict.restarts_used;
    if (value < best) {
      best = value;
      best_vec = ProductVector{a, b};
    }
    if (best < threshold) break;  // a violation is a sound certificate
  }

  verdict.min_value = best;
  if (best < threshold) {
    verdict.classification = EwClass::NotBlockPositive;
    verdict.witness_vector = best_vec;
  } else {
    verdict.classification = EwClass::EntanglementWitness;
  }
  return verdict;
}

ClosureReport ew_or_npt_closure_check(const HermitianMatrix& w, const BipartiteShape& shape,
                                      int budget, std::uint64_t seed) {
  ClosureReport report;
  report.w_verdict = is_entanglement_witness(w, shape, budget, seed);
  report.in_w = inertia_auto(w);
  const HermitianMatrix wg = partial_transpose(w, shape);
  report.in_w_gamma = inertia_auto(wg);

  if (report.in_w_gamma.neg == 0) {
    // PSD partial transpose; it is an NPT state because transposing back
    // recovers W, which has a negative eigenvalue.
    report.gamma_class = report.in_w.neg > 0 ? GammaClass::NptState : GammaClass::Inconclusive;
  } else {
    EwVerdict gv = is_entanglement_witness(wg, shape, budget, seed);
    report.gamma_class = (gv.classification == EwClass::EntanglementWitness)
                             ? GammaClass::Witness
                             : GammaClass::Inconclusive;
    report.gamma_verdict = std::move(gv);
  }
  report.closure_holds = report.gamma_class != GammaClass::Inconclusive;
  return report;
}

std::vector<std::string> bound_check(const Inertia& in, const BipartiteShape& shape,
                                     BoundContext context) {
  std::vector<std::string> violated;
  const std::size_t m = shape.m, n = shape.n;
  if (in.dim() != shape.dim()) {
    violated.push_back("components do not sum to m*n");
    return violated;
  }
  if (in.neg < 1) violated.push_back("neg >= 1");
  if (in.neg > (m - 1) * (n - 1)) violated.push_back("neg <= (m-1)(n-1)");
  if (in.pos < 2) violated.push_back("pos >= 2");
  if (in.pos > m * n - 1) violated.push_back("pos <= mn-1");
  if (context == BoundContext::NptGamma) {
    if (in.pos < 3) violated.push_back("pos >= 3 for partial transposes of NPT states");
    if (in.rank() < 4) violated.push_back("rank >= 4 for partial transposes of NPT states");
  }
  return violated;
}

namespace {

double vec_norm(const std::vector<cd>& v) {
  double s = 0.0;
  for (cd x : v) s += std::norm(x);
  return std::sqrt(s);
}

void normalize(std::vector<cd>& v) {
  const double n = vec_norm(v);
  if (n > 0) {
    for (cd& x : v) x /= n;
  }
}

// sigma1 >= sigma2 of the 2 x n reshape (row p, col q) = v[p*n+q].
std::pair<double, double> top_two_singular(const std::vector<cd>& v, std::size_t n) {
  cd h11{0, 0}, h12{0, 0}, h22{0, 0};
  for (std::size_t q = 0; q < n; ++q) {
    h11 += v[q] * std::conj(v[q]);
    h12 += v[q] * std::conj(v[n + q]);
    h22 += v[n + q] * std::conj(v[n + q]);
  }
  const double t = h11.real() + h22.real();
  const double det = h11.real() * h22.real() - std::norm(h12);
  const double disc = std::sqrt(std::max(0.0, 0.25 * t * t - det));
  const double mu1 = 0.5 * t + disc;
  const double mu2 = std::max(0.0, 0.5 * t - disc);
  return {std::sqrt(mu1), std::sqrt(mu2)};
}

// Splits a (near) rank-one m x n reshape into unit factors a, b with
// v ~= a (x) b.
ProductVector split_product(const std::vector<cd>& v, std::size_t m, std::size_t n) {
  // a = top eigenvector of the m x m Gram matrix of rows.
  Matrix g(m, Mode::Float);
  auto& e = g.float_entries();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t ip = 0; ip < m; ++ip) {
      cd s{0, 0};
      for (std::size_t q = 0; q < n; ++q) s += v[i * n + q] * std::conj(v[ip * n + q]);
      e[i * m + ip] = s;
    }
  }
  const Spectrum spec = eig_hermitian(HermitianMatrix::checked(std::move(g)));
  std::vector<cd> a = column_of(spec.eigenvectors, m - 1);
  std::vector<cd> b(n, cd{0, 0});
  for (std::size_t q = 0; q < n; ++q) {
    cd s{0, 0};
    for (std::size_t i = 0; i < m; ++i) s += std::conj(a[i]) * v[i * n + q];
    b[q] = s;
  }
  normalize(b);
  return ProductVector{std::move(a), std::move(b)};
}

std::vector<cd> tensor(const ProductVector& pv, std::size_t n) {
  std::vector<cd> v(pv.a.size() * n);
  for (std::size_t i = 0; i < pv.a.size(); ++i) {
    for (std::size_t q = 0; q < n; ++q) v[i * n + q] = pv.a[i] * pv.b[q];
  }
  return v;
}

// Keeps only candidates with a component outside the span of the accepted
// set; maintains an orthonormal basis of that span.
bool accept_independent(std::vector<std::vector<cd>>& ortho, std::vector<cd> v) {
  for (const auto& o : ortho) {
    cd ip{0, 0};
    for (std::size_t k = 0; k < v.size(); ++k) ip += std::conj(o[k]) * v[k];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= ip * o[k];
  }
  if (vec_norm(v) < 1e-6) return false;
  normalize(v);
  ortho.push_back(std::move(v));
  return true;
}

std::vector<cd> quadratic_roots(cd c2, cd c1, cd c0, double scale) {
  std::vector<cd> roots;
  if (std::abs(c2) > 1e-12 * scale) {
    const cd disc = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
    roots.push_back((-c1 + disc) / (2.0 * c2));
    roots.push_back((-c1 - disc) / (2.0 * c2));
  } else if (std::abs(c1) > 1e-12 * scale) {
    roots.push_back(-c0 / c1);
  }
  return roots;
}

}  // namespace

ProductSearchResult find_product_in_kernel(const HermitianMatrix& wg, const BipartiteShape& shape,
                                           double tol, const KernelSearchOptions& opts) {
  shape.require_dim(wg.dim());
  const std::size_t m = shape.m, n = shape.n, d = wg.dim();
  const Spectrum spec = eig_hermitian(wg);
  const double cut = tol * std::max(1.0, spec.spectral_radius());

  std::vector<std::vector<cd>> kernel;
  std::size_t negatives = 0;
  for (std::size_t k = 0; k < d; ++k) {
    if (std::abs(spec.eigenvalues[k]) <= cut) {
      kernel.push_back(column_of(spec.eigenvectors, k));
    } else if (spec.eigenvalues[k] < 0) {
      ++negatives;
    }
  }
  if (kernel.empty()) throw NoKernel("kernel is trivial at the given tolerance");

  ProductSearchResult result;
  const std::size_t barrier = (m - 1) * (n - 1);
  result.guaranteed =
      (kernel.size() + negatives > barrier) ? kernel.size() + negatives - barrier : 0;

  std::vector<std::vector<cd>> ortho;
  auto try_candidate = [&](const std::vector<cd>& v_raw) {
    std::vector<cd> v = v_raw;
    normalize(v);
    if (m == 2) {
      const auto [s1, s2] = top_two_singular(v, n);
      if (s2 > opts.sigma2_tol * std::max(1e-300, s1)) return;
    }
    ProductVector pv = split_product(v, m, n);
    std::vector<cd> w = tensor(pv, n);
    // Rank-one residual for m > 2 (the m = 2 test above already covers it).
    double dist2 = 0.0;
    cd phase{0, 0};
    for (std::size_t k = 0; k < d; ++k) phase += std::conj(w[k]) * v[k];
    for (std::size_t k = 0; k < d; ++k) dist2 += std::norm(v[k] - phase * w[k]);
    if (std::sqrt(dist2) > 1e-6) return;
    if (accept_independent(ortho, w)) result.vectors.push_back(std::move(pv));
  };

  if (m == 2 && kernel.size() == 1) {
    try_candidate(kernel[0]);
  } else if (m == 2 && kernel.size() == 2) {
    // Pencil u1 + t u2: all 2x2 minors of the reshape are quadratics in t.
    const auto& u1 = kernel[0];
    const auto& u2 = kernel[1];
    double coeff_scale = 0.0;
    std::vector<std::array<cd, 3>> minors;
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t qp = q + 1; qp < n; ++qp) {
        const cd a0 = u1[q], a1 = u1[n + q], b0 = u1[qp], b1 = u1[n + qp];
        const cd c0 = u2[q], c1 = u2[n + q], d0 = u2[qp], d1 = u2[n + qp];
        std::array<cd, 3> poly = {a0 * b1 - b0 * a1,
                                  a0 * d1 + c0 * b1 - b0 * c1 - d0 * a1,
                                  c0 * d1 - d0 * c1};
        for (const cd& c : poly) coeff_scale = std::max(coeff_scale, std::abs(c));
        minors.push_back(poly);
      }
    }
    std::vector<std::vector<cd>> candidates = {u1, u2};
    if (coeff_scale > 0) {
      for (const auto& poly : minors) {
        const double mag =
            std::max({std::abs(poly[0]), std::abs(poly[1]), std::abs(poly[2])});
        if (mag < 1e-10 * coeff_scale) continue;
        for (cd t : quadratic_roots(poly[2], poly[1], poly[0], mag)) {
          std::vector<cd> v(2 * n);
          for (std::size_t k = 0; k < 2 * n; ++k) v[k] = u1[k] + t * u2[k];
          candidates.push_back(std::move(v));
        }
        break;  // common roots of all minors are roots of the first one
      }
    }
    for (const auto& v : candidates) try_candidate(v);
  }

  if (result.vectors.size() < std::max<std::size_t>(result.guaranteed, 1)) {
    // Multi-start alternating ascent on the kernel projector, deflated by
    // the already-accepted directions.
    const std::size_t dim = d;
    Matrix proj(dim, Mode::Float);
    auto& pe = proj.float_entries();
    for (const auto& u : kernel) {
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) pe[r * dim + c] += u[r] * std::conj(u[c]);
      }
    }
    Rng rng(opts.seed);
    for (int start = 0; start < opts.starts; ++start) {
      // Deflate: H = -(P - sum_o o o^dagger); minimizing H maximizes overlap.
      Matrix h(dim, Mode::Float);
      auto& he = h.float_entries();
      for (std::size_t k = 0; k < dim * dim; ++k) he[k] = -pe[k];
      for (const auto& o : ortho) {
        for (std::size_t r = 0; r < dim; ++r) {
          for (std::size_t c = 0; c < dim; ++c) he[r * dim + c] += o[r] * std::conj(o[c]);
        }
      }
      std::vector<cd> a = random_unit_vector(m, rng);
      std::vector<cd> b = random_unit_vector(n, rng);
      const double value = seesaw_minimize(he, m, n, a, b, 1.0);
      if (value > -(1.0 - 1e-10)) continue;  // no full-overlap product direction left
      try_candidate(tensor(ProductVector{a, b}, n));
      if (result.vectors.size() >= kernel.size()) break;
    }
  }

  result.complete = result.vectors.size() >= result.guaranteed;
  return result;
}

namespace {

// Elementary congruence row_i -= f * row_k, col_i -= conj(f) * col_k in the
// matrix's own mode.
void eliminate_entry(Matrix& w, std::size_t i, std::size_t k, const ComplexScalar& f) {
  const std::size_t d = w.dim();
  for (std::size_t j = 0; j < d; ++j) {
    w.set(i, j, w.entry(i, j) - f * w.entry(k, j));
  }
  const ComplexScalar fc = f.conj();
  for (std::size_t r = 0; r < d; ++r) {
    w.set(r, i, w.entry(r, i) - fc * w.entry(r, k));
  }
}

Matrix delete_indices(const Matrix& a, std::size_t i0, std::size_t i1) {
  const std::size_t d = a.dim();
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < d; ++k) {
    if (k != i0 && k != i1) keep.push_back(k);
  }
  Matrix out(keep.size(), a.mode());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    for (std::size_t c = 0; c < keep.size(); ++c) {
      out.set(r, c, a.entry(keep[r], keep[c]));
    }
  }
  return out;
}

Matrix swap_permutation(std::size_t dim, std::size_t x, std::size_t y, Mode mode) {
  Matrix p = Matrix::identity(dim, mode);
  if (x == y) return p;
  const ComplexScalar one =
      mode == Mode::Exact ? ComplexScalar::exact_int(1) : ComplexScalar(cd{1.0, 0.0});
  const ComplexScalar zero =
      mode == Mode::Exact ? ComplexScalar::exact_int(0) : ComplexScalar(cd{0.0, 0.0});
  p.set(x, x, zero);
  p.set(y, y, zero);
  p.set(x, y, one);
  p.set(y, x, one);
  return p;
}

// Unitary whose first row is v^dagger, completed by Gram-Schmidt over the
// standard basis.
Matrix unitary_with_first_row(const std::vector<cd>& v) {
  const std::size_t d = v.size();
  std::vector<std::vector<cd>> rows;
  std::vector<cd> first = v;
  for (auto& x : first) x = std::conj(x);
  rows.push_back(std::move(first));
  for (std::size_t basis = 0; basis < d && rows.size() < d; ++basis) {
    std::vector<cd> cand(d, cd{0, 0});
    cand[basis] = cd{1, 0};
    for (const auto& r : rows) {
      cd ip{0, 0};
      for (std::size_t k = 0; k < d; ++k) ip += std::conj(r[k]) * cand[k];
      for (std::size_t k = 0; k < d; ++k) cand[k] -= ip * r[k];
    }
    const double nrm = vec_norm(cand);
    if (nrm > 1e-8) {
      for (auto& x : cand) x /= nrm;
      rows.push_back(std::move(cand));
    }
  }
  if (rows.size() != d) throw Error("failed to complete a unitary basis");
  Matrix u(d, Mode::Float);
  auto& e = u.float_entries();
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) e[r * d + c] = rows[r][c];
  }
  return u;
}

}  // namespace

ReduceResult reduce_2xn(const HermitianMatrix& rho, const BipartiteShape& shape, double tol,
                        const KernelSearchOptions& opts) {
  shape.require_dim(rho.dim());
  if (shape.m != 2) throw BadSpec("reduction is defined for 2 x n states");
  const std::size_t n = shape.n;
  if (n < 2) throw BadSpec("nothing to reduce below 2 x 2");

  const HermitianMatrix w = partial_transpose(rho, shape);
  const Inertia before = inertia_auto(w, tol);
  if (before.zero == 0) throw NoKernelProduct("partial transpose has a trivial kernel");

  // Exact path: a computational-basis cell in the kernel shows up as an
  // exactly zero column.
  HermitianMatrix rho_rot = rho;
  bool rotated = false;
  if (rho.is_exact()) {
    for (std::size_t p = 0; p < 2 && !rotated; ++p) {
      for (std::size_t q = 0; q < n && !rotated; ++q) {
        bool zero_col = true;
        for (std::size_t r = 0; r < w.dim() && zero_col; ++r) {
          zero_col = w.entry(r, p * n + q).is_zero();
        }
        if (zero_col) {
          const Matrix pa = swap_permutation(2, 0, p, Mode::Exact);
          const Matrix pb = swap_permutation(n, 0, q, Mode::Exact);
          rho_rot = local_conjugate(rho, shape, pa, pb);
          rotated = true;
        }
      }
    }
  }
  if (!rotated) {
    const ProductSearchResult found = find_product_in_kernel(w, shape, tol, opts);
    if (found.vectors.empty()) throw NoKernelProduct("no product vector found in the kernel");
    const ProductVector& pv = found.vectors.front();
    // rho' = (conj(U) (x) V) rho (...)^dagger puts |0,0> into the kernel of
    // the rotated partial transpose.
    const Matrix u = unitary_with_first_row(pv.a);
    const Matrix v = unitary_with_first_row(pv.b);
    rho_rot = local_conjugate(rho.mode() == Mode::Exact
                                  ? HermitianMatrix::trusted(rho.raw().to_float())
                                  : rho,
                              shape, u.conj_entries(), v);
  }

  HermitianMatrix w_rot = partial_transpose(rho_rot, shape);
  const double row_scale = std::max(1.0, w_rot.raw().max_abs());

  // Row n of the rotated partial transpose belongs to the |1,0> cell; by
  // positive semidefiniteness it vanishes exactly when its diagonal entry
  // does, so the whole row norm is the robust test.
  double row_norm2 = 0.0;
  if (rho_rot.is_exact()) {
    bool all_zero = true;
    for (std::size_t j = 0; j < w_rot.dim(); ++j) {
      if (!w_rot.entry(n, j).is_zero()) {
        all_zero = false;
        break;
      }
    }
    row_norm2 = all_zero ? 0.0 : 1.0;
  } else {
    for (std::size_t j = 0; j < w_rot.dim(); ++j) {
      row_norm2 += std::norm(w_rot.entry(n, j).to_complex());
    }
    row_norm2 = std::sqrt(row_norm2) <= tol * row_scale ? 0.0 : 1.0;
  }

  BipartiteShape out_shape(2, n - 1);
  if (row_norm2 == 0.0) {
    // |0,0> and |1,0> both sit in the kernel: drop the first column of the
    // second factor.
    Matrix reduced = delete_indices(rho_rot.raw(), 0, n);
    HermitianMatrix out = HermitianMatrix::trusted(std::move(reduced));
    const Inertia after = inertia_auto(partial_transpose(out, out_shape), tol);
    return ReduceResult{std::move(out), out_shape, ReduceMode::ProjectedOut, before, after};
  }

  // Pivot on the (|1,0>, |1,0>) entry and clear its row and column, then
  // drop the |0,0> and |1,0> coordinates; the result is the partial
  // transpose of a 2 x (n-1) state.
  Matrix work = w_rot.raw();
  const ComplexScalar pivot = work.entry(n, n);
  if (pivot.to_complex() == cd{0.0, 0.0}) {
    throw Error("nonzero row with vanishing diagonal; input is not a state");
  }
  for (std::size_t q = 0; q < work.dim(); ++q) {
    if (q == 0 || q == n) continue;
    const ComplexScalar f = work.entry(q, n);
    if (f.is_zero()) continue;
    const ComplexScalar ratio =
        work.is_exact() ? ComplexScalar(f.exact() / pivot.exact())
                        : ComplexScalar(f.to_complex() / pivot.to_complex());
    eliminate_entry(work, q, n, ratio);
  }
  Matrix reduced = delete_indices(work, 0, n);
  HermitianMatrix reduced_pt = HermitianMatrix::trusted(std::move(reduced));
  HermitianMatrix out = partial_transpose(reduced_pt, out_shape);
  const Inertia after = inertia_auto(partial_transpose(out, out_shape), tol);
  return ReduceResult{std::move(out), out_shape, ReduceMode::CongruenceReduced, before, after};
}

}  // namespace inertia
