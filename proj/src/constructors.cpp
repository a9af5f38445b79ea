#include "inertia/constructors.hpp"

#include <cmath>

#include "inertia/exact.hpp"

namespace inertia {

void XStateParams::validate() const {
  if (n < 1) throw BadSpec("x-state needs n >= 1");
  if (a.size() != n || b.size() != n || r.size() != n || theta.size() != n) {
    throw BadSpec("x-state parameter lists must all have length n");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j] < 0 || b[j] < 0 || r[j] < 0) {
      throw BadSpec("x-state diagonal and antidiagonal weights must be non-negative");
    }
  }
}

void SchmidtSpec::validate() const {
  if (r < 1 || r > m || m > n) throw BadSpec("need 1 <= r <= m <= n");
  if (!coefficients.empty() && coefficients.size() != r) {
    throw BadSpec("coefficient list must have length r");
  }
  for (double s : coefficients) {
    if (!(s > 0)) throw BadSpec("Schmidt coefficients must be positive");
  }
}

std::pair<HermitianMatrix, BipartiteShape> pure_state(const SchmidtSpec& spec) {
  spec.validate();
  BipartiteShape shape(spec.m, spec.n);
  std::vector<GaussianRational> psi(shape.dim());
  for (std::size_t i = 0; i < spec.r; ++i) {
    const double s = spec.coefficients.empty() ? 1.0 : spec.coefficients[i];
    psi[i * spec.n + i] = GaussianRational::from_double(s);
  }
  Matrix out(shape.dim(), Mode::Exact);
  auto& e = out.exact_entries();
  for (std::size_t p = 0; p < psi.size(); ++p) {
    if (psi[p].is_zero()) continue;
    for (std::size_t q = 0; q < psi.size(); ++q) {
      e[p * shape.dim() + q] = psi[p] * psi[q].conj();
    }
  }
  return {HermitianMatrix::trusted(std::move(out)), shape};
}

Inertia pure_state_inertia(std::size_t r, std::size_t m, std::size_t n) {
  if (r < 1 || r > m || m > n) throw BadSpec("need 1 <= r <= m <= n");
  return Inertia{(r * r - r) / 2, m * n - r * r, (r * r + r) / 2};
}

namespace {

bool xstate_is_exact(const XStateParams& p) {
  for (double t : p.theta) {
    if (t != 0.0) return false;
  }
  return true;
}

}  // namespace

std::pair<HermitianMatrix, BipartiteShape> xstate(const XStateParams& params) {
  params.validate();
  const std::size_t n = params.n;
  for (std::size_t j = 0; j < n; ++j) {
    if (params.r[j] * params.r[j] > params.a[j] * params.b[j]) {
      throw NotPsd("x-state needs r_j <= sqrt(a_j b_j) at slot " + std::to_string(j + 1));
    }
  }
  BipartiteShape shape(2, n);
  const std::size_t d = shape.dim();
  const bool exact = xstate_is_exact(params);
  Matrix out(d, exact ? Mode::Exact : Mode::Float);
  auto put = [&](std::size_t row, std::size_t col, double re, double im) {
    if (exact) {
      out.set(row, col, ComplexScalar(GaussianRational::from_double(re, im)));
    } else {
      out.set(row, col, ComplexScalar(cd{re, im}));
    }
  };
  for (std::size_t j = 0; j < n; ++j) {
    put(j, j, params.a[j], 0.0);               // M11 = diag(a_1..a_n)
    put(n + j, n + j, params.b[n - 1 - j], 0.0);  // M22 = diag(b_n..b_1)
  }
  for (std::size_t j = 1; j <= n; ++j) {
    // M12[j-1][n-j] = r_j e^{i theta_j}; theta == 0 keeps the entry rational.
    const double re = params.r[j - 1] * std::cos(params.theta[j - 1]);
    const double im = params.r[j - 1] * std::sin(params.theta[j - 1]);
    put(j - 1, n + (n - j), re, im);
    put(n + (n - j), j - 1, re, -im);
  }
  return {HermitianMatrix::trusted(std::move(out)), shape};
}

namespace {

std::vector<double> xstate_pair_spectrum(const XStateParams& p, bool transpose_antidiag) {
  p.validate();
  std::vector<double> out;
  out.reserve(2 * p.n);
  for (std::size_t j = 1; j <= p.n; ++j) {
    const double dj = 0.5 * (p.a[j - 1] - p.b[j - 1]);
    const double rj = transpose_antidiag ? p.r[p.n - j] : p.r[j - 1];
    const double root = std::sqrt(rj * rj + dj * dj);
    const double mid = 0.5 * (p.a[j - 1] + p.b[j - 1]);
    out.push_back(mid - root);
    out.push_back(mid + root);
  }
  return out;
}

}  // namespace

std::vector<double> xstate_spectrum(const XStateParams& params) {
  return xstate_pair_spectrum(params, false);
}

std::vector<double> xstate_pt_spectrum(const XStateParams& params) {
  return xstate_pair_spectrum(params, true);
}

XStateParams xstate_with_k_negatives(std::size_t n, std::size_t k) {
  if (n < 2) throw BadSpec("need n >= 2");
  if (k < 1 || k > n / 2) throw BadSpec("need 1 <= k <= floor(n/2)");
  XStateParams p;
  p.n = n;
  p.a.assign(n, 1.0);
  p.b.assign(n, 1.0);
  p.r.assign(n, 0.0);
  p.theta.assign(n, 0.0);
  for (std::size_t j = 1; j <= k; ++j) {
    // Mirrored slot n+1-j carries weight 4 with antidiagonal 2, so that
    // sqrt(a_{n+1-j} b_{n+1-j}) = 4 >= r_{n+1-j} = 2 > sqrt(a_j b_j) = 1.
    p.a[n - j] = 4.0;
    p.b[n - j] = 4.0;
    p.r[n - j] = 2.0;
  }
  return p;
}

namespace {

// Outer product accumulation rho += v v^dagger for an exact 0/1-pattern vector.
void add_outer(Matrix& m, const std::vector<GaussianRational>& v) {
  auto& e = m.exact_entries();
  const std::size_t d = m.dim();
  for (std::size_t p = 0; p < d; ++p) {
    if (v[p].is_zero()) continue;
    for (std::size_t q = 0; q < d; ++q) {
      e[p * d + q] = e[p * d + q] + v[p] * v[q].conj();
    }
  }
}

std::vector<GaussianRational> basis_sum(std::size_t dim, std::initializer_list<std::size_t> idx) {
  std::vector<GaussianRational> v(dim);
  for (std::size_t i : idx) v[i] = GaussianRational(1);
  return v;
}

}  // namespace

std::vector<Example2x3> paper_examples_2x3() {
  BipartiteShape shape(2, 3);
  const std::size_t d = 6;
  // Basis order |00>,|01>,|02>,|10>,|11>,|12>.
  Matrix bell(d, Mode::Exact);
  add_outer(bell, basis_sum(d, {0, 4}));

  Matrix rho2 = bell;
  add_outer(rho2, basis_sum(d, {2}));

  Matrix rho3 = bell;
  {
    auto& e = rho3.exact_entries();
    const GaussianRational tenth(mpq_class(1, 10), mpq_class(0));
    for (std::size_t i = 0; i < d; ++i) e[i * d + i] = e[i * d + i] + tenth;
  }

  Matrix rho4 = bell;
  add_outer(rho4, basis_sum(d, {1, 5}));

  return {
      {HermitianMatrix::trusted(std::move(bell)), shape, Inertia{1, 2, 3}},
      {HermitianMatrix::trusted(std::move(rho2)), shape, Inertia{1, 1, 4}},
      {HermitianMatrix::trusted(std::move(rho3)), shape, Inertia{1, 0, 5}},
      {HermitianMatrix::trusted(std::move(rho4)), shape, Inertia{2, 0, 4}},
  };
}

HermitianMatrix diagonal_separable(std::size_t m, std::size_t n, std::size_t p) {
  BipartiteShape shape(m, n);
  if (p < 1 || p > shape.dim()) throw BadSpec("need 1 <= p <= m*n");
  Matrix out(shape.dim(), Mode::Exact);
  auto& e = out.exact_entries();
  for (std::size_t c = 0; c < p; ++c) e[c * shape.dim() + c] = GaussianRational(1);
  return HermitianMatrix::trusted(std::move(out));
}

HermitianMatrix two_qubit_double_ew(double a, double b, double c) {
  if (!(a > 0)) throw ConstraintViolated("requires a > 0");
  if (!(b > 0)) throw ConstraintViolated("requires b > 0");
  if (!(c > 0 && c < 0.5)) throw ConstraintViolated("requires c in (0, 1/2)");
  const GaussianRational qa = GaussianRational::from_double(a);
  const GaussianRational qb = GaussianRational::from_double(b);
  const GaussianRational qc = GaussianRational::from_double(c);
  // 2(1+a) - (1+b-c)^2 < 0, checked exactly.
  const GaussianRational one(1);
  const GaussianRational two(2);
  const GaussianRational lhs = two * (one + qa) - (one + qb - qc) * (one + qb - qc);
  if (sgn(lhs.re()) >= 0) throw ConstraintViolated("requires 2(1+a) - (1+b-c)^2 < 0");

  const std::size_t d = 4;
  Matrix alpha(d, Mode::Exact);
  add_outer(alpha, basis_sum(d, {0, 3}));
  HermitianMatrix alpha_pt =
      partial_transpose(HermitianMatrix::trusted(std::move(alpha)), BipartiteShape(2, 2));

  Matrix beta(d, Mode::Exact);
  {
    auto& e = beta.exact_entries();
    e[0] = one;          // |00><00|
    e[3 * d + 3] = qa;   // a |11><11|
    // b (|01>+|10>)(h.c.) + c (|01>-|10>)(h.c.)
    e[1 * d + 1] = e[1 * d + 1] + qb + qc;
    e[2 * d + 2] = e[2 * d + 2] + qb + qc;
    e[1 * d + 2] = e[1 * d + 2] + qb - qc;
    e[2 * d + 1] = e[2 * d + 1] + qb - qc;
  }
  return alpha_pt.add(HermitianMatrix::trusted(std::move(beta)));
}

std::pair<HermitianMatrix, BipartiteShape> staircase_state(std::size_t j) {
  if (j < 2) throw BadSpec("staircase needs a second factor of dimension >= 2");
  BipartiteShape shape(2, j);
  const std::size_t d = shape.dim();
  Matrix out(d, Mode::Exact);
  // v_i = |0,i-1> + 2^i |1,i>. The partial transpose splits into the two
  // isolated cells |0,0| and |1,j-1| plus 2x2 blocks pairing |0,i> with
  // |1,i-1>; the geometric weights make every pair determinant negative,
  // which is what forces the full count of j-1 negative eigenvalues
  // (uniform weights leave the middle blocks singular).
  for (std::size_t i = 1; i < j; ++i) {
    std::vector<GaussianRational> v(d);
    v[i - 1] = GaussianRational(1);
    v[j + i] = GaussianRational(mpq_class(1) << i, mpq_class(0));
    add_outer(out, v);
  }
  HermitianMatrix state = HermitianMatrix::trusted(std::move(out));
  const Inertia expected{j - 1, 0, j + 1};
  if (inertia_exact(partial_transpose(state, shape)) != expected) {
    throw Error("staircase seed failed its inertia certification");
  }
  return {std::move(state), shape};
}

}  // namespace inertia
