#include "inertia/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace inertia {

double Spectrum::spectral_radius() const {
  double s = 0.0;
  for (double v : eigenvalues) s = std::max(s, std::abs(v));
  return s;
}

namespace {

double offdiag_frobenius(const std::vector<cd>& a, std::size_t d) {
  double s = 0.0;
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = p + 1; q < d; ++q) s += std::norm(a[p * d + q]);
  }
  return std::sqrt(2.0 * s);
}

}  // namespace

Spectrum eig_hermitian(const HermitianMatrix& input, int max_sweeps) {
  const std::size_t d = input.dim();
  Matrix work = input.raw().to_float();
  std::vector<cd>& a = work.float_entries();
  Matrix vmat = Matrix::identity(d, Mode::Float);
  std::vector<cd>& v = vmat.float_entries();

  const double fro = work.frobenius();
  const double stop = 1e-13 * std::max(1.0, fro);

  bool converged = (d <= 1) || offdiag_frobenius(a, d) <= stop;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const cd apq = a[p * d + q];
        const double mag = std::abs(apq);
        if (mag < 1e-300) {
          a[p * d + q] = a[q * d + p] = cd{0.0, 0.0};
          continue;
        }
        const double app = a[p * d + p].real();
        const double aqq = a[q * d + q].real();
        const cd phase = apq / mag;
        const double tau = (aqq - app) / (2.0 * mag);
        double t;
        if (tau >= 0.0) {
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        } else {
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cd jp = c * phase;   // J(p,p)
        const cd jq = s * phase;   // J(p,q); J(q,p) = -s, J(q,q) = c

        for (std::size_t k = 0; k < d; ++k) {
          if (k == p || k == q) continue;
          const cd akp = a[k * d + p];
          const cd akq = a[k * d + q];
          a[k * d + p] = akp * jp - akq * s;
          a[k * d + q] = akp * jq + akq * c;
          a[p * d + k] = std::conj(a[k * d + p]);
          a[q * d + k] = std::conj(a[k * d + q]);
        }
        a[p * d + p] = cd{app - t * mag, 0.0};
        a[q * d + q] = cd{aqq + t * mag, 0.0};
        a[p * d + q] = a[q * d + p] = cd{0.0, 0.0};

        for (std::size_t k = 0; k < d; ++k) {
          const cd vkp = v[k * d + p];
          const cd vkq = v[k * d + q];
          v[k * d + p] = vkp * jp - vkq * s;
          v[k * d + q] = vkp * jq + vkq * c;
        }
      }
    }
    converged = offdiag_frobenius(a, d) <= stop;
  }
  if (!converged) {
    throw NonConvergence("jacobi eigensolver exceeded its sweep budget");
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(d);
  for (std::size_t i = 0; i < d; ++i) diag[i] = a[i * d + i].real();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });

  Spectrum out{std::vector<double>(d), Matrix(d, Mode::Float)};
  std::vector<cd>& evec = out.eigenvectors.float_entries();
  for (std::size_t col = 0; col < d; ++col) {
    out.eigenvalues[col] = diag[order[col]];
    for (std::size_t k = 0; k < d; ++k) evec[k * d + col] = v[k * d + order[col]];
  }
  return out;
}

Inertia inertia_of_eigenvalues(const std::vector<double>& eigenvalues, double tol) {
  double radius = 0.0;
  for (double v : eigenvalues) radius = std::max(radius, std::abs(v));
  const double cut = tol * std::max(1.0, radius);
  Inertia in;
  for (double v : eigenvalues) {
    if (v < -cut) {
      ++in.neg;
    } else if (v > cut) {
      ++in.pos;
    } else {
      ++in.zero;
    }
  }
  return in;
}

Inertia inertia_float(const HermitianMatrix& a, double tol) {
  if (tol <= 0.0) throw BadSpec("tolerance must be positive");
  return inertia_of_eigenvalues(eig_hermitian(a).eigenvalues, tol);
}

double Matrix::condition_estimate() const {
  Matrix f = to_float();
  HermitianMatrix gram = HermitianMatrix::trusted(f.adjoint().multiply(f));
  Spectrum s = eig_hermitian(gram);
  const double smax = std::sqrt(std::max(0.0, s.eigenvalues.back()));
  const double smin = std::sqrt(std::max(0.0, s.eigenvalues.front()));
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return smax / smin;
}

}  // namespace inertia
