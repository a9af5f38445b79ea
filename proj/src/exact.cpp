#include "inertia/exact.hpp"

#include <vector>

#include "inertia/eig.hpp"

namespace inertia {

namespace {

// Elementary congruence: row_i -= f * row_k followed by col_i -= conj(f) * col_k.
// Full-range loops; retired rows/columns are kept zero so the extra work is nil.
void eliminate(std::vector<GaussianRational>& w, std::size_t d, std::size_t i, std::size_t k,
               const GaussianRational& f) {
  for (std::size_t j = 0; j < d; ++j) {
    w[i * d + j] = w[i * d + j] - f * w[k * d + j];
  }
  const GaussianRational fc = f.conj();
  for (std::size_t r = 0; r < d; ++r) {
    w[r * d + i] = w[r * d + i] - fc * w[r * d + k];
  }
}

}  // namespace

Inertia inertia_exact(const HermitianMatrix& a) {
  if (!a.is_exact()) throw NotExact("inertia_exact requires exact entries");
  const std::size_t d = a.dim();
  std::vector<GaussianRational> w = a.raw().exact_entries();
  std::vector<std::size_t> active(d);
  for (std::size_t i = 0; i < d; ++i) active[i] = i;

  Inertia in;
  while (!active.empty()) {
    // Largest |diagonal| pivot, compared exactly; ties go to the lowest index.
    std::size_t pivot_pos = active.size();
    mpq_class best(0);
    for (std::size_t t = 0; t < active.size(); ++t) {
      const std::size_t k = active[t];
      mpq_class mag = abs(w[k * d + k].re());
      if (sgn(mag) != 0 && (pivot_pos == active.size() || cmp(mag, best) > 0)) {
        pivot_pos = t;
        best = mag;
      }
    }

    if (pivot_pos == active.size()) {
      // All active diagonal entries vanish. A nonzero off-diagonal pair, if
      // any, is lifted onto the diagonal by row_i += a_ij * row_j; pivoting
      // on the lifted entry then yields one positive and one negative pivot.
      bool found = false;
      for (std::size_t ti = 0; ti < active.size() && !found; ++ti) {
        for (std::size_t tj = ti + 1; tj < active.size() && !found; ++tj) {
          const std::size_t i = active[ti];
          const std::size_t j = active[tj];
          const GaussianRational aij = w[i * d + j];
          if (!aij.is_zero()) {
            eliminate(w, d, i, j, -aij);
            found = true;
          }
        }
      }
      if (!found) {
        in.zero += active.size();
        break;
      }
      continue;
    }

    const std::size_t k = active[pivot_pos];
    const GaussianRational p = w[k * d + k];
    if (sgn(p.re()) > 0) {
      ++in.pos;
    } else {
      ++in.neg;
    }
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
    for (std::size_t i : active) {
      const GaussianRational wik = w[i * d + k];
      if (!wik.is_zero()) {
        eliminate(w, d, i, k, wik / p);
      }
    }
    for (std::size_t j = 0; j < d; ++j) {
      w[k * d + j] = GaussianRational{};
      w[j * d + k] = GaussianRational{};
    }
  }
  return in;
}

HermitianMatrix congruence(const HermitianMatrix& a, const Matrix& s) {
  if (a.dim() != s.dim()) throw ShapeMismatch("congruence dimension mismatch");
  if (a.is_exact() && s.is_exact()) {
    if (s.det_exact().is_zero()) throw Singular("congruence matrix has zero determinant");
    return HermitianMatrix::trusted(s.multiply(a.raw()).multiply(s.adjoint()));
  }
  const double cond = s.condition_estimate();
  if (!(cond < 1e12)) throw Singular("congruence matrix is numerically singular");
  Matrix sf = s.to_float();
  Matrix b = sf.multiply(a.raw().to_float()).multiply(sf.adjoint());
  return HermitianMatrix::checked(std::move(b));
}

Inertia inertia_auto(const HermitianMatrix& a, double tol) {
  return a.is_exact() ? inertia_exact(a) : inertia_float(a, tol);
}

}  // namespace inertia
