#include "inertia/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace inertia {

Matrix::Matrix(std::size_t dim, Mode mode) : dim_(dim), mode_(mode) {
  if (mode_ == Mode::Exact) {
    ex_.assign(dim_ * dim_, GaussianRational{});
  } else {
    fl_.assign(dim_ * dim_, cd{0.0, 0.0});
  }
}

Matrix Matrix::identity(std::size_t dim, Mode mode) {
  Matrix m(dim, mode);
  for (std::size_t i = 0; i < dim; ++i) {
    if (mode == Mode::Exact) {
      m.ex_[i * dim + i] = GaussianRational(1);
    } else {
      m.fl_[i * dim + i] = cd{1.0, 0.0};
    }
  }
  return m;
}

ComplexScalar Matrix::entry(std::size_t i, std::size_t j) const {
  if (mode_ == Mode::Exact) {
    return {ex_[i * dim_ + j]};
  }
  return {fl_[i * dim_ + j]};
}

void Matrix::set(std::size_t i, std::size_t j, const ComplexScalar& v) {
  if (mode_ == Mode::Exact) {
    ex_[i * dim_ + j] = v.exact();
  } else {
    fl_[i * dim_ + j] = v.to_complex();
  }
}

const std::vector<GaussianRational>& Matrix::exact_entries() const {
  if (mode_ != Mode::Exact) throw NotExact("matrix is in float mode");
  return ex_;
}

const std::vector<cd>& Matrix::float_entries() const {
  if (mode_ != Mode::Float) throw Error("matrix is in exact mode; convert with to_float()");
  return fl_;
}

std::vector<GaussianRational>& Matrix::exact_entries() {
  if (mode_ != Mode::Exact) throw NotExact("matrix is in float mode");
  return ex_;
}

std::vector<cd>& Matrix::float_entries() {
  if (mode_ != Mode::Float) throw Error("matrix is in exact mode; convert with to_float()");
  return fl_;
}

Matrix Matrix::to_float() const {
  if (mode_ == Mode::Float) return *this;
  Matrix m(dim_, Mode::Float);
  for (std::size_t k = 0; k < ex_.size(); ++k) m.fl_[k] = ex_[k].to_complex();
  return m;
}

Matrix Matrix::to_exact() const {
  if (mode_ == Mode::Exact) return *this;
  Matrix m(dim_, Mode::Exact);
  for (std::size_t k = 0; k < fl_.size(); ++k) {
    m.ex_[k] = GaussianRational::from_double(fl_[k].real(), fl_[k].imag());
  }
  return m;
}

namespace {

template <class T>
void check_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw ShapeMismatch("matrix dimension mismatch");
}

template <class T>
std::vector<T> mat_mul(const std::vector<T>& a, const std::vector<T>& b, std::size_t d) {
  std::vector<T> out(d * d, T{});
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const T& aik = a[i * d + k];
      if constexpr (std::is_same_v<T, GaussianRational>) {
        if (aik.is_zero()) continue;
      }
      for (std::size_t j = 0; j < d; ++j) {
        out[i * d + j] = out[i * d + j] + aik * b[k * d + j];
      }
    }
  }
  return out;
}

}  // namespace

Matrix Matrix::multiply(const Matrix& o) const {
  check_same_dim<int>(dim_, o.dim_);
  if (mode_ == Mode::Exact && o.mode_ == Mode::Exact) {
    Matrix m(dim_, Mode::Exact);
    m.ex_ = mat_mul(ex_, o.ex_, dim_);
    return m;
  }
  Matrix a = to_float(), b = o.to_float();
  Matrix m(dim_, Mode::Float);
  m.fl_ = mat_mul(a.fl_, b.fl_, dim_);
  return m;
}

Matrix Matrix::add(const Matrix& o) const {
  check_same_dim<int>(dim_, o.dim_);
  if (mode_ == Mode::Exact && o.mode_ == Mode::Exact) {
    Matrix m(dim_, Mode::Exact);
    for (std::size_t k = 0; k < ex_.size(); ++k) m.ex_[k] = ex_[k] + o.ex_[k];
    return m;
  }
  Matrix a = to_float(), b = o.to_float();
  Matrix m(dim_, Mode::Float);
  for (std::size_t k = 0; k < a.fl_.size(); ++k) m.fl_[k] = a.fl_[k] + b.fl_[k];
  return m;
}

Matrix Matrix::sub(const Matrix& o) const { return add(o.scaled(ComplexScalar::exact_int(-1))); }

Matrix Matrix::scaled(const ComplexScalar& c) const {
  if (mode_ == Mode::Exact && c.is_exact()) {
    Matrix m(dim_, Mode::Exact);
    for (std::size_t k = 0; k < ex_.size(); ++k) m.ex_[k] = ex_[k] * c.exact();
    return m;
  }
  Matrix a = to_float();
  cd f = c.to_complex();
  Matrix m(dim_, Mode::Float);
  for (std::size_t k = 0; k < a.fl_.size(); ++k) m.fl_[k] = a.fl_[k] * f;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(dim_, mode_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (mode_ == Mode::Exact) {
        m.ex_[j * dim_ + i] = ex_[i * dim_ + j].conj();
      } else {
        m.fl_[j * dim_ + i] = std::conj(fl_[i * dim_ + j]);
      }
    }
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(dim_, mode_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (mode_ == Mode::Exact) {
        m.ex_[j * dim_ + i] = ex_[i * dim_ + j];
      } else {
        m.fl_[j * dim_ + i] = fl_[i * dim_ + j];
      }
    }
  }
  return m;
}

Matrix Matrix::conj_entries() const {
  Matrix m(dim_, mode_);
  for (std::size_t k = 0; k < dim_ * dim_; ++k) {
    if (mode_ == Mode::Exact) {
      m.ex_[k] = ex_[k].conj();
    } else {
      m.fl_[k] = std::conj(fl_[k]);
    }
  }
  return m;
}

ComplexScalar Matrix::trace() const {
  if (mode_ == Mode::Exact) {
    GaussianRational t;
    for (std::size_t i = 0; i < dim_; ++i) t = t + ex_[i * dim_ + i];
    return {t};
  }
  cd t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += fl_[i * dim_ + i];
  return {t};
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (std::size_t k = 0; k < dim_ * dim_; ++k) {
    cd v = (mode_ == Mode::Exact) ? ex_[k].to_complex() : fl_[k];
    m = std::max(m, std::abs(v));
  }
  return m;
}

double Matrix::frobenius() const {
  double s = 0.0;
  for (std::size_t k = 0; k < dim_ * dim_; ++k) {
    cd v = (mode_ == Mode::Exact) ? ex_[k].to_complex() : fl_[k];
    s += std::norm(v);
  }
  return std::sqrt(s);
}

bool Matrix::equals(const Matrix& o) const {
  if (dim_ != o.dim_ || mode_ != o.mode_) return false;
  if (mode_ == Mode::Exact) return ex_ == o.ex_;
  return fl_ == o.fl_;
}

double Matrix::max_abs_diff(const Matrix& o) const {
  if (dim_ != o.dim_) throw ShapeMismatch("matrix dimension mismatch");
  Matrix a = to_float(), b = o.to_float();
  double m = 0.0;
  for (std::size_t k = 0; k < a.fl_.size(); ++k) m = std::max(m, std::abs(a.fl_[k] - b.fl_[k]));
  return m;
}

GaussianRational Matrix::det_exact() const {
  if (mode_ != Mode::Exact) throw NotExact("determinant requires exact mode");
  std::vector<GaussianRational> w = ex_;
  const std::size_t d = dim_;
  GaussianRational det(1);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && w[piv * d + col].is_zero()) ++piv;
    if (piv == d) return GaussianRational{};
    if (piv != col) {
      for (std::size_t j = 0; j < d; ++j) std::swap(w[piv * d + j], w[col * d + j]);
      det = -det;
    }
    const GaussianRational p = w[col * d + col];
    det = det * p;
    for (std::size_t i = col + 1; i < d; ++i) {
      if (w[i * d + col].is_zero()) continue;
      GaussianRational f = w[i * d + col] / p;
      for (std::size_t j = col; j < d; ++j) {
        w[i * d + j] = w[i * d + j] - f * w[col * d + j];
      }
    }
  }
  return det;
}

HermitianMatrix HermitianMatrix::checked(Matrix m) {
  const std::size_t d = m.dim();
  if (m.is_exact()) {
    const auto& e = m.exact_entries();
    for (std::size_t i = 0; i < d; ++i) {
      if (!e[i * d + i].is_real()) throw Error("hermitian invariant: diagonal must be real");
      for (std::size_t j = i + 1; j < d; ++j) {
        if (e[i * d + j] != e[j * d + i].conj()) {
          throw Error("hermitian invariant: entries (i,j) and (j,i) are not conjugate");
        }
      }
    }
    return HermitianMatrix(std::move(m));
  }
  auto& f = m.float_entries();
  const double tol = 1e-12 * std::max(1.0, m.max_abs());
  for (std::size_t i = 0; i < d; ++i) {
    if (std::abs(f[i * d + i].imag()) > tol) {
      throw Error("hermitian invariant: diagonal imaginary part too large");
    }
    for (std::size_t j = i; j < d; ++j) {
      if (std::abs(f[i * d + j] - std::conj(f[j * d + i])) > tol) {
        throw Error("hermitian invariant: asymmetry exceeds tolerance");
      }
    }
  }
  // Symmetrize so downstream kernels see an exactly self-adjoint matrix.
  for (std::size_t i = 0; i < d; ++i) {
    f[i * d + i] = cd{f[i * d + i].real(), 0.0};
    for (std::size_t j = i + 1; j < d; ++j) {
      cd v = 0.5 * (f[i * d + j] + std::conj(f[j * d + i]));
      f[i * d + j] = v;
      f[j * d + i] = std::conj(v);
    }
  }
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::trusted(Matrix m) { return HermitianMatrix(std::move(m)); }

HermitianMatrix HermitianMatrix::zero(std::size_t dim, Mode mode) {
  return HermitianMatrix(Matrix(dim, mode));
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim, Mode mode) {
  return HermitianMatrix(Matrix::identity(dim, mode));
}

}  // namespace inertia
