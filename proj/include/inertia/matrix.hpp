#pragma once

#include <cstddef>
#include <vector>

#include "inertia/scalar.hpp"

namespace inertia {

/// Triple (neg, zero, pos): counts of negative, zero and positive eigenvalues.
struct Inertia {
  std::size_t neg = 0;
  std::size_t zero = 0;
  std::size_t pos = 0;

  std::size_t dim() const { return neg + zero + pos; }
  std::size_t rank() const { return neg + pos; }
  bool operator==(const Inertia&) const = default;
};

/// Dense square complex matrix with homogeneous storage in one of two modes:
/// exact Gaussian-rational entries or complex-double entries. Row-major.
class Matrix {
 public:
  Matrix(std::size_t dim, Mode mode);
  static Matrix identity(std::size_t dim, Mode mode);

  std::size_t dim() const { return dim_; }
  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::Exact; }

  ComplexScalar entry(std::size_t i, std::size_t j) const;
  /// The scalar mode must match the matrix mode.
  void set(std::size_t i, std::size_t j, const ComplexScalar& v);

  const std::vector<GaussianRational>& exact_entries() const;
  const std::vector<cd>& float_entries() const;
  std::vector<GaussianRational>& exact_entries();
  std::vector<cd>& float_entries();

  /// Lossless in Float mode; converts rationals to doubles in Exact mode.
  Matrix to_float() const;
  /// Exact per-entry conversion (doubles are rationals). Mostly for tests.
  Matrix to_exact() const;

  Matrix multiply(const Matrix& o) const;
  Matrix add(const Matrix& o) const;
  Matrix sub(const Matrix& o) const;
  Matrix scaled(const ComplexScalar& c) const;
  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conj_entries() const;

  ComplexScalar trace() const;
  double max_abs() const;
  double frobenius() const;

  /// Exact entrywise equality (Exact mode) or bitwise double equality (Float).
  bool equals(const Matrix& o) const;
  /// max |a_ij - b_ij| over all entries, computed in doubles.
  double max_abs_diff(const Matrix& o) const;

  /// Determinant over the rationals; requires Exact mode.
  GaussianRational det_exact() const;
  /// Smallest/largest singular value ratio; requires Float-convertible input.
  double condition_estimate() const;

 private:
  std::size_t dim_;
  Mode mode_;
  std::vector<GaussianRational> ex_;
  std::vector<cd> fl_;
};

/// Dense self-adjoint matrix. `checked` validates the invariant
/// (exact conjugate symmetry in Exact mode, 1e-12 * max|entry| in Float mode,
/// where the float storage is then symmetrized exactly); `trusted` is for
/// internal construction sites that preserve the invariant structurally.
class HermitianMatrix {
 public:
  static HermitianMatrix checked(Matrix m);
  static HermitianMatrix trusted(Matrix m);
  static HermitianMatrix zero(std::size_t dim, Mode mode);
  static HermitianMatrix identity(std::size_t dim, Mode mode);

  std::size_t dim() const { return m_.dim(); }
  Mode mode() const { return m_.mode(); }
  bool is_exact() const { return m_.is_exact(); }
  ComplexScalar entry(std::size_t i, std::size_t j) const { return m_.entry(i, j); }

  const Matrix& raw() const { return m_; }
  HermitianMatrix to_float() const { return HermitianMatrix(m_.to_float()); }

  HermitianMatrix add(const HermitianMatrix& o) const { return trusted(m_.add(o.m_)); }
  HermitianMatrix sub(const HermitianMatrix& o) const { return trusted(m_.sub(o.m_)); }
  /// c must be real for the result to stay Hermitian; not rechecked.
  HermitianMatrix scaled_real(const ComplexScalar& c) const { return trusted(m_.scaled(c)); }

  bool equals(const HermitianMatrix& o) const { return m_.equals(o.m_); }

 private:
  explicit HermitianMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

}  // namespace inertia
