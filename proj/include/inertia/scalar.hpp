#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "inertia/errors.hpp"

namespace inertia {

using cd = std::complex<double>;

enum class Mode { Exact, Float };

/// Complex number with arbitrary-precision rational real and imaginary parts.
/// Both fractions are kept canonical: lowest terms, positive denominator.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit GaussianRational(long re, long im = 0) : re_(re), im_(im) {}

  /// Exact conversion; every finite double is a rational.
  static GaussianRational from_double(double re, double im = 0.0);
  /// Parses canonical "p/q" (or plain "p") strings for each component.
  static GaussianRational from_strings(const std::string& re, const std::string& im);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }
  cd to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Canonical "p/q" string with explicit denominator.
  std::string re_str() const;
  std::string im_str() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re_ + o.re_, im_ + o.im_}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re_ - o.re_, im_ - o.im_}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
  }
  GaussianRational operator/(const GaussianRational& o) const;

  bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }

 private:
  mpq_class re_, im_;
};

/// Scalar with a dual representation: exact Gaussian rational or complex double.
/// Arithmetic between two Exact values stays Exact; anything touching a Float
/// value yields Float.
class ComplexScalar {
 public:
  ComplexScalar() : v_(GaussianRational{}) {}
  ComplexScalar(GaussianRational x) : v_(std::move(x)) {}  // NOLINT(google-explicit-constructor)
  ComplexScalar(cd x) : v_(x) {}                           // NOLINT(google-explicit-constructor)

  static ComplexScalar exact_int(long re, long im = 0) { return {GaussianRational(re, im)}; }

  Mode mode() const { return std::holds_alternative<GaussianRational>(v_) ? Mode::Exact : Mode::Float; }
  bool is_exact() const { return mode() == Mode::Exact; }

  /// Throws NotExact if the scalar is in Float mode.
  const GaussianRational& exact() const;
  cd to_complex() const;

  bool is_zero() const;
  ComplexScalar conj() const;

  ComplexScalar operator+(const ComplexScalar& o) const;
  ComplexScalar operator-(const ComplexScalar& o) const;
  ComplexScalar operator*(const ComplexScalar& o) const;
  ComplexScalar operator-() const;

  /// Exact equality for two Exact scalars, bitwise complex equality otherwise.
  bool operator==(const ComplexScalar& o) const;

 private:
  std::variant<GaussianRational, cd> v_;
};

/// mpq helper: canonical "p/q" rendering with explicit denominator.
std::string rational_to_string(const mpq_class& q);
/// Parses "p/q" or "p"; throws BadSpec on malformed input.
mpq_class rational_from_string(const std::string& s);

}  // namespace inertia
