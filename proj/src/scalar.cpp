#include "inertia/scalar.hpp"

#include <cmath>

namespace inertia {

GaussianRational GaussianRational::from_double(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw BadSpec("cannot convert non-finite double to a rational");
  }
  return {mpq_class(re), mpq_class(im)};
}

GaussianRational GaussianRational::from_strings(const std::string& re, const std::string& im) {
  return {rational_from_string(re), rational_from_string(im)};
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
  mpq_class n2 = o.norm2();
  if (sgn(n2) == 0) {
    throw BadSpec("division by zero Gaussian rational");
  }
  GaussianRational num = *this * o.conj();
  return {num.re_ / n2, num.im_ / n2};
}

std::string GaussianRational::re_str() const { return rational_to_string(re_); }
std::string GaussianRational::im_str() const { return rational_to_string(im_); }

const GaussianRational& ComplexScalar::exact() const {
  if (const auto* p = std::get_if<GaussianRational>(&v_)) {
    return *p;
  }
  throw NotExact("scalar is in float mode");
}

cd ComplexScalar::to_complex() const {
  if (const auto* p = std::get_if<GaussianRational>(&v_)) {
    return p->to_complex();
  }
  return std::get<cd>(v_);
}

bool ComplexScalar::is_zero() const {
  if (const auto* p = std::get_if<GaussianRational>(&v_)) {
    return p->is_zero();
  }
  return std::get<cd>(v_) == cd{0.0, 0.0};
}

ComplexScalar ComplexScalar::conj() const {
  if (const auto* p = std::get_if<GaussianRational>(&v_)) {
    return {p->conj()};
  }
  return {std::conj(std::get<cd>(v_))};
}

namespace {

template <class FExact, class FFloat>
ComplexScalar binary_op(const ComplexScalar& a, const ComplexScalar& b, FExact fe, FFloat ff) {
  if (a.is_exact() && b.is_exact()) {
    return {fe(a.exact(), b.exact())};
  }
  return {ff(a.to_complex(), b.to_complex())};
}

}  // namespace

ComplexScalar ComplexScalar::operator+(const ComplexScalar& o) const {
  return binary_op(*this, o, [](const auto& x, const auto& y) { return x + y; },
                   [](cd x, cd y) { return x + y; });
}

ComplexScalar ComplexScalar::operator-(const ComplexScalar& o) const {
  return binary_op(*this, o, [](const auto& x, const auto& y) { return x - y; },
                   [](cd x, cd y) { return x - y; });
}

ComplexScalar ComplexScalar::operator*(const ComplexScalar& o) const {
  return binary_op(*this, o, [](const auto& x, const auto& y) { return x * y; },
                   [](cd x, cd y) { return x * y; });
}

ComplexScalar ComplexScalar::operator-() const {
  if (const auto* p = std::get_if<GaussianRational>(&v_)) {
    return {-(*p)};
  }
  return {-std::get<cd>(v_)};
}

bool ComplexScalar::operator==(const ComplexScalar& o) const {
  if (is_exact() && o.is_exact()) {
    return exact() == o.exact();
  }
  return to_complex() == o.to_complex();
}

std::string rational_to_string(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class rational_from_string(const std::string& s) {
  try {
    mpq_class q(s);
    if (sgn(q.get_den()) == 0) {
      throw BadSpec("rational with zero denominator: " + s);
    }
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw BadSpec("malformed rational: " + s);
  }
}

}  // namespace inertia
