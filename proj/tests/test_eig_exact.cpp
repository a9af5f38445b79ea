#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "inertia/eig.hpp"
#include "inertia/exact.hpp"
#include "inertia/sampling.hpp"

using namespace inertia;

namespace {

HermitianMatrix diag_exact(std::initializer_list<long> values) {
  Matrix m(values.size(), Mode::Exact);
  std::size_t i = 0;
  for (long v : values) {
    m.set(i, i, ComplexScalar::exact_int(v));
    ++i;
  }
  return HermitianMatrix::checked(m);
}

HermitianMatrix random_exact_hermitian(std::size_t dim, Rng& rng) {
  Matrix m(dim, Mode::Exact);
  for (std::size_t i = 0; i < dim; ++i) {
    const long di = static_cast<long>(rng.uniform() * 9) - 4;
    m.set(i, i, ComplexScalar::exact_int(di));
    for (std::size_t j = i + 1; j < dim; ++j) {
      const long re = static_cast<long>(rng.uniform() * 9) - 4;
      const long im = static_cast<long>(rng.uniform() * 9) - 4;
      m.set(i, j, ComplexScalar(GaussianRational(mpq_class(re, 2), mpq_class(im, 3))));
      m.set(j, i, ComplexScalar(GaussianRational(mpq_class(re, 2), mpq_class(-im, 3))));
    }
  }
  return HermitianMatrix::checked(m);
}

double reconstruction_residual(const HermitianMatrix& a, const Spectrum& s) {
  const std::size_t d = a.dim();
  const auto& v = s.eigenvectors.float_entries();
  const auto af = a.raw().to_float();
  const auto& ae = af.float_entries();
  double err2 = 0.0;
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      cd sum{0, 0};
      for (std::size_t k = 0; k < d; ++k) {
        sum += v[r * d + k] * s.eigenvalues[k] * std::conj(v[c * d + k]);
      }
      err2 += std::norm(ae[r * d + c] - sum);
    }
  }
  return std::sqrt(err2);
}

}  // namespace

TEST_CASE("identity and diagonal spectra") {
  Spectrum s = eig_hermitian(HermitianMatrix::identity(4, Mode::Float));
  for (double v : s.eigenvalues) CHECK(v == doctest::Approx(1.0));

  Spectrum d = eig_hermitian(diag_exact({-2, 0, 5}));
  CHECK(d.eigenvalues[0] == doctest::Approx(-2.0));
  CHECK(d.eigenvalues[1] == doctest::Approx(0.0));
  CHECK(d.eigenvalues[2] == doctest::Approx(5.0));
}

TEST_CASE("spectrum invariants on random hermitians") {
  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t dim = 2 + trial % 7;
    HermitianMatrix a = random_state_hs(dim, rng).sub(random_state_hs(dim, rng));
    const Spectrum s = eig_hermitian(a);

    const double fro = a.raw().frobenius();
    CHECK(reconstruction_residual(a, s) <= 1e-10 * std::max(1.0, fro));

    // Orthonormal columns.
    const auto& v = s.eigenvectors.float_entries();
    for (std::size_t c1 = 0; c1 < dim; ++c1) {
      for (std::size_t c2 = 0; c2 < dim; ++c2) {
        cd ip{0, 0};
        for (std::size_t r = 0; r < dim; ++r) ip += std::conj(v[r * dim + c1]) * v[r * dim + c2];
        CHECK(std::abs(ip - (c1 == c2 ? cd{1, 0} : cd{0, 0})) <= 1e-10);
      }
    }

    // Ascending order and trace identity.
    double sum = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
      sum += s.eigenvalues[k];
      if (k) CHECK(s.eigenvalues[k - 1] <= s.eigenvalues[k]);
    }
    CHECK(std::abs(sum - a.raw().trace().to_complex().real()) <= 1e-9 * std::max(1.0, fro));
  }
}

TEST_CASE("sweep budget enforces convergence errors") {
  Rng rng(5);
  HermitianMatrix a = random_state_hs(6, rng);
  CHECK_THROWS_AS(eig_hermitian(a, 0), NonConvergence);
}

TEST_CASE("float inertia counts at a relative threshold") {
  Matrix z(6, Mode::Float);
  CHECK(inertia_float(HermitianMatrix::checked(z)) == Inertia{0, 6, 0});
  CHECK(inertia_float(diag_exact({-2, 0, 5}).to_float()) == Inertia{1, 1, 1});
  CHECK_THROWS_AS(inertia_float(diag_exact({1}), -1.0), BadSpec);
}

TEST_CASE("exact inertia by congruence diagonalization") {
  CHECK(inertia_exact(diag_exact({3, -1, 0})) == Inertia{1, 1, 1});

  // Zero diagonal with an off-diagonal pair splits into +1/-1.
  Matrix anti(2, Mode::Exact);
  anti.set(0, 1, ComplexScalar::exact_int(1));
  anti.set(1, 0, ComplexScalar::exact_int(1));
  CHECK(inertia_exact(HermitianMatrix::checked(anti)) == Inertia{1, 0, 1});

  Matrix antii(2, Mode::Exact);
  antii.set(0, 1, ComplexScalar::exact_int(0, 1));
  antii.set(1, 0, ComplexScalar::exact_int(0, -1));
  CHECK(inertia_exact(HermitianMatrix::checked(antii)) == Inertia{1, 0, 1});

  CHECK_THROWS_AS(inertia_exact(HermitianMatrix::identity(2, Mode::Float)), NotExact);
}

TEST_CASE("float and exact inertia agree away from the threshold") {
  Rng rng(123);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 2 + trial % 7;  // up to 8
    HermitianMatrix a = random_exact_hermitian(dim, rng);
    const Spectrum s = eig_hermitian(a);
    double min_nonzero = 1e9;
    for (double v : s.eigenvalues) {
      if (std::abs(v) > 1e-9) min_nonzero = std::min(min_nonzero, std::abs(v));
    }
    if (min_nonzero < 1e-6) continue;  // generator filter
    CHECK(inertia_float(a, 1e-9) == inertia_exact(a));
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("congruence preserves exact inertia") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    HermitianMatrix a = random_exact_hermitian(6, rng);
    Matrix s(6, Mode::Exact);
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        s.set(i, j, ComplexScalar::exact_int(static_cast<long>(rng.uniform() * 5) - 2,
                                             static_cast<long>(rng.uniform() * 3) - 1));
      }
    }
    if (s.det_exact().is_zero()) continue;
    CHECK(inertia_exact(congruence(a, s)) == inertia_exact(a));
  }

  HermitianMatrix a = diag_exact({1, -1});
  Matrix scale(2, Mode::Exact);
  scale.set(0, 0, ComplexScalar::exact_int(2));
  scale.set(1, 1, ComplexScalar::exact_int(3));
  HermitianMatrix b = congruence(a, scale);
  CHECK(b.entry(0, 0).exact().re() == 4);
  CHECK(b.entry(1, 1).exact().re() == -9);
  CHECK(inertia_exact(b) == Inertia{1, 0, 1});

  CHECK(congruence(a, Matrix::identity(2, Mode::Exact)).equals(a));

  Matrix zero(2, Mode::Exact);
  CHECK_THROWS_AS(congruence(a, zero), Singular);
}
