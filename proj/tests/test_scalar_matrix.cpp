#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "inertia/matrix.hpp"
#include "inertia/scalar.hpp"

using namespace inertia;

TEST_CASE("rational strings are canonical") {
  mpq_class q = rational_from_string("6/8");
  CHECK(rational_to_string(q) == "3/4");
  CHECK(rational_to_string(rational_from_string("-2/4")) == "-1/2");
  CHECK(rational_to_string(rational_from_string("5")) == "5/1");
  CHECK_THROWS_AS(rational_from_string("not-a-number"), BadSpec);
  CHECK_THROWS_AS(rational_from_string("1/0"), BadSpec);
}

TEST_CASE("exact arithmetic stays exact, float contaminates") {
  ComplexScalar a = ComplexScalar::exact_int(1, 2);
  ComplexScalar b = ComplexScalar::exact_int(3, -1);
  ComplexScalar f{cd{0.5, 0.0}};

  CHECK((a + b).is_exact());
  CHECK((a * b).is_exact());
  CHECK_FALSE((a + f).is_exact());
  CHECK_FALSE((f * b).is_exact());

  // (1+2i)(3-i) = 5 + 5i
  const GaussianRational prod = (a * b).exact();
  CHECK(prod.re() == 5);
  CHECK(prod.im() == 5);
  CHECK_THROWS_AS(f.exact(), NotExact);
}

TEST_CASE("gaussian rational division and conjugation") {
  GaussianRational z(mpq_class(1), mpq_class(1));
  GaussianRational w(mpq_class(0), mpq_class(2));
  GaussianRational q = z / w;  // (1+i)/(2i) = 1/2 - i/2
  CHECK(q.re() == mpq_class(1, 2));
  CHECK(q.im() == mpq_class(-1, 2));
  CHECK(z.conj().im() == -1);
  CHECK(z.norm2() == 2);
  CHECK_THROWS_AS(z / GaussianRational{}, BadSpec);
}

TEST_CASE("doubles convert exactly") {
  GaussianRational g = GaussianRational::from_double(0.375, -1.5);
  CHECK(g.re() == mpq_class(3, 8));
  CHECK(g.im() == mpq_class(-3, 2));
}

TEST_CASE("hermitian validation") {
  Matrix m(2, Mode::Exact);
  m.set(0, 0, ComplexScalar::exact_int(1));
  m.set(0, 1, ComplexScalar::exact_int(0, 1));
  m.set(1, 0, ComplexScalar::exact_int(0, -1));
  m.set(1, 1, ComplexScalar::exact_int(2));
  CHECK_NOTHROW(HermitianMatrix::checked(m));

  m.set(1, 0, ComplexScalar::exact_int(0, 1));
  CHECK_THROWS(HermitianMatrix::checked(m));

  Matrix bad_diag(1, Mode::Exact);
  bad_diag.set(0, 0, ComplexScalar::exact_int(0, 3));
  CHECK_THROWS(HermitianMatrix::checked(bad_diag));

  Matrix f(2, Mode::Float);
  f.set(0, 1, ComplexScalar(cd{1.0, 2.0}));
  f.set(1, 0, ComplexScalar(cd{1.0, -2.0 + 1e-14}));
  HermitianMatrix h = HermitianMatrix::checked(f);
  // Symmetrized storage.
  CHECK(h.entry(0, 1).to_complex() == std::conj(h.entry(1, 0).to_complex()));
}

TEST_CASE("matrix algebra basics") {
  Matrix a = Matrix::identity(3, Mode::Exact);
  a.set(0, 1, ComplexScalar::exact_int(2));
  Matrix b = a.multiply(a);
  CHECK(b.entry(0, 1).exact().re() == 4);
  CHECK(a.det_exact().re() == 1);

  Matrix s(2, Mode::Exact);
  s.set(0, 1, ComplexScalar::exact_int(1));
  s.set(1, 0, ComplexScalar::exact_int(1));
  CHECK(s.det_exact().re() == -1);

  Matrix singular(2, Mode::Exact);
  singular.set(0, 0, ComplexScalar::exact_int(1));
  singular.set(0, 1, ComplexScalar::exact_int(1));
  CHECK(singular.det_exact().is_zero());

  CHECK(a.to_float().mode() == Mode::Float);
  CHECK(a.to_float().to_exact().equals(a));
}

TEST_CASE("inertia components sum to dim") {
  Inertia in{1, 2, 3};
  CHECK(in.dim() == 6);
  CHECK(in.rank() == 4);
  CHECK(in == Inertia{1, 2, 3});
  CHECK(in != Inertia{1, 3, 2});
}
