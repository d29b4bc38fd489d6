#include <doctest.h>

#include <cmath>

#include "hororadon/groupcase.hpp"

using namespace hororadon;

TEST_CASE("matrix coefficients") {
  for (int k : {1, 3, 4}) {
    const GroupFunction p = matrix_coefficient(k);
    CHECK(std::abs(p(identity()) - 1.0) < 1e-15);
    // on K: e^{i k theta}
    CHECK(std::abs(p(rotation(0.7)) - std::exp(cplx(0.0, k * 0.7))) < 1e-14);
    // on A: cosh^-k
    CHECK(std::abs(p(cartan(0.9)) - std::pow(std::cosh(0.9), -k)) < 1e-14);
  }
  CHECK_THROWS_AS(ds_coefficient(2), InvalidArgument);
  CHECK(ds_coefficient(3).tail_exponent == 3.0);
}

TEST_CASE("family parsing") {
  CHECK(parse_group_family("grpds:4").id == "grpds:4");
  CHECK(parse_group_family("zero")(cartan(1.0)) == cplx(0.0));
  CHECK(parse_group_family("grpgauss:1.5")(identity()).real() == doctest::Approx(std::exp(-2.0 / 2.25)));
  CHECK_THROWS_AS(parse_group_family("grpds:2"), InvalidArgument);
  CHECK_THROWS_AS(parse_group_family("grpgauss:-1"), InvalidArgument);
  CHECK_THROWS_AS(parse_group_family("ds:3"), InvalidArgument);
}

TEST_CASE("double unipotent integrals") {
  const QuadratureSpec q;
  // int int e^{-x^2} e^{-2 y^2} = pi / sqrt 2
  const GroupRadonValue s = group_radon(separable_gaussian(1.0, 2.0), {identity(), identity()}, q);
  CHECK(s.value.real() == doctest::Approx(M_PI / std::sqrt(2.0)).epsilon(1e-10));
  const GroupRadonValue k = group_radon(ds_coefficient(4), {cartan(0.4), rotation(0.5)}, q);
  CHECK(std::abs(k.value) < 1e-7 * k.mass);
  const FubiniCheck fc = fubini_factorization_check(matrix_gaussian(1.0), {cartan(0.4), rotation(0.5)}, q);
  CHECK(fc.residual < 1e-9);
}

TEST_CASE("Haar integrals of coefficient moduli") {
  // |phi_k(a_t)| = cosh^-k t, so the mass is 2 pi int_0^inf sinh 2t cosh^-k t dt = 4 pi / (k - 2)
  const QuadratureSpec q;
  for (int k : {3, 4}) {
    const GroupFunction p = matrix_coefficient(k);
    const GroupFunction m{"abs", [p](const GroupElement& g) { return cplx(std::abs(p(g))); }, double(k)};
    const double oracle = 4.0 * M_PI / (k - 2);
    CHECK(haar_integral_kak(m, q).value.real() == doctest::Approx(oracle).epsilon(1e-8));
    CHECK(haar_integral_kan(m, q).value.real() == doctest::Approx(oracle).epsilon(1e-8));
  }
  // 2 pi int_0^T 2 sinh t cosh^-3 t dt = 2 pi (1 - cosh^-2 T)
  for (double T : {0.5, 2.0})
    CHECK(haar_mass_to(matrix_coefficient(4), T, q) ==
          doctest::Approx(2.0 * M_PI * (1.0 - std::pow(std::cosh(T), -2))).epsilon(1e-10));
}
