#include <doctest.h>

#include <cmath>
#include <random>

#include "hororadon/sl2.hpp"

using namespace hororadon;

namespace {

GroupElement sample(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return rotation(3.0 * u(rng)) * cartan(u(rng)) * unipotent(u(rng)) * opposite_unipotent(0.5 * u(rng));
}

// independent circle integral: (1/2pi) int dtheta / sqrt(e^{2t} cos^2 + e^{-2t} sin^2), periodic trapezoid
double phi0_oracle(double t) {
  const int n = 20000;
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * M_PI * k / n;
    acc += 1.0 / std::sqrt(std::exp(2 * t) * std::pow(std::cos(th), 2) + std::exp(-2 * t) * std::pow(std::sin(th), 2));
  }
  return acc / n;
}

}  // namespace

TEST_CASE("group element construction and algebra") {
  const GroupElement g(2.0, 1.0, 3.0, 2.0);
  CHECK(g.det() == doctest::Approx(1.0));
  const GroupElement r(2.0, 0.0, 0.0, 2.0);  // det 4, renormalized
  CHECK(r.a() == doctest::Approx(1.0));
  CHECK_THROWS_AS(GroupElement(1.0, 0.0, 0.0, -1.0), DomainError);
  CHECK((g * g.inverse()).max_abs_diff(identity()) < 1e-15);
  CHECK(weyl().max_abs_diff(rotation(M_PI / 2)) < 1e-15);
  CHECK(hyperbolic(0.3).max_abs_diff(GroupElement(std::cosh(0.3), std::sinh(0.3), std::sinh(0.3), std::cosh(0.3))) < 1e-15);
}

TEST_CASE("involutions") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const GroupElement g = sample(rng), h = sample(rng);
    CHECK(theta(theta(g)).max_abs_diff(g) < 1e-12);
    CHECK(tau(tau(g)).max_abs_diff(g) < 1e-12);
    CHECK(tau(g * h).max_abs_diff(tau(g) * tau(h)) < 1e-10);
  }
  // H = SO(1,1) is fixed by tau
  CHECK(tau(hyperbolic(0.7)).max_abs_diff(hyperbolic(0.7)) < 1e-15);
}

TEST_CASE("lie algebra") {
  CHECK(killing(lie_H(), lie_H()) == doctest::Approx(8.0));
  CHECK(killing(lie_E(), lie_F()) == doctest::Approx(4.0));
  const LieVec he = bracket(lie_H(), lie_E());
  CHECK(he.e == doctest::Approx(2.0));
  CHECK(he.h == doctest::Approx(0.0));
  CHECK(expm(lie_H() * 0.4).max_abs_diff(cartan(0.4)) < 1e-15);
  CHECK(expm(lie_E() * 1.5).max_abs_diff(unipotent(1.5)) < 1e-15);
  CHECK(expm(lie_Z() * 0.3).max_abs_diff(hyperbolic(0.3)) < 1e-14);
  // elliptic element: E - F generates rotations
  CHECK(expm((lie_F() + lie_E() * -1.0) * 0.8).max_abs_diff(rotation(0.8)) < 1e-14);
  const LieVec a = adjoint(cartan(0.5), lie_E());
  CHECK(a.e == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("decompositions recompose") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const GroupElement g = sample(rng);
    const Iwasawa iw = iwasawa(g);
    CHECK((rotation(iw.theta_k) * cartan(iw.s) * unipotent(iw.x)).max_abs_diff(g) < 1e-10);
    const PolarKAH p = polar_kah(g);
    CHECK(p.recompose().max_abs_diff(g) < 1e-10);
    CHECK(p.theta_k >= 0.0);
    CHECK(p.theta_k < M_PI);
    const HwanFactorization h = hwan_decompose(g);
    CHECK(h.recompose().max_abs_diff(g) < 1e-9);
    // orbit of g P: e when v1^2 > v2^2 for v = g e1
    CHECK((h.orbit == Orbit::e) == (g.a() * g.a() > g.c() * g.c()));
  }
  CHECK_THROWS_AS(hwan_decompose(GroupElement(1.0, 0.0, 1.0, 1.0)), BoundaryOrbit);
}

TEST_CASE("variety norm") {
  for (double s : {-2.0, -0.3, 0.0, 0.7, 3.0}) CHECK(variety_norm(cartan(s)) == doctest::Approx(std::sqrt(2.0) * std::abs(s)));
  // H-invariance on the right and K-invariance on the left
  CHECK(variety_norm(cartan(0.6) * hyperbolic(1.3)) == doctest::Approx(variety_norm(cartan(0.6))));
  CHECK(variety_norm(rotation(0.4) * cartan(0.6)) == doctest::Approx(variety_norm(cartan(0.6))));
  CHECK(variety_norm(identity()) == 0.0);
}

TEST_CASE("basic spherical function against the circle integral") {
  for (double t : {0.0, 0.3, 1.0, 2.5}) CHECK(phi0(cartan(t)) == doctest::Approx(phi0_oracle(t)).epsilon(1e-12));
  CHECK(phi0(identity()) == doctest::Approx(1.0));
  // bi-K-invariance
  CHECK(phi0(rotation(0.3) * cartan(0.8) * rotation(1.1)) == doctest::Approx(phi0(cartan(0.8))).epsilon(1e-13));
  CHECK(theta_weight(identity()) == doctest::Approx(1.0));
}

TEST_CASE("generic horospheres") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) CHECK(in_Gh(sample(rng)));
  CHECK(in_Gh(identity()));
  CHECK(in_Gh(weyl()));
}
