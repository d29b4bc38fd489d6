#include <doctest.h>

#include <cmath>

#include "hororadon/funcspace.hpp"

using namespace hororadon;

TEST_CASE("family parsing") {
  const FunctionOnY f = parse_family("ds:3");
  CHECK(f.id == "ds:3");
  CHECK(f.series_order == 3);
  CHECK(*f.eigenvalue == doctest::Approx(-6.0));
  const PointY y = PointY::from_chart(0.9, 0.4);
  CHECK(std::abs(f(y) - std::pow(cplx(y.x[0], y.x[1]), -3)) < 1e-15);
  const FunctionOnY b = parse_family("bump:0,1,0,1");
  CHECK(b(base_point()).real() == doctest::Approx(1.0));
  CHECK(parse_family("zero")(y) == cplx(0.0));
  const FunctionOnY m = parse_family("mode:2,1.5");
  CHECK(std::abs(m(y) - std::exp(cplx(0.0, 1.8)) * std::exp(-0.16 / 2.25)) < 1e-15);
  CHECK_THROWS_AS(parse_family("ds:1"), InvalidArgument);
  CHECK_THROWS_AS(parse_family("ds:x"), InvalidArgument);
  CHECK_THROWS_AS(parse_family("bump:0,2,0,1"), InvalidArgument);  // off the hyperboloid
  CHECK_THROWS_AS(parse_family("bump:0,1,0"), InvalidArgument);
  CHECK_THROWS_AS(parse_family("nope:1"), InvalidArgument);
}

TEST_CASE("combinators") {
  const FunctionOnY b = gaussian_bump(PointY::from_chart(0.5, 0.2), 0.7);
  const PointY y = PointY::from_chart(1.0, -0.3);
  const GroupElement g = rotation(0.4) * cartan(0.3);
  CHECK(std::abs(translate(b, g)(act(g, y)) - b(y)) < 1e-14);
  CHECK(std::abs(antipodal(b)(antipode(y)) - b(y)) < 1e-15);
  CHECK(std::abs(sum(b, scaled(b, 2.0))(y) - 3.0 * b(y)) < 1e-15);
  // the holomorphic extension restricts to the function on real points
  const FunctionOnY t = translate(b, g);
  CHECK(std::abs(t.holomorphic({cplx(y.x[0]), cplx(y.x[1]), cplx(y.x[2])}) - t(y)) < 1e-13);
}

TEST_CASE("custom functions validate their declared tails") {
  auto sampler = [](const PointY& y) { return cplx(std::exp(-y.s * y.s)); };
  CHECK_NOTHROW(custom_function("g", sampler, 0.0, 0.0));
  CHECK_THROWS_AS(custom_function("g", sampler, 1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(custom_function("g", sampler, 0.0, 0.5), InvalidArgument);
  CHECK_THROWS_AS(custom_function("bad", [](const PointY&) { return cplx(INFINITY); }, 0.0, 0.0), InvalidArgument);
}

TEST_CASE("model certification") {
  for (int n : {2, 3, 4}) {
    const Certification c = certify(discrete_series(n));
    CHECK(c.pass);
    CHECK(c.eigen_residual < 1e-5);
  }
  CHECK(validation_grid().size() == 56);
  CHECK(certify(gaussian_bump(base_point(), 1.0)).pass);
}

TEST_CASE("seminorms") {
  const FunctionOnY b = gaussian_bump(base_point(), 1.0);
  const GridSpec g{Axis{0.0, 2.0 * M_PI, 8, true}, Axis{-2.0, 2.0, 5, false}};
  // order-zero, derivative-free seminorm is the weighted sup; at y0 the weight is 1 and f = 1
  CHECK(schwartz_seminorm(b, SchwartzSeminorm{{0, 0, 0}, 0}, g) >= 1.0);
  const double p1 = schwartz_seminorm(b, SchwartzSeminorm{{1, 0, 0}, 1}, g);
  CHECK(std::isfinite(p1));
  CHECK(p1 > 0.0);
  CHECK_THROWS_AS(schwartz_seminorm(b, SchwartzSeminorm{{-1, 0, 0}, 0}, g), InvalidArgument);
}

TEST_CASE("analytic continuation probe") {
  const FunctionOnY b = gaussian_bump(PointY::from_chart(0.3, 0.5), 1.0);
  const AnalyticProbe p = l1_analytic_probe(b, {lie_H()}, 0.1, QuadratureSpec{}, 2);
  CHECK(p.bounded);
  REQUIRE(p.norms.size() == 1);
  REQUIRE(p.norms[0].size() == 3);
  // zero step reproduces the L1 norm of the function itself
  CHECK(p.norms[0][0] == doctest::Approx(invariant_l1(b, QuadratureSpec{}).value.real()).epsilon(1e-10));
  const FunctionOnY c = custom_function("c", [](const PointY& y) { return cplx(std::exp(-y.s * y.s)); }, 0.0, 0.0);
  CHECK_THROWS_AS(l1_analytic_probe(c, {lie_H()}, 0.1, QuadratureSpec{}), UnsupportedFamily);
}
