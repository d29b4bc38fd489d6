#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "hororadon/funcspace.hpp"
#include "hororadon/radon.hpp"

using namespace hororadon;

namespace {

double chart_distance(const PointY& a, const PointY& b) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(a.x[i] - b.x[i]));
  return d;
}

// independent oracle for int_Y f dphi ds: periodic trapezoid in phi, Simpson in s
double chart_integral(const FunctionOnY& f, double s_max) {
  const int nphi = 256, ns = 4000;
  const double hs = 2.0 * s_max / ns;
  double acc = 0.0;
  for (int j = 0; j <= ns; ++j) {
    const double s = -s_max + j * hs;
    double row = 0.0;
    for (int k = 0; k < nphi; ++k) row += f(PointY::from_chart(2.0 * M_PI * k / nphi, s)).real();
    row *= 2.0 * M_PI / nphi;
    acc += row * ((j == 0 || j == ns) ? 1.0 : (j % 2 ? 4.0 : 2.0));
  }
  return acc * hs / 3.0;
}

}  // namespace

TEST_CASE("chart and ambient coordinates") {
  const PointY y = PointY::from_chart(1.2, -0.7);
  CHECK(y.constraint_residual() < 1e-15);
  const PointY z = PointY::from_ambient(y.x[0], y.x[1], y.x[2]);
  CHECK(z.phi == doctest::Approx(1.2));
  CHECK(z.s == doctest::Approx(-0.7));
  CHECK(base_point().x[1] == 1.0);
  CHECK(antipode(y).x[2] == doctest::Approx(0.7));
}

TEST_CASE("embedding, action and section") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    const PointY y = PointY::from_chart(3.0 * u(rng), 2.0 * u(rng));
    CHECK(chart_distance(iota(section(y)), y) < 1e-12);
    const GroupElement g = rotation(u(rng)) * cartan(u(rng)) * unipotent(u(rng));
    const GroupElement h = rotation(u(rng)) * cartan(0.5 * u(rng));
    CHECK(chart_distance(act(g, iota(h)), iota(g * h)) < 1e-10 * std::max(1.0, g.frobenius2() * h.frobenius2()));
    // the stabilizer of the base point is SO(1,1)
    CHECK(chart_distance(act(hyperbolic(u(rng)), base_point()), base_point()) < 1e-12);
  }
  CHECK(chart_distance(act(weyl(), base_point()), antipode(base_point())) < 1e-15);
}

TEST_CASE("horocycles are N-orbits through the chart base") {
  for (double angle : {0.0, 1.3, 4.0})
    for (double s : {-2.0, 0.0, 0.9, 2.5})
      for (double x : {-3.0, -0.2, 0.0, 1.7}) {
        const HoroPoint xi(angle, s);
        const PointY direct = act(xi.base() * unipotent(x), base_point());
        CHECK(chart_distance(horocycle(xi, x), direct) < 1e-10 * std::max(1.0, std::exp(2 * std::abs(s)) * (1 + x * x)));
      }
  const HoroPoint w(-0.5, 1.0);
  CHECK(w.angle == doctest::Approx(2.0 * M_PI - 0.5));
  CHECK_THROWS_AS(HoroPoint(std::nan(""), 0.0), InvalidArgument);
  const HoroPoint back = horo_point(HoroPoint(2.2, -0.4).base() * unipotent(3.0));
  CHECK(back.angle == doctest::Approx(2.2));
  CHECK(back.s == doctest::Approx(-0.4));
}

TEST_CASE("invariant integral against a chart oracle") {
  const FunctionOnY f = gaussian_bump(PointY::from_chart(0.3, 0.5), 1.0);
  const QuadResult r = invariant_integral(f, QuadratureSpec{});
  CHECK(r.value.real() == doctest::Approx(chart_integral(f, 8.0)).epsilon(1e-10));
  CHECK(invariant_l1(scaled(f, cplx(0.0, -2.0)), QuadratureSpec{}).value.real() ==
        doctest::Approx(2.0 * r.value.real()).epsilon(1e-12));
}

TEST_CASE("open AN-orbit measure carries a factor two against dphi ds") {
  const FunctionOnY f = gaussian_bump(PointY::from_chart(1.0, -0.4), 0.8);
  const QuadratureSpec q;
  const double total = invariant_integral(f, q).value.real();
  // int_Y f = 2 [ int int f(a_t n_x y0) + f(-a_t n_x y0) dx dt ]: brute force over (t, x)
  // iota(a_t n_x) = (x, (e^{2t}(1 - x^2) + e^{-2t}) / 2, ...) concentrates at x = +-1 with width e^{-2t};
  // each half-line uses x = +-(1 - e^{-2t} v). Slices decay like e^{-2t}, closed-form tail past T.
  auto orbit = [&](double sign) {
    auto slice = [&](double t) {
      const double h = std::exp(-2.0 * t);
      cplx acc{};
      for (double side : {1.0, -1.0})
        acc += h * integrate(
                       [&](double v) {
                         const PointY y = act(cartan(t) * unipotent(side * (1.0 - h * v)), base_point());
                         return f(sign > 0 ? y : antipode(y));
                       },
                       -std::numeric_limits<double>::infinity(), 1.0 / h, q)
                       .value;
      return acc;
    };
    const double T = 8.0;
    return integrate(slice, -8.0, T, q).value.real() + 0.5 * slice(T).real();
  };
  CHECK(total == doctest::Approx(2.0 * (orbit(1.0) + orbit(-1.0))).epsilon(1e-9));
}

TEST_CASE("wave operator eigenfunctions") {
  for (int n : {2, 3, 5}) {
    const FunctionOnY f = discrete_series(n);
    for (const PointY& y : {PointY::from_chart(0.4, -1.0), PointY::from_chart(2.0, 0.3), PointY::from_chart(5.0, 2.0)}) {
      const cplx w = wave_operator(f, y);
      CHECK(std::abs(w - double(n * (1 - n)) * f(y)) < 1e-6 * std::abs(f(y)) * n * n);
    }
  }
}

TEST_CASE("lie derivative of a function of x3") {
  // E acts on y0 = (0, 1, 0) with velocity Ad-derivative; compare with a difference quotient along exp(-tE)
  const FunctionOnY f = custom_function("x3", [](const PointY& y) { return cplx(y.x[2]); }, 0.0, 0.0);
  const PointY y = PointY::from_chart(0.7, 0.2);
  const double h = 1e-5;
  const double fd = (act(expm(lie_E() * -h), y).x[2] - act(expm(lie_E() * h), y).x[2]) / (2 * h);
  const Derivative d = lie_derivative(f, lie_E(), y);
  CHECK(d.value.real() == doctest::Approx(fd).epsilon(1e-8));
  CHECK(d.error < 1e-6);
}
