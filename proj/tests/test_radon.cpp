#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "hororadon/radon.hpp"

using namespace hororadon;

namespace {

// independent oracle: composite Simpson along x -> xi.base() n_x y0 on a wide window
double horocycle_simpson(const FunctionOnY& f, const HoroPoint& xi, double L, int n) {
  const GroupElement b = xi.base();
  const double h = 2.0 * L / n;
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double x = -L + k * h;
    acc += f(act(b * unipotent(x), base_point())).real() * ((k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0));
  }
  return acc * h / 3.0;
}

}  // namespace

TEST_CASE("discrete series lies in the kernel") {
  const QuadratureSpec q;
  // residue anchor: at xi = (0, 0) the horocycle is x -> (x, (1 - x^2)/2 + 1/2, ...), f_2 = (x + i x2)^-2
  const RadonValue r = radon(discrete_series(2), HoroPoint(0.0, 0.0), q);
  CHECK(std::abs(r.value) < 1e-14);
  CHECK(r.mass == doctest::Approx(M_PI).epsilon(1e-12));
  for (int n : {2, 3, 5})
    for (double s : {-3.0, 0.4, 1.0, 1.0001, 3.5}) {
      const RadonValue v = radon(discrete_series(n), HoroPoint(2.1, s), q);
      CHECK(std::abs(v.value) <= 1e-12 * v.mass);
    }
}

TEST_CASE("bump transform against a Simpson oracle") {
  const FunctionOnY f = gaussian_bump(PointY::from_chart(0.3, 0.5), 1.0);
  for (double s : {-0.8, 0.0, 0.9}) {
    const HoroPoint xi(0.7, s);
    CHECK(radon(f, xi, QuadratureSpec{}).value.real() == doctest::Approx(horocycle_simpson(f, xi, 30.0, 200000)).epsilon(1e-9));
  }
  // the split path beyond s = 1 is continuous with the direct path
  const double lo = radon(f, HoroPoint(0.7, 1.0), QuadratureSpec{}).value.real();
  const double hi = radon(f, HoroPoint(0.7, 1.0 + 1e-9), QuadratureSpec{}).value.real();
  CHECK(hi == doctest::Approx(lo).epsilon(1e-7));
  CHECK(radon(f, HoroPoint(0.7, 2.5), QuadratureSpec{}).value.real() ==
        doctest::Approx(horocycle_simpson(f, HoroPoint(0.7, 2.5), 2.0, 400000)).epsilon(1e-8));
}

TEST_CASE("transform equivariance and charts") {
  const FunctionOnY f = gaussian_bump(PointY::from_chart(1.1, -0.2), 0.9);
  const QuadratureSpec q;
  const GroupElement g = cartan(0.3) * unipotent(0.8);
  const GroupElement k = rotation(0.6);
  // R(f)(g) only depends on g M_H N
  CHECK(std::abs(radon_at(f, g * unipotent(2.0), q).value - radon_at(f, g, q).value) < 1e-11);
  // left translation: R(L_k f)(g) = R(f)(k^-1 g)
  CHECK(std::abs(radon_at(translate(f, k), k * g, q).value - radon_at(f, g, q).value) < 1e-11);
  // identity chart reproduces the transform
  CHECK(std::abs(radon_translated(f, HoroChart(identity()), HoroPoint(0.4, 0.2), q).value -
                 radon(f, HoroPoint(0.4, 0.2), q).value) < 1e-11);
  // w0 chart: base x = w0 integrates along the antipodal horocycle
  const GroupElement ga = HoroPoint(0.4, 0.2).base();
  CHECK(std::abs(radon_translated(f, HoroChart(weyl()), ga * weyl(), q).value -
                 radon(antipodal(f), HoroPoint(0.4, 0.2), q).value) < 1e-10);
}

TEST_CASE("change of variables identity") {
  for (double s : {-1.5, 0.0, 2.0}) {
    CHECK(change_of_variables_check(discrete_series(2), 0.9, s, QuadratureSpec{}) < 1e-9);
    CHECK(change_of_variables_check(gaussian_bump(PointY::from_chart(0.3, 0.5), 1.0), 2.3, s, QuadratureSpec{}) < 1e-9);
  }
}

TEST_CASE("grids, csv and interpolation") {
  const FunctionOnY f = gaussian_bump(base_point(), 1.0);
  const TransformGrid t = radon_grid(f, GridSpec::xi(8, 21, -2.0, 2.0), QuadratureSpec{});
  CHECK(t.flagged_count() == 0);
  std::ostringstream os;
  t.write_csv(os);
  const std::string csv = os.str();
  CHECK(csv.rfind("phi,s,re,im,err\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 8 * 21);
  // s-major row order: second data row has the second angle at the first s
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  std::getline(is, line);
  std::getline(is, line);
  CHECK(line.rfind("7.8539816339744828e-01,-2.0000000000000000e+00,", 0) == 0);
  CHECK(std::abs(t.interpolate(HoroPoint(t.grid.angle.node(3), t.grid.s.node(10))) - t.at(3, 10)) < 1e-14);
  CHECK(t.interpolate(HoroPoint(0.0, 5.0)) == cplx(0.0));
  const double exact = radon(f, HoroPoint(0.3, 0.15), QuadratureSpec{}).value.real();
  CHECK(t.interpolator()(HoroPoint(0.3, 0.15)).real() == doctest::Approx(exact).epsilon(2e-2));
  CHECK(sup_bound_probe(f, GridSpec::xi(8, 21, -2.0, 2.0), QuadratureSpec{}) > 0.0);
}

TEST_CASE("dual transform rejects non-decaying input") {
  const XiFunction one = [](const HoroPoint&) { return cplx(1.0); };
  CHECK_THROWS_AS(dual_radon(one, identity(), QuadratureSpec{}), DivergentIntegral);
  const XiFunction bump = [](const HoroPoint& p) { return cplx(std::exp(-p.s * p.s)); };
  const QuadResult r = dual_radon(bump, identity(), QuadratureSpec{});
  CHECK(std::isfinite(r.value.real()));
  CHECK(r.value.real() > 0.0);
}

TEST_CASE("inversion multiplier probe is reported per mode") {
  MultiplierGrids g;
  g.xi = GridSpec::xi(16, 81, -6.0, 10.0);
  g.y = GridSpec{Axis{0.0, 2.0 * M_PI, 8, true}, Axis{-3.0, 3.0, 41, false}};
  g.modes = {0, 1};
  g.omegas = {0.0, 0.5};
  const auto out = inversion_multiplier_probe(mode_bump(0, 0.8), g, QuadratureSpec{});
  CHECK(out.size() == 4);
  CHECK(out[0].defined);
  CHECK_FALSE(out[2].defined);  // mode 1 absent from a rotation-invariant input
  const auto z = inversion_multiplier_probe(zero_function(), g, QuadratureSpec{});
  for (const auto& e : z) CHECK_FALSE(e.defined);
}
