#include "hororadon/radon.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <ostream>

#include "parallel.hpp"

namespace hororadon {

namespace {

std::array<double, 4> lagrange4(double t) {
  return {-t * (t - 1) * (t - 2) / 6.0, (t + 1) * (t - 1) * (t - 2) / 2.0, -(t + 1) * t * (t - 2) / 2.0,
          (t + 1) * t * (t - 1) / 6.0};
}

void check_integrable(const FunctionOnY& f) {
  if (f.horocycle_decay > 0 && f.horocycle_decay <= 1)
    throw InvalidArgument("function '" + f.id + "' is not integrable along horocycles");
}

RadonValue from_quad(const QuadResult& r, double scale = 1.0) { return {r.value * scale, r.error * scale, r.l1 * scale}; }

}  // namespace

std::vector<double> TransformGrid::slice_sup() const {
  std::vector<double> out(grid.s.points, 0.0);
  for (int is = 0; is < grid.s.points; ++is)
    for (int ia = 0; ia < grid.angle.points; ++ia)
      if (!flagged[index(ia, is)]) out[is] = std::max(out[is], std::abs(at(ia, is)));
  return out;
}

int TransformGrid::flagged_count() const {
  int n = 0;
  for (char c : flagged) n += c ? 1 : 0;
  return n;
}

void TransformGrid::write_csv(std::ostream& os) const {
  os << "phi,s,re,im,err\n";
  char buf[160];
  for (int is = 0; is < grid.s.points; ++is) {
    for (int ia = 0; ia < grid.angle.points; ++ia) {
      const cplx v = at(ia, is);
      std::snprintf(buf, sizeof buf, "%.16e,%.16e,%.16e,%.16e,%.16e\n", grid.angle.node(ia), grid.s.node(is),
                    v.real(), v.imag(), errors[index(ia, is)]);
      os << buf;
    }
  }
}

cplx TransformGrid::interpolate(const HoroPoint& xi) const {
  const Axis& A = grid.angle;
  const Axis& S = grid.s;
  if (A.points < 4 || S.points < 4) throw InvalidArgument("interpolation needs at least 4 points per axis");
  if (xi.s < S.lower || xi.s > S.upper) return 0.0;
  const double ts = (xi.s - S.lower) / S.step();
  const int js = std::clamp(static_cast<int>(std::floor(ts)), 1, S.points - 3);
  const auto ws = lagrange4(ts - js);

  double ta = (xi.angle - A.lower) / A.step();
  int ja;
  if (A.periodic) {
    ja = static_cast<int>(std::floor(ta));
  } else {
    if (xi.angle < A.lower || xi.angle > A.upper) return 0.0;
    ja = std::clamp(static_cast<int>(std::floor(ta)), 1, A.points - 3);
  }
  const auto wa = lagrange4(ta - ja);
  cplx acc{};
  for (int q = 0; q < 4; ++q) {
    const int is = js - 1 + q;
    cplx row{};
    for (int p = 0; p < 4; ++p) {
      int ia = ja - 1 + p;
      if (A.periodic) ia = ((ia % A.points) + A.points) % A.points;
      row += wa[p] * at(ia, is);
    }
    acc += ws[q] * row;
  }
  return acc;
}

XiFunction TransformGrid::interpolator() const {
  auto self = std::make_shared<TransformGrid>(*this);
  return [self](const HoroPoint& xi) { return self->interpolate(xi); };
}

RadonValue radon(const FunctionOnY& f, const HoroPoint& xi, const QuadratureSpec& spec) {
  check_integrable(f);
  const double s = xi.s;
  const double c = std::cos(xi.angle), sn = std::sin(xi.angle);
  auto rotated = [&](double p1, double p2, double p3) {
    return PointY::from_ambient(c * p1 - sn * p2, sn * p1 + c * p2, p3);
  };
  if (s <= 1.0) {
    const double e2 = std::exp(2.0 * s), em2 = std::exp(-2.0 * s);
    auto g = [&](double x) {
      const double w = e2 * (1.0 - x * x);
      return f(rotated(x, 0.5 * (w + em2), 0.5 * (w - em2)));
    };
    const QuadratureSpec q =
        spec.with_tail(f.horocycle_decay).with_radius(spec.truncation_radius * std::max(1.0, em2));
    return from_quad(integrate_line(g, q));
  }
  // near the waist x = +-1 the curve turns on the scale e^{-2s}: x = sigma + e^{-2s} v
  const double eps = std::exp(-2.0 * s), big = std::exp(2.0 * s);
  const QuadratureSpec q = spec.with_tail(f.horocycle_decay > 0 ? std::max(1.5, 0.5 * f.horocycle_decay) : 0.0);
  RadonValue out;
  for (double sigma : {1.0, -1.0}) {
    auto g = [&](double v) {
      const double w = -2.0 * sigma * v - eps * v * v;
      return f(rotated(sigma + eps * v, 0.5 * (w + eps), 0.5 * (w - eps)));
    };
    const double inf = std::numeric_limits<double>::infinity();
    const QuadResult r = sigma > 0 ? integrate(g, -big, inf, q) : integrate(g, -inf, big, q);
    out.value += r.value * eps;
    out.error += r.error * eps;
    out.mass += r.l1 * eps;
  }
  return out;
}

RadonValue radon_at(const FunctionOnY& f, const GroupElement& g, const QuadratureSpec& spec) {
  return radon(f, horo_point(g), spec);
}

TransformGrid radon_grid(const FunctionOnY& f, const GridSpec& grid, const QuadratureSpec& spec) {
  grid.validate();
  spec.validate();
  TransformGrid out;
  out.grid = grid;
  out.source_id = f.id;
  out.transform_id = "radon";
  const std::size_t n = static_cast<std::size_t>(grid.size());
  out.values.assign(n, 0.0);
  out.errors.assign(n, 0.0);
  out.masses.assign(n, 0.0);
  out.flagged.assign(n, 0);
  detail::parallel_for(n, [&](std::size_t k) {
    const int ia = static_cast<int>(k % grid.angle.points);
    const int is = static_cast<int>(k / grid.angle.points);
    try {
      const RadonValue r = radon(f, HoroPoint(grid.angle.node(ia), grid.s.node(is)), spec);
      out.values[k] = r.value;
      out.errors[k] = r.error;
      out.masses[k] = r.mass;
    } catch (const AccuracyError& e) {
      out.values[k] = e.best().value;
      out.errors[k] = e.best().error;
      out.masses[k] = e.best().l1;
      out.flagged[k] = 1;
    } catch (const std::exception&) {
      out.errors[k] = std::numeric_limits<double>::infinity();
      out.flagged[k] = 1;
    }
  });
  return out;
}

RadonValue radon_translated(const FunctionOnY& f, const HoroChart& chart, const GroupElement& base,
                            const QuadratureSpec& spec) {
  check_integrable(f);
  const GroupElement& x = chart.base();
  const GroupElement left = base * x.inverse();
  auto g = [&](double t) { return f(iota(left * unipotent(t) * x)); };
  const double scale = std::max(1.0, base.frobenius2() * x.frobenius2());
  return from_quad(integrate_line(g, spec.with_tail(f.horocycle_decay).with_radius(spec.truncation_radius * scale)));
}

RadonValue radon_translated(const FunctionOnY& f, const HoroChart& chart, const HoroPoint& xi,
                            const QuadratureSpec& spec) {
  return radon_translated(f, chart, xi.base(), spec);
}

double change_of_variables_check(const FunctionOnY& f, double k_angle, double s, const QuadratureSpec& user_spec) {
  check_integrable(f);
  // the residual is relative, so both sides are computed to relative accuracy only
  QuadratureSpec spec = user_spec;
  spec.abs_tol = std::numeric_limits<double>::min();
  const GroupElement k = rotation(k_angle);
  const PointY ay = iota(cartan(s));
  // left side: int |f(k n_x a_s y0)| dx, in the matrix model; features sit at |x| ~ e^{2s}
  auto lhs_f = [&](double x) { return cplx(std::abs(f(act(k * unipotent(x), ay)))); };
  const double scale = std::max(1.0, std::exp(2.0 * s));
  const QuadResult lhs = integrate_line(lhs_f, spec.with_tail(f.horocycle_decay).with_radius(4.0 * scale));
  // right side: e^{2s} int |f(k a_s n_x y0)| dx along the horocycle (2k, s)
  FunctionOnY absf = f;
  absf.sampler = [&f](const PointY& y) { return cplx(std::abs(f(y))); };
  const RadonValue rhs = radon(absf, HoroPoint(2.0 * k_angle, s), spec);
  const double r = std::exp(2.0 * s) * rhs.value.real();
  const double l = lhs.value.real();
  const double denom = std::max(std::abs(l), std::abs(r));
  return denom == 0.0 ? 0.0 : std::abs(l - r) / denom;
}

double sup_bound_probe(const FunctionOnY& f, const GridSpec& grid, const QuadratureSpec& spec) {
  const TransformGrid t = radon_grid(f, grid, spec);
  if (t.flagged_count() > 0) throw AccuracyError("sup_bound_probe: horocycle integral failed", QuadResult{});
  double sup = 0.0;
  for (double m : t.masses) sup = std::max(sup, m);
  return sup;
}

QuadResult dual_radon(const XiFunction& F, const GroupElement& g, const QuadratureSpec& spec) {
  // decay is checked at +-R below; beyond the Cartan cutoff g exp(uZ) overflows
  auto integrand = [&](double u) { return std::abs(u) > 300.0 ? cplx(0.0) : F(horo_point(g * hyperbolic(u))); };
  const double R = spec.truncation_radius;
  double peak = 0.0;
  for (int k = -20; k <= 20; ++k) peak = std::max(peak, std::abs(integrand(R * k / 20.0)));
  const double edge = std::max(std::abs(integrand(-R)), std::abs(integrand(R)));
  if (peak > 0 && edge > 1e-3 * peak)
    throw DivergentIntegral("dual transform integrand does not decay along H");
  return integrate_line(integrand, spec);
}

std::vector<MultiplierEntry> inversion_multiplier_probe(const FunctionOnY& f, const MultiplierGrids& grids,
                                                        const QuadratureSpec& spec) {
  grids.xi.validate();
  grids.y.validate();
  const TransformGrid rf = radon_grid(f, grids.xi, spec);
  if (rf.flagged_count() > 0) throw AccuracyError("multiplier probe: radon grid has failed points", QuadResult{});
  const XiFunction F = rf.interpolator();

  const Axis& ap = grids.y.angle;
  const Axis& as = grids.y.s;
  const std::size_t n = static_cast<std::size_t>(grids.y.size());
  std::vector<cplx> fv(n), gv(n);
  const QuadratureSpec dspec = spec.with_radius(std::max(spec.truncation_radius, 2.0 * grids.xi.s.upper));
  detail::parallel_for(n, [&](std::size_t k) {
    const int ia = static_cast<int>(k % ap.points);
    const int is = static_cast<int>(k / ap.points);
    const PointY y = PointY::from_chart(ap.node(ia), as.node(is));
    fv[k] = f(y);
    gv[k] = dual_radon(F, section(y), dspec).value;
  });

  const cplx I(0.0, 1.0);
  std::vector<cplx> lambdas;
  for (double w : grids.omegas) lambdas.push_back(I * w);
  std::vector<MultiplierEntry> out;
  for (int m : grids.modes) {
    UniformSamples cf{as.lower, as.step(), {}}, cg{as.lower, as.step(), {}};
    for (int is = 0; is < as.points; ++is) {
      cplx a{}, b{};
      for (int ia = 0; ia < ap.points; ++ia) {
        const cplx w = std::exp(-I * double(m) * ap.node(ia)) / double(ap.points);
        a += w * fv[is * ap.points + ia];
        b += w * gv[is * ap.points + ia];
      }
      cf.values.push_back(a);
      cg.values.push_back(b);
    }
    const auto ff = line_fourier_direct(cf, 0.0, lambdas);
    const auto gg = line_fourier_direct(cg, 0.0, lambdas);
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      const bool ok = std::abs(ff.values[j]) >= 1e-8;
      out.push_back({m, grids.omegas[j], ok ? gg.values[j] / ff.values[j] : cplx(0.0), ok});
    }
  }
  return out;
}

}  // namespace hororadon
