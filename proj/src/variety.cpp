#include "hororadon/variety.hpp"

#include <cmath>

#include "hororadon/funcspace.hpp"

namespace hororadon {

namespace {

double wrap_2pi(double a) {
  double r = std::fmod(a, 2.0 * M_PI);
  if (r < 0) r += 2.0 * M_PI;
  if (r >= 2.0 * M_PI) r = 0.0;
  return r;
}

void require_finite(const cplx& v, const char* where) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError(std::string("non-finite sample in ") + where);
}

}  // namespace

PointY PointY::from_ambient(double x1, double x2, double x3) {
  PointY p;
  p.x = {x1, x2, x3};
  p.phi = wrap_2pi(std::atan2(x2, x1));
  p.s = x3;
  return p;
}

PointY PointY::from_chart(double phi, double s) {
  PointY p;
  const double rho = std::hypot(1.0, s);
  p.phi = wrap_2pi(phi);
  p.s = s;
  p.x = {rho * std::cos(p.phi), rho * std::sin(p.phi), s};
  return p;
}

double PointY::constraint_residual() const {
  const double q = x[0] * x[0] + x[1] * x[1];
  return std::abs(q - x[2] * x[2] - 1.0) / std::max(1.0, q);
}

double PointY::chart_residual() const {
  const double rho = std::hypot(1.0, s);
  return std::max({std::abs(x[0] - rho * std::cos(phi)), std::abs(x[1] - rho * std::sin(phi)), std::abs(x[2] - s)}) /
         rho;
}

PointY base_point() { return PointY::from_ambient(0.0, 1.0, 0.0); }

PointY antipode(const PointY& y) { return PointY::from_ambient(-y.x[0], -y.x[1], -y.x[2]); }

HoroPoint::HoroPoint(double a, double s_) : angle(wrap_2pi(a)), s(s_) {
  if (!std::isfinite(a) || !std::isfinite(s_)) throw InvalidArgument("non-finite horosphere coordinates");
}

GroupElement HoroPoint::base() const { return rotation(0.5 * angle) * cartan(s); }

HoroPoint horo_point(const GroupElement& g) {
  const Iwasawa iw = iwasawa(g);
  return HoroPoint(2.0 * iw.theta_k, iw.s);
}

HoroChart::HoroChart(const GroupElement& x) : x_(x) {
  if (!in_Gh(x)) throw InvalidArgument("chart base is not in G_h");
}

PointY iota(const GroupElement& g) {
  const double a = g.a(), b = g.b(), c = g.c(), d = g.d();
  return PointY::from_ambient(b * d - a * c, 0.5 * (a * a - b * b + d * d - c * c),
                              0.5 * (a * a - b * b - d * d + c * c));
}

PointY act(const GroupElement& g, const PointY& y) {
  const LieVec p{y.x[0], y.x[1] + y.x[2], y.x[1] - y.x[2]};
  const LieVec q = adjoint(g, p);
  return PointY::from_ambient(q.h, 0.5 * (q.e + q.f), 0.5 * (q.e - q.f));
}

GroupElement section(const PointY& y) {
  return rotation(0.5 * (y.phi - 0.5 * M_PI)) * cartan(0.5 * std::asinh(y.x[2]));
}

PointY horocycle(const HoroPoint& xi, double x) {
  const double e2 = std::exp(2.0 * xi.s), em2 = std::exp(-2.0 * xi.s);
  const double w = e2 * (1.0 - x * x);
  const double p1 = x, p2 = 0.5 * (w + em2), p3 = 0.5 * (w - em2);
  const double c = std::cos(xi.angle), s = std::sin(xi.angle);
  return PointY::from_ambient(c * p1 - s * p2, s * p1 + c * p2, p3);
}

PointY chart_transport(const HoroChart& chart, const HoroPoint& xi, double x) {
  const GroupElement& b = chart.base();
  return iota(xi.base() * b.inverse() * unipotent(x) * b);
}

namespace {

QuadResult iterated(const std::function<cplx(const PointY&)>& g, double chart_decay, const QuadratureSpec& spec) {
  double worst_rel = 0.0;
  const QuadratureSpec inner = spec.with_tail(0.0);
  auto slice = [&](double s) {
    const QuadResult r = integrate(
        [&](double phi) { return g(PointY::from_chart(phi, s)); }, 0.0, 2.0 * M_PI, inner);
    if (r.l1 > 0) worst_rel = std::max(worst_rel, r.error / r.l1);
    return r.value;
  };
  QuadResult out = integrate_line(slice, spec.with_tail(chart_decay));
  out.error += worst_rel * out.l1;
  return out;
}

}  // namespace

QuadResult invariant_integral(const FunctionOnY& f, const QuadratureSpec& spec) {
  return iterated(f.sampler, f.chart_decay, spec);
}

QuadResult invariant_l1(const FunctionOnY& f, const QuadratureSpec& spec) {
  return iterated([&](const PointY& y) { return cplx(std::abs(f(y))); }, f.chart_decay, spec);
}

cplx wave_operator(const FunctionOnY& f, const PointY& y, double step) {
  if (!(step > 0)) throw InvalidArgument("wave_operator step must be positive");
  const double phi = y.phi, s = y.s;
  auto at = [&](double p, double t) {
    const cplx v = f(PointY::from_chart(p, t));
    require_finite(v, "wave_operator");
    return v;
  };
  const cplx f0 = at(phi, s);
  auto d2phi = [&](double h) { return (at(phi + h, s) - 2.0 * f0 + at(phi - h, s)) / (h * h); };
  auto d2s = [&](double h) { return (at(phi, s + h) - 2.0 * f0 + at(phi, s - h)) / (h * h); };
  auto d1s = [&](double h) { return (at(phi, s + h) - at(phi, s - h)) / (2.0 * h); };
  const double h = step;
  const cplx fpp = (4.0 * d2phi(h / 2) - d2phi(h)) / 3.0;
  const cplx fss = (4.0 * d2s(h / 2) - d2s(h)) / 3.0;
  const cplx fs = (4.0 * d1s(h / 2) - d1s(h)) / 3.0;
  const double q = 1.0 + s * s;
  return fpp / q - q * fss - 2.0 * s * fs;
}

Derivative lie_derivative(const FunctionOnY& f, const LieVec& u, const PointY& y, double step) {
  if (!(step > 0)) throw InvalidArgument("lie_derivative step must be positive");
  auto at = [&](double t) {
    const cplx v = f(act(expm(u * (-t)), y));
    require_finite(v, "lie_derivative");
    return v;
  };
  auto central = [&](double h) { return (at(h) - at(-h)) / (2.0 * h); };
  const cplx d1 = central(step), d2 = central(step / 2);
  const cplx r = (4.0 * d2 - d1) / 3.0;
  return {r, std::abs(r - d2)};
}

}  // namespace hororadon
