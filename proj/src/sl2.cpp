#include "hororadon/sl2.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hororadon {

GroupElement::GroupElement(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
    throw DomainError("group element with non-finite entries");
  const double det = a * d - b * c;
  if (!(det > 0)) throw DomainError("group element needs positive determinant");
  if (std::abs(det - 1.0) > 1e-12) {
    const double r = 1.0 / std::sqrt(det);
    a_ *= r;
    b_ *= r;
    c_ *= r;
    d_ *= r;
  }
}

GroupElement GroupElement::unchecked(double a, double b, double c, double d) {
  GroupElement g;
  g.a_ = a;
  g.b_ = b;
  g.c_ = c;
  g.d_ = d;
  return g;
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  return GroupElement::unchecked(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
                                 x.c_ * y.b_ + x.d_ * y.d_);
}

double GroupElement::max_abs_diff(const GroupElement& o) const {
  return std::max({std::abs(a_ - o.a_), std::abs(b_ - o.b_), std::abs(c_ - o.c_), std::abs(d_ - o.d_)});
}

std::string GroupElement::str() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "[[%.17g, %.17g], [%.17g, %.17g]]", a_, b_, c_, d_);
  return buf;
}

GroupElement identity() { return {}; }
GroupElement rotation(double t) {
  const double c = std::cos(t), s = std::sin(t);
  return GroupElement::unchecked(c, -s, s, c);
}
GroupElement cartan(double s) { return GroupElement::unchecked(std::exp(s), 0.0, 0.0, std::exp(-s)); }
GroupElement unipotent(double x) { return GroupElement::unchecked(1.0, x, 0.0, 1.0); }
GroupElement opposite_unipotent(double y) { return GroupElement::unchecked(1.0, 0.0, y, 1.0); }
GroupElement hyperbolic(double u) {
  const double c = std::cosh(u), s = std::sinh(u);
  return GroupElement::unchecked(c, s, s, c);
}
GroupElement weyl() { return GroupElement::unchecked(0.0, -1.0, 1.0, 0.0); }

GroupElement theta(const GroupElement& g) { return GroupElement::unchecked(g.d(), -g.c(), -g.b(), g.a()); }
GroupElement tau(const GroupElement& g) { return GroupElement::unchecked(g.d(), g.c(), g.b(), g.a()); }

double LieVec::norm() const { return std::sqrt(h * h + e * e + f * f); }

LieVec lie_H() { return {1.0, 0.0, 0.0}; }
LieVec lie_E() { return {0.0, 1.0, 0.0}; }
LieVec lie_F() { return {0.0, 0.0, 1.0}; }
LieVec lie_Z() { return {0.0, 1.0, 1.0}; }

double killing(const LieVec& x, const LieVec& y) { return 8.0 * x.h * y.h + 4.0 * (x.e * y.f + x.f * y.e); }

LieVec bracket(const LieVec& x, const LieVec& y) {
  return {x.e * y.f - x.f * y.e, 2.0 * (x.h * y.e - y.h * x.e), 2.0 * (y.h * x.f - x.h * y.f)};
}

LieVec adjoint(const GroupElement& g, const LieVec& x) {
  // g [[h, e], [f, -h]] g^-1
  const double a = g.a(), b = g.b(), c = g.c(), d = g.d();
  const double m11 = a * x.h + b * x.f, m12 = a * x.e - b * x.h;
  const double m21 = c * x.h + d * x.f, m22 = c * x.e - d * x.h;
  const double r11 = m11 * d - m12 * c, r12 = -m11 * b + m12 * a;
  const double r21 = m21 * d - m22 * c;
  return {r11, r12, r21};
}

GroupElement expm(const LieVec& x) {
  const double delta = x.h * x.h + x.e * x.f;
  double c, s;
  if (std::abs(delta) < 1e-8) {
    c = 1.0 + delta / 2.0 + delta * delta / 24.0;
    s = 1.0 + delta / 6.0 + delta * delta / 120.0;
  } else if (delta > 0) {
    const double r = std::sqrt(delta);
    c = std::cosh(r);
    s = std::sinh(r) / r;
  } else {
    const double r = std::sqrt(-delta);
    c = std::cos(r);
    s = std::sin(r) / r;
  }
  return GroupElement::unchecked(c + s * x.h, s * x.e, s * x.f, c - s * x.h);
}

Iwasawa iwasawa(const GroupElement& g) {
  const double r = std::hypot(g.a(), g.c());
  double th = std::atan2(g.c(), g.a());
  if (th < 0) th += 2.0 * M_PI;
  if (th >= 2.0 * M_PI) th = 0.0;
  const double x = (std::cos(th) * g.b() + std::sin(th) * g.d()) / r;
  return {th, std::log(r), x};
}

GroupElement PolarKAH::recompose() const {
  GroupElement h = hyperbolic(u);
  if (eps < 0) h = -h;
  return rotation(theta_k) * cartan(s) * h;
}

PolarKAH polar_kah(const GroupElement& g) {
  const double a = g.a(), b = g.b(), c = g.c(), d = g.d();
  const double x1 = b * d - a * c;
  const double x2 = 0.5 * (a * a - b * b + d * d - c * c);
  const double x3 = 0.5 * (a * a - b * b - d * d + c * c);
  if (!std::isfinite(x1) || !std::isfinite(x2) || !std::isfinite(x3))
    throw DegenerateDecomposition("polar decomposition of a non-finite element");
  PolarKAH p;
  p.s = 0.5 * std::asinh(x3);
  double th = 0.5 * (std::atan2(x2, x1) - 0.5 * M_PI);
  th = std::fmod(th, M_PI);
  if (th < 0) th += M_PI;
  if (th >= M_PI) th = 0.0;
  p.theta_k = th;
  const GroupElement h = (rotation(th) * cartan(p.s)).inverse() * g;
  p.eps = h.a() >= 0 ? 1 : -1;
  p.u = std::asinh(p.eps * h.b());
  return p;
}

GroupElement HwanFactorization::recompose() const {
  GroupElement m = hyperbolic(u);
  if (eps < 0) m = -m;
  if (orbit == Orbit::w0) m = m * weyl();
  return m * cartan(s) * unipotent(x);
}

HwanFactorization hwan_decompose(const GroupElement& g, double threshold) {
  const double v1 = g.a(), v2 = g.c();
  const double q = v1 * v1 - v2 * v2;
  if (!(std::abs(q) >= threshold)) throw BoundaryOrbit("element lies on a boundary orbit (v1^2 = v2^2)");
  HwanFactorization f;
  if (q > 0) {
    f.orbit = Orbit::e;
    f.eps = v1 > 0 ? 1 : -1;
    f.u = std::atanh(v2 / v1);
    f.s = 0.5 * std::log(q);
  } else {
    f.orbit = Orbit::w0;
    f.eps = v2 > 0 ? 1 : -1;
    f.u = std::atanh(v1 / v2);
    f.s = 0.5 * std::log(-q);
  }
  f.x = 0.0;
  const GroupElement n = f.recompose().inverse() * g;
  f.x = n.b();
  return f;
}

double variety_norm(const GroupElement& g) {
  const GroupElement z = g * tau(g).inverse();
  const GroupElement m = z * z.transpose();
  const double p = m.a(), q = m.b(), r = m.d();
  const double half = 0.5 * (p + r);
  const double rad = std::hypot(0.5 * (p - r), q);
  if (!(half > 0) || !(half - rad > -1e-8 * half))
    throw std::logic_error("variety_norm: z theta(z)^-1 is not positive definite");
  // det = 1, so the eigenvalues are lambda and 1/lambda
  const double log_max = std::log1p(0.5 * (p + r - 2.0) + rad);
  return 0.25 * std::sqrt(2.0) * std::abs(log_max);
}

double phi0(const GroupElement& g) {
  // phi0(k1 a_t k2) = (1/2pi) int dtheta / sqrt(e^{2t}cos^2 + e^{-2t}sin^2) = 1/AGM(e^t, e^-t)
  const double t = 0.5 * std::acosh(std::max(1.0, 0.5 * g.frobenius2()));
  double x = std::exp(t), y = std::exp(-t);
  for (int i = 0; i < 64 && std::abs(x - y) > 4e-16 * x; ++i) {
    const double m = 0.5 * (x + y);
    y = std::sqrt(x * y);
    x = m;
  }
  return 1.0 / (0.5 * (x + y));
}

double theta_weight(const GroupElement& g) { return 1.0 / std::sqrt(phi0(g * tau(g).inverse())); }

bool in_Gh(const GroupElement& x) {
  const LieVec v = adjoint(x.inverse(), lie_E());
  const double n = v.norm();
  const bool along_z = std::abs(v.h) <= 1e-12 * n && std::abs(v.e - v.f) <= 1e-12 * n;
  return !along_z;
}

}  // namespace hororadon
