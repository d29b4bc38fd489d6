#include "hororadon/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "parallel.hpp"

namespace hororadon {

FourierAValue fourier_A(const XiFunction& F, cplx lambda, const HoroPoint& xi, const SpectralWindow& w) {
  if (!(w.step > 0) || !(w.s_max > w.s_min)) throw InvalidArgument("invalid spectral window");
  const std::size_t n = static_cast<std::size_t>(std::llround((w.s_max - w.s_min) / w.step)) + 1;
  UniformSamples samples{w.s_min, (w.s_max - w.s_min) / double(n - 1), std::vector<cplx>(n)};
  detail::parallel_for(n, [&](std::size_t k) { samples.values[k] = F(HoroPoint(xi.angle, xi.s + samples.node(k))); });
  const cplx lam[1] = {lambda};
  const LineFourierResult r = line_fourier(samples, 1.0, lam);
  return {r.values[0], r.truncated, r.edge_ratio};
}

FourierAValue fourier_A(const TransformGrid& F, cplx lambda, double angle) {
  const Axis& A = F.grid.angle;
  int ia = -1;
  for (int i = 0; i < A.points; ++i)
    if (std::abs(A.node(i) - angle) <= 1e-12 * std::max(1.0, std::abs(angle))) ia = i;
  if (ia < 0) throw InvalidArgument("fourier_A: angle is not a grid node");
  UniformSamples samples{F.grid.s.lower, F.grid.s.step(), {}};
  for (int is = 0; is < F.grid.s.points; ++is) samples.values.push_back(F.at(ia, is));
  const cplx lam[1] = {lambda};
  const LineFourierResult r = line_fourier(samples, 1.0, lam);
  return {r.values[0], r.truncated, r.edge_ratio};
}

PoissonValue poisson_j(cplx lambda, const OrbitFunctional& eta, const GroupElement& g) {
  PoissonValue out;
  HwanFactorization h;
  try {
    h = hwan_decompose(g);
  } catch (const BoundaryOrbit&) {
    out.boundary = true;
    return out;
  }
  out.orbit = h.orbit;
  out.value = std::exp((lambda - 1.0) * h.s) * (h.orbit == Orbit::e ? eta.eta_e : eta.eta_w);
  return out;
}

QuadResult fourier_Y(const FunctionOnY& f, cplx lambda, const OrbitFunctional& eta, const GroupElement& g,
                     const QuadratureSpec& spec) {
  if (!(lambda.real() > -1.0)) throw InvalidArgument("fourier_Y needs Re lambda > -1");
  spec.validate();
  const double growth = 0.5 * (lambda.real() - 1.0);
  double tail = 0.0;
  if (f.chart_decay > 0) {
    tail = f.chart_decay - std::max(0.0, growth);
    if (tail <= 1.0) throw InvalidArgument("fourier_Y integrand is not absolutely integrable for this lambda");
  }
  // v = section(y)^-1 g e1 has v1^2 - v2^2 = -2 |g e1|^2 rho sin(d1/2) sin(d2/2), d_i = phi - p_i with
  // p1 = 2 alpha + atan(s), p2 = 2 alpha + pi - atan(s); the factored form keeps full relative accuracy
  // near the singular curve, where the group product would cancel
  const double alpha = std::atan2(g.c(), g.a());
  const double u2 = g.a() * g.a() + g.c() * g.c();
  const QuadratureSpec inner = spec.with_tail(0.0);
  double worst_rel = 0.0;
  auto slice = [&](double s) {
    const double beta = std::atan(s), rho = std::hypot(1.0, s);
    const double p1 = 2.0 * alpha + beta, p2 = 2.0 * alpha + M_PI - beta, p3 = p1 + 2.0 * M_PI;
    const double pts[3] = {p1, p2, p3};
    auto integrand = [&](double phi) -> cplx {
      const cplx fv = f(PointY::from_chart(phi, s));
      if (fv == 0.0) return 0.0;
      // measure d1 from the nearer of p1, p1 + 2pi; sin(d1/2) flips sign across the period
      const bool near_lo = phi - p1 < p3 - phi;
      const double sin1 = near_lo ? std::sin(0.5 * (phi - p1)) : -std::sin(0.5 * (phi - p3));
      const double q = -2.0 * u2 * rho * sin1 * std::sin(0.5 * (phi - p2));
      if (q == 0.0) return 0.0;
      const cplx eta_v = q > 0 ? eta.eta_e : eta.eta_w;
      if (eta_v == 0.0) return 0.0;
      return fv * std::pow(std::abs(q), 0.5 * (lambda - 1.0)) * eta_v;
    };
    const QuadResult r = integrate_singular(integrand, p1, p3, pts, 0.5 * (lambda - 1.0), inner);
    if (r.l1 > 0) worst_rel = std::max(worst_rel, r.error / r.l1);
    return r.value;
  };
  QuadResult out = integrate_line(slice, spec.with_tail(tail));
  out.error += worst_rel * out.l1;
  return out;
}

IdentityCheck fourier_radon_identity(const FunctionOnY& f, cplx lambda, const OrbitFunctional& eta,
                                     const GroupElement& g, const QuadratureSpec& spec,
                                     const SpectralWindow& window) {
  IdentityCheck out;
  const QuadResult lhs = fourier_Y(f, lambda, eta, g, spec);
  out.lhs = lhs.value;
  out.lhs_error = lhs.error;
  const HoroPoint xi = horo_point(g);
  cplx rhs{};
  if (eta.eta_e != 0.0) {
    const XiFunction F = [&](const HoroPoint& p) { return radon(f, p, spec).value; };
    const FourierAValue a = fourier_A(F, -lambda, xi, window);
    rhs += eta.eta_e * a.value;
    out.rhs_truncated = out.rhs_truncated || a.truncated;
  }
  if (eta.eta_w != 0.0) {
    const FunctionOnY fm = antipodal(f);
    const XiFunction F = [&](const HoroPoint& p) { return radon(fm, p, spec).value; };
    const FourierAValue a = fourier_A(F, -lambda, xi, window);
    rhs += eta.eta_w * a.value;
    out.rhs_truncated = out.rhs_truncated || a.truncated;
  }
  out.rhs = kHorocycleJacobian * rhs;
  const double scale = std::max(std::abs(out.lhs), std::abs(out.rhs));
  out.residual = scale == 0.0 ? 0.0 : std::abs(out.lhs - out.rhs) / scale;
  return out;
}

void write_identity_csv(std::ostream& os, const std::vector<IdentityRow>& rows) {
  os << "lambda_re,lambda_im,g_id,eta_e,eta_w,lhs_re,lhs_im,rhs_re,rhs_im,residual\n";
  char buf[400];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.16e,%.16e,%s,%.16e,%.16e,%.16e,%.16e,%.16e,%.16e,%.16e\n", r.lambda.real(),
                  r.lambda.imag(), r.g_id.c_str(), r.eta.eta_e.real(), r.eta.eta_w.real(), r.check.lhs.real(),
                  r.check.lhs.imag(), r.check.rhs.real(), r.check.rhs.imag(), r.check.residual);
    os << buf;
  }
}

GramResult injectivity_gram(const std::vector<FunctionOnY>& functions, const GridSpec& grid,
                            const QuadratureSpec& spec) {
  if (functions.size() < 2) throw InvalidArgument("injectivity_gram needs at least 2 functions");
  grid.validate();
  std::vector<TransformGrid> t;
  for (const auto& f : functions) {
    t.push_back(radon_grid(f, grid, spec));
    if (t.back().flagged_count() > 0) throw AccuracyError("injectivity_gram: radon grid has failed points", QuadResult{});
  }
  const int n = static_cast<int>(functions.size());
  const double da = grid.angle.step(), ds = grid.s.step();
  std::vector<double> w(static_cast<std::size_t>(grid.size()));
  for (int is = 0; is < grid.s.points; ++is)
    for (int ia = 0; ia < grid.angle.points; ++ia) {
      double wa = da, ws = ds;
      if (!grid.angle.periodic && (ia == 0 || ia + 1 == grid.angle.points)) wa *= 0.5;
      if (is == 0 || is + 1 == grid.s.points) ws *= 0.5;
      w[t[0].index(ia, is)] = wa * ws;
    }
  Eigen::MatrixXcd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx acc{};
      for (std::size_t k = 0; k < w.size(); ++k) acc += w[k] * std::conj(t[i].values[k]) * t[j].values[k];
      G(i, j) = acc;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, Eigen::EigenvaluesOnly);
  GramResult out;
  out.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.gram.push_back(G(i, j));
  for (int i = 0; i < n; ++i) out.singular_values.push_back(std::abs(es.eigenvalues()(i)));
  std::sort(out.singular_values.begin(), out.singular_values.end());
  out.sigma_min = out.singular_values.front();
  return out;
}

}  // namespace hororadon
