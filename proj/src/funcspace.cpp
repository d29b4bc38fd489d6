#include "hororadon/funcspace.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace hororadon {

namespace {

const cplx I(0.0, 1.0);

cplx inverse_power(cplx z, int n) {
  const cplx w = 1.0 / z;
  cplx r = 1.0;
  for (int k = 0; k < n; ++k) r *= w;
  return r;
}

AmbientC real_ambient(const PointY& y) { return {cplx(y.x[0]), cplx(y.x[1]), cplx(y.x[2])}; }

struct CMat {
  cplx a, b, c, d;
};

// c P c^-1 for P = [[x1, x2 + x3], [x2 - x3, -x1]], det c = 1
AmbientC act_complex(const CMat& m, const AmbientC& z) {
  const cplx h = z[0], e = z[1] + z[2], f = z[1] - z[2];
  const cplx m11 = m.a * h + m.b * f, m12 = m.a * e - m.b * h;
  const cplx m21 = m.c * h + m.d * f, m22 = m.c * e - m.d * h;
  const cplx r11 = m11 * m.d - m12 * m.c, r12 = -m11 * m.b + m12 * m.a;
  const cplx r21 = m21 * m.d - m22 * m.c;
  return {r11, 0.5 * (r12 + r21), 0.5 * (r12 - r21)};
}

CMat real_mat(const GroupElement& g) { return {g.a(), g.b(), g.c(), g.d()}; }

// exp(i t X)
CMat expm_imag(const LieVec& x, double t) {
  const cplx h = I * t * x.h, e = I * t * x.e, f = I * t * x.f;
  const cplx delta = h * h + e * f;
  cplx c, s;
  if (std::abs(delta) < 1e-8) {
    c = 1.0 + delta / 2.0 + delta * delta / 24.0;
    s = 1.0 + delta / 6.0 + delta * delta / 120.0;
  } else {
    const cplx r = std::sqrt(delta);
    c = std::cosh(r);
    s = std::sinh(r) / r;
  }
  return {c + s * h, s * e, s * f, c - s * h};
}

double parse_double(std::string_view tok) {
  std::string t(tok);
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw InvalidArgument("cannot parse number '" + t + "'");
  }
  if (pos != t.size() || !std::isfinite(v)) throw InvalidArgument("cannot parse number '" + t + "'");
  return v;
}

int parse_int(std::string_view tok) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) throw InvalidArgument("cannot parse integer '" + std::string(tok) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t k = s.find(sep, start);
    out.push_back(s.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
    if (k == std::string_view::npos) break;
    start = k + 1;
  }
  return out;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

FunctionOnY discrete_series(int n) {
  if (n < 2) throw InvalidArgument("discrete_series needs n >= 2");
  FunctionOnY f;
  f.id = "ds:" + std::to_string(n);
  f.decay = DecayClass::DiscreteSeries;
  f.series_order = n;
  f.horocycle_decay = 2.0 * n;
  f.chart_decay = n;
  f.eigenvalue = double(n) * (1.0 - n);
  f.sampler = [n](const PointY& y) { return inverse_power(cplx(y.x[0], y.x[1]), n); };
  f.holomorphic = [n](const AmbientC& z) { return inverse_power(z[0] + I * z[1], n); };
  return f;
}

FunctionOnY gaussian_bump(const PointY& c, double width) {
  if (!(width > 0)) throw InvalidArgument("bump width must be positive");
  FunctionOnY f;
  f.id = "bump:" + num(c.x[0]) + "," + num(c.x[1]) + "," + num(c.x[2]) + "," + num(width);
  f.decay = DecayClass::AmbientGaussian;
  const double k = 1.0 / (width * width);
  const std::array<double, 3> x0 = c.x;
  f.sampler = [x0, k](const PointY& y) {
    const double d0 = y.x[0] - x0[0], d1 = y.x[1] - x0[1], d2 = y.x[2] - x0[2];
    return cplx(std::exp(-k * (d0 * d0 + d1 * d1 + d2 * d2)));
  };
  f.holomorphic = [x0, k](const AmbientC& z) {
    const cplx d0 = z[0] - x0[0], d1 = z[1] - x0[1], d2 = z[2] - x0[2];
    return std::exp(-k * (d0 * d0 + d1 * d1 + d2 * d2));
  };
  return f;
}

FunctionOnY mode_bump(int m, double width) {
  if (!(width > 0)) throw InvalidArgument("bump width must be positive");
  FunctionOnY f;
  f.id = "mode:" + std::to_string(m) + "," + num(width);
  f.decay = DecayClass::AmbientGaussian;
  const double k = 1.0 / (width * width);
  f.sampler = [m, k](const PointY& y) { return std::exp(I * double(m) * y.phi) * std::exp(-k * y.s * y.s); };
  f.holomorphic = [m, k](const AmbientC& z) {
    const cplx rho = std::sqrt(1.0 + z[2] * z[2]);
    return std::pow((z[0] + I * z[1]) / rho, m) * std::exp(-k * z[2] * z[2]);
  };
  return f;
}

FunctionOnY zero_function() {
  FunctionOnY f;
  f.id = "zero";
  f.decay = DecayClass::AmbientGaussian;
  f.sampler = [](const PointY&) { return cplx(0.0); };
  f.holomorphic = [](const AmbientC&) { return cplx(0.0); };
  return f;
}

FunctionOnY custom_function(std::string id, std::function<cplx(const PointY&)> sampler, double horocycle_decay,
                            double chart_decay) {
  if (horocycle_decay < 0 || (horocycle_decay > 0 && horocycle_decay <= 1))
    throw InvalidArgument("horocycle tail exponent must be > 1 (non-integrable otherwise)");
  if (chart_decay < 0 || (chart_decay > 0 && chart_decay <= 1))
    throw InvalidArgument("chart tail exponent must be > 1 (non-integrable otherwise)");
  FunctionOnY f;
  f.id = std::move(id);
  f.horocycle_decay = horocycle_decay;
  f.chart_decay = chart_decay;
  f.sampler = std::move(sampler);
  for (const auto& y : validation_grid()) {
    const cplx v = f(y);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw InvalidArgument("custom function is not finite on the validation grid");
  }
  return f;
}

FunctionOnY antipodal(const FunctionOnY& f) {
  FunctionOnY g = f;
  g.id = "antipodal(" + f.id + ")";
  auto s = f.sampler;
  g.sampler = [s](const PointY& y) { return s(antipode(y)); };
  if (f.holomorphic) {
    auto h = f.holomorphic;
    g.holomorphic = [h](const AmbientC& z) { return h({-z[0], -z[1], -z[2]}); };
  }
  return g;
}

FunctionOnY translate(const FunctionOnY& f, const GroupElement& g) {
  FunctionOnY t = f;
  t.id = "translate(" + f.id + ")";
  const GroupElement gi = g.inverse();
  auto s = f.sampler;
  t.sampler = [s, gi](const PointY& y) { return s(act(gi, y)); };
  if (f.holomorphic) {
    auto h = f.holomorphic;
    const CMat m = real_mat(gi);
    t.holomorphic = [h, m](const AmbientC& z) { return h(act_complex(m, z)); };
  }
  return t;
}

FunctionOnY scaled(const FunctionOnY& f, cplx alpha) {
  FunctionOnY g = f;
  g.id = "scaled(" + f.id + ")";
  auto s = f.sampler;
  g.sampler = [s, alpha](const PointY& y) { return alpha * s(y); };
  if (f.holomorphic) {
    auto h = f.holomorphic;
    g.holomorphic = [h, alpha](const AmbientC& z) { return alpha * h(z); };
  }
  if (alpha == 0.0) g.eigenvalue.reset();
  return g;
}

FunctionOnY sum(const FunctionOnY& f, const FunctionOnY& g) {
  FunctionOnY r;
  r.id = "sum(" + f.id + "," + g.id + ")";
  r.decay = (f.decay == g.decay) ? f.decay : DecayClass::Custom;
  auto slowest = [](double p, double q) {
    if (p == 0) return q;
    if (q == 0) return p;
    return std::min(p, q);
  };
  r.horocycle_decay = slowest(f.horocycle_decay, g.horocycle_decay);
  r.chart_decay = slowest(f.chart_decay, g.chart_decay);
  r.smooth = f.smooth && g.smooth;
  if (f.eigenvalue && g.eigenvalue && *f.eigenvalue == *g.eigenvalue) r.eigenvalue = f.eigenvalue;
  auto a = f.sampler, b = g.sampler;
  r.sampler = [a, b](const PointY& y) { return a(y) + b(y); };
  if (f.holomorphic && g.holomorphic) {
    auto ha = f.holomorphic, hb = g.holomorphic;
    r.holomorphic = [ha, hb](const AmbientC& z) { return ha(z) + hb(z); };
  }
  return r;
}

FunctionOnY parse_family(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (name == "zero" && args.empty()) return zero_function();
  if (name == "ds") return discrete_series(parse_int(args));
  if (name == "bump") {
    const auto p = split(args, ',');
    if (p.size() != 4) throw InvalidArgument("bump expects cx,cy,cz,w");
    const double x1 = parse_double(p[0]), x2 = parse_double(p[1]), x3 = parse_double(p[2]);
    const PointY c = PointY::from_ambient(x1, x2, x3);
    if (c.constraint_residual() > 1e-8) throw InvalidArgument("bump center is not on the hyperboloid");
    return gaussian_bump(c, parse_double(p[3]));
  }
  if (name == "mode") {
    const auto p = split(args, ',');
    if (p.size() != 2) throw InvalidArgument("mode expects m,w");
    return mode_bump(parse_int(p[0]), parse_double(p[1]));
  }
  throw InvalidArgument("unknown function family '" + std::string(spec) + "'");
}

std::vector<PointY> validation_grid() {
  std::vector<PointY> out;
  for (double s : {-3.0, -1.5, -0.5, 0.0, 0.7, 2.0, 3.5})
    for (int k = 0; k < 8; ++k) out.push_back(PointY::from_chart(0.3 + k * M_PI / 4, s));
  return out;
}

Certification certify(const FunctionOnY& f) {
  Certification c;
  for (const auto& y : validation_grid()) {
    const cplx v = f(y);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) c.finite = false;
    if (f.eigenvalue && c.finite && std::abs(v) > 0) {
      const cplx w = wave_operator(f, y);
      c.eigen_residual = std::max(c.eigen_residual, std::abs(w - *f.eigenvalue * v) / std::abs(*f.eigenvalue * v));
    }
  }
  c.pass = c.finite && c.eigen_residual <= 1e-5;
  return c;
}

namespace {

cplx nested_derivative(const FunctionOnY& f, const std::vector<LieVec>& word, std::size_t k, const PointY& y,
                       double h) {
  if (k == word.size()) {
    const cplx v = f(y);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream os;
      os << "non-finite derivative sample at (phi=" << y.phi << ", s=" << y.s << ")";
      throw DomainError(os.str());
    }
    return v;
  }
  auto at = [&](double t) { return nested_derivative(f, word, k + 1, act(expm(word[k] * (-t)), y), h); };
  auto central = [&](double step) { return (at(step) - at(-step)) / (2.0 * step); };
  return (4.0 * central(h / 2) - central(h)) / 3.0;
}

}  // namespace

double schwartz_seminorm(const FunctionOnY& f, const SchwartzSeminorm& sn, const GridSpec& grid) {
  if (sn.order < 0 || sn.derivatives[0] < 0 || sn.derivatives[1] < 0 || sn.derivatives[2] < 0)
    throw InvalidArgument("seminorm orders must be >= 0");
  grid.validate();
  std::vector<LieVec> word;
  for (int i = 0; i < sn.derivatives[0]; ++i) word.push_back(lie_H());
  for (int i = 0; i < sn.derivatives[1]; ++i) word.push_back(lie_E());
  for (int i = 0; i < sn.derivatives[2]; ++i) word.push_back(lie_F());
  double sup = 0.0;
  for (int j = 0; j < grid.s.points; ++j) {
    for (int i = 0; i < grid.angle.points; ++i) {
      const PointY y = PointY::from_chart(grid.angle.node(i), grid.s.node(j));
      const GroupElement g = section(y);
      const double w = theta_weight(g) * std::pow(1.0 + variety_norm(g), sn.order);
      sup = std::max(sup, w * std::abs(nested_derivative(f, word, 0, y, 1e-2)));
    }
  }
  return sup;
}

AnalyticProbe l1_analytic_probe(const FunctionOnY& f, const std::vector<LieVec>& directions, double step,
                                const QuadratureSpec& spec, int sweep) {
  if (!f.has_complex_extension()) throw UnsupportedFamily("function '" + f.id + "' has no complex extension");
  if (!(step >= 0) || sweep < 1) throw InvalidArgument("analytic probe needs step >= 0 and sweep >= 1");
  AnalyticProbe out;
  out.directions = directions;
  for (int k = 0; k <= sweep; ++k) out.steps.push_back(step * k / sweep);
  for (const auto& u : directions) {
    std::vector<double> row;
    for (double eps : out.steps) {
      const CMat c = expm_imag(u, eps);
      FunctionOnY shifted = f;
      auto h = f.holomorphic;
      shifted.sampler = [h, c](const PointY& y) { return h(act_complex(c, real_ambient(y))); };
      double v;
      try {
        v = invariant_l1(shifted, spec).value.real();
      } catch (const std::exception&) {
        v = std::numeric_limits<double>::infinity();
      }
      if (!std::isfinite(v)) out.bounded = false;
      row.push_back(v);
    }
    out.norms.push_back(std::move(row));
  }
  return out;
}

}  // namespace hororadon
