#include "hororadon/groupcase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace hororadon {

namespace {
// a_t overflows double precision beyond this; integrands are taken as 0 there
constexpr double kMaxCartan = 300.0;
}  // namespace

GroupFunction matrix_coefficient(int k) {
  if (k < 1) throw InvalidArgument("matrix coefficient weight must be >= 1");
  GroupFunction f;
  f.id = "grpds:" + std::to_string(k);
  f.tail_exponent = k > 1 ? k : 0.0;
  f.sampler = [k](const GroupElement& g) {
    const cplx w = 2.0 / cplx(g.a() + g.d(), g.b() - g.c());
    cplx r = 1.0;
    for (int i = 0; i < k; ++i) r *= w;
    return r;
  };
  return f;
}

GroupFunction ds_coefficient(int k) {
  if (k < 3) throw InvalidArgument("ds_coefficient needs k >= 3 for integrability on G");
  return matrix_coefficient(k);
}

GroupFunction matrix_gaussian(double width) {
  if (!(width > 0)) throw InvalidArgument("gaussian width must be positive");
  GroupFunction f;
  f.id = "grpgauss:" + std::to_string(width);
  const double k = 1.0 / (width * width);
  f.sampler = [k](const GroupElement& g) { return cplx(std::exp(-k * g.frobenius2())); };
  return f;
}

GroupFunction separable_gaussian(double a, double b) {
  GroupFunction f;
  f.id = "separable";
  f.sampler = [a, b](const GroupElement& g) { return cplx(std::exp(-a * g.b() * g.b() - b * g.c() * g.c())); };
  return f;
}

GroupFunction zero_group_function() {
  GroupFunction f;
  f.id = "zero";
  f.sampler = [](const GroupElement&) { return cplx(0.0); };
  return f;
}

GroupFunction parse_group_family(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string name(spec.substr(0, colon));
  const std::string arg = colon == std::string_view::npos ? std::string() : std::string(spec.substr(colon + 1));
  try {
    std::size_t pos = 0;
    if (name == "zero" && arg.empty()) return zero_group_function();
    if (name == "grpds") {
      const int k = std::stoi(arg, &pos);
      if (pos == arg.size()) return ds_coefficient(k);
    } else if (name == "grpgauss") {
      const double w = std::stod(arg, &pos);
      if (pos == arg.size()) return matrix_gaussian(w);
    }
  } catch (const InvalidArgument&) {
    throw;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("unknown group function family '" + std::string(spec) + "'");
}

GroupRadonValue group_radon(const GroupFunction& f, const GroupPointPair& pair, const QuadratureSpec& spec,
                            bool x_inner) {
  spec.validate();
  const GroupElement hinv = pair.h.inverse();
  const QuadratureSpec q = spec.with_tail(f.tail_exponent);
  auto point = [&](double x, double y) { return f(pair.g * unipotent(x) * opposite_unipotent(y) * hinv); };
  // inner results are cached so the mass pass reuses the value pass nodes
  std::map<double, QuadResult> cache;
  double worst_rel = 0.0;
  auto inner = [&](double outer) -> const QuadResult& {
    auto it = cache.find(outer);
    if (it != cache.end()) return it->second;
    const QuadResult r = integrate_line([&](double t) { return x_inner ? point(t, outer) : point(outer, t); }, q);
    if (r.l1 > 0) worst_rel = std::max(worst_rel, r.error / r.l1);
    return cache.emplace(outer, r).first->second;
  };
  const QuadResult val = integrate_line([&](double o) { return inner(o).value; }, q);
  const QuadResult mass = integrate_line([&](double o) { return cplx(inner(o).l1); }, q);
  GroupRadonValue out;
  out.value = val.value;
  out.mass = mass.value.real();
  out.error = val.error + worst_rel * out.mass;
  return out;
}

FubiniCheck fubini_factorization_check(const GroupFunction& f, const GroupPointPair& pair,
                                       const QuadratureSpec& spec) {
  FubiniCheck out;
  const GroupRadonValue a = group_radon(f, pair, spec, true);
  const GroupRadonValue b = group_radon(f, pair, spec.with_radius(0.625 * spec.truncation_radius), false);
  out.x_inner = a.value;
  out.y_inner = b.value;
  out.mass = std::max(a.mass, b.mass);
  const double scale = std::max({std::abs(a.value), std::abs(b.value), out.mass});
  out.residual = scale == 0.0 ? 0.0 : std::abs(a.value - b.value) / scale;
  return out;
}

QuadResult haar_integral_kak(const GroupFunction& f, const QuadratureSpec& spec, int n) {
  if (n < 1) throw InvalidArgument("angle_nodes must be >= 1");
  QuadResult out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const GroupElement k1 = rotation(2.0 * M_PI * i / n), k2 = rotation(2.0 * M_PI * j / n);
      const QuadResult r = integrate(
          [&](double t) -> cplx {
            if (t > kMaxCartan) return 0.0;
            const cplx v = f(k1 * cartan(t) * k2);
            return v == 0.0 ? v : 2.0 * M_PI * std::sinh(2.0 * t) * v;
          },
          0.0,
          std::numeric_limits<double>::infinity(), spec);
      out.value += r.value / double(n * n);
      out.error += r.error / double(n * n);
      out.l1 += r.l1 / double(n * n);
      out.evaluations += r.evaluations;
    }
  return out;
}

QuadResult haar_integral_kan(const GroupFunction& f, const QuadratureSpec& spec, int n) {
  if (n < 1) throw InvalidArgument("angle_nodes must be >= 1");
  QuadResult out;
  for (int i = 0; i < n; ++i) {
    const GroupElement k = rotation(2.0 * M_PI * i / n);
    const QuadResult r = integrate_line(
        [&](double s) -> cplx {
          if (std::abs(s) > kMaxCartan) return 0.0;
          const GroupElement ka = k * cartan(s);
          const double scale = std::max(1.0, std::exp(-2.0 * s) * (1.0 + std::exp(2.0 * s)));
          return std::exp(2.0 * s) *
                 integrate_line([&](double x) { return f(ka * unipotent(x)); },
                                spec.with_tail(f.tail_exponent).with_radius(spec.truncation_radius * scale))
                     .value;
        },
        spec);
    out.value += r.value / double(n);
    out.error += r.error / double(n);
    out.l1 += r.l1 / double(n);
    out.evaluations += r.evaluations;
  }
  return out;
}

double haar_mass_to(const GroupFunction& f, double T, const QuadratureSpec& spec) {
  const QuadResult r = integrate(
      [&](double t) { return cplx(2.0 * M_PI * std::sinh(2.0 * t) * std::abs(f(cartan(t)))); }, 0.0, T,
      spec);
  return r.value.real();
}

}  // namespace hororadon
