#include "hororadon/quadrature.hpp"

#include <fftw3.h>

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <mutex>
#include <queue>
#include <sstream>

namespace hororadon {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0) || !(abs_tol > 0)) throw InvalidArgument("quadrature tolerances must be positive");
  if (max_subdivisions < 1) throw InvalidArgument("max_subdivisions must be >= 1");
  if (!(truncation_radius > 0) || !std::isfinite(truncation_radius))
    throw InvalidArgument("truncation radius must be positive and finite");
  if (tail_exponent < 0 || (tail_exponent > 0 && tail_exponent <= 1))
    throw InvalidArgument("tail exponent must be 0 (fast decay) or > 1");
}

void Axis::validate() const {
  if (points < 2) throw InvalidArgument("grid axis needs at least 2 points");
  if (!(upper > lower)) throw InvalidArgument("grid axis needs upper > lower");
}

void GridSpec::validate() const {
  angle.validate();
  s.validate();
}

GridSpec GridSpec::xi(int n_angle, int n_s, double s_lo, double s_hi) {
  GridSpec g;
  g.angle = Axis{0.0, 2.0 * M_PI, n_angle, true};
  g.s = Axis{s_lo, s_hi, n_s, false};
  return g;
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Rule {
  std::array<double, 11> x{};
  std::array<double, 11> wk{};
  std::array<double, 11> wg{};
};

const Rule& gk21() {
  static const Rule rule = [] {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    Rule r;
    const auto& ax = gauss_kronrod<double, 21>::abscissa();
    const auto& wk = gauss_kronrod<double, 21>::weights();
    const auto& wg = gauss<double, 10>::weights();
    for (int i = 0; i < 11; ++i) {
      r.x[i] = ax[i];
      r.wk[i] = wk[i];
      // odd Kronrod abscissae are the Gauss-10 nodes
      r.wg[i] = (i % 2 == 1) ? wg[i / 2] : 0.0;
    }
    return r;
  }();
  return rule;
}

// x = scale * u^-kappa on u in (0,1] for tails, identity otherwise
struct Map {
  bool tail = false;
  double scale = 0.0;
  double kappa = 1.0;
};

struct Piece {
  double lo, hi;
  int map;
  cplx value{};
  double error = 0.0;
  double l1 = 0.0;
};

cplx checked(const cplx& v, double x) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    std::ostringstream os;
    os << "non-finite integrand sample at x=" << x;
    throw DomainError(os.str());
  }
  return v;
}

cplx sample(const LineFunction& f, const Map& m, double u) {
  if (!m.tail) return checked(f(u), u);
  const double p = std::pow(u, -m.kappa);
  const double x = m.scale * p;
  if (!std::isfinite(x)) return 0.0;
  const cplx v = checked(f(x), x);
  if (v == 0.0) return 0.0;
  const double jac = m.kappa * std::abs(m.scale) * p / u;
  return checked(v * jac, x);
}

void evaluate(const LineFunction& f, const Map& m, Piece& p, int& evals) {
  const Rule& r = gk21();
  const double c = 0.5 * (p.lo + p.hi);
  const double h = 0.5 * (p.hi - p.lo);
  std::array<cplx, 21> fv;
  fv[0] = sample(f, m, c);
  for (int i = 1; i < 11; ++i) {
    fv[2 * i - 1] = sample(f, m, c - h * r.x[i]);
    fv[2 * i] = sample(f, m, c + h * r.x[i]);
  }
  evals += 21;
  cplx resk = fv[0] * r.wk[0];
  cplx resg = fv[0] * r.wg[0];
  double resabs = std::abs(fv[0]) * r.wk[0];
  for (int i = 1; i < 11; ++i) {
    const cplx s = fv[2 * i - 1] + fv[2 * i];
    resk += r.wk[i] * s;
    resg += r.wg[i] * s;
    resabs += r.wk[i] * (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i]));
  }
  const cplx mean = 0.5 * resk;
  double resasc = r.wk[0] * std::abs(fv[0] - mean);
  for (int i = 1; i < 11; ++i)
    resasc += r.wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));
  p.value = resk * h;
  resabs *= std::abs(h);
  resasc *= std::abs(h);
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  p.error = err;
  p.l1 = resabs;
}

struct Fixed {
  cplx value{};
  double error = 0.0;
  double l1 = 0.0;
};

QuadResult run_adaptive(const LineFunction& f, const std::vector<Map>& maps, std::vector<Piece> pieces,
                        const Fixed& fixed, const QuadratureSpec& spec) {
  QuadResult out;
  for (auto& p : pieces) evaluate(f, maps[p.map], p, out.evaluations);

  auto by_error = [&pieces](int i, int j) { return pieces[i].error < pieces[j].error; };
  std::priority_queue<int, std::vector<int>, decltype(by_error)> heap(by_error);
  for (int i = 0; i < static_cast<int>(pieces.size()); ++i) heap.push(i);

  cplx total{};
  double err = 0.0, l1 = 0.0;
  auto resum = [&] {
    total = fixed.value;
    err = fixed.error;
    l1 = fixed.l1;
    for (const auto& p : pieces) {
      total += p.value;
      err += p.error;
      l1 += p.l1;
    }
  };
  resum();

  int subdivisions = 0;
  auto finish = [&] {
    resum();
    out.value = total;
    out.error = err;
    out.l1 = l1;
    out.intervals = static_cast<int>(pieces.size());
    return out;
  };

  while (true) {
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (err <= tol || err <= 100.0 * kEps * l1) return finish();
    if (heap.empty()) throw AccuracyError("quadrature stalled: no splittable interval left", finish());
    if (subdivisions >= spec.max_subdivisions)
      throw AccuracyError("quadrature did not converge within max subdivisions", finish());
    const int i = heap.top();
    heap.pop();
    Piece& worst = pieces[i];
    const double width = worst.hi - worst.lo;
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (width <= 1e-13 * std::max(std::abs(worst.lo), std::abs(worst.hi)) || width < 1e-250 || mid <= worst.lo ||
        mid >= worst.hi)
      continue;
    Piece left{worst.lo, mid, worst.map};
    Piece right{mid, worst.hi, worst.map};
    evaluate(f, maps[worst.map], left, out.evaluations);
    evaluate(f, maps[worst.map], right, out.evaluations);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    pieces[i] = left;
    pieces.push_back(right);
    heap.push(i);
    heap.push(static_cast<int>(pieces.size()) - 1);
    if (++subdivisions % 64 == 0) resum();
  }
}

double tail_kappa(double p) {
  if (p == 0.0) return 1.0;
  return std::clamp(2.0 / (p - 1.0), 0.25, 4.0);
}

void add_tail(std::vector<Map>& maps, std::vector<Piece>& pieces, double scale, double kappa, double u_lo,
              double u_hi) {
  if (!(u_hi > u_lo)) return;
  maps.push_back(Map{true, scale, kappa});
  const int id = static_cast<int>(maps.size()) - 1;
  double hi = u_hi;
  for (double cut = 0.25; cut > 1e-4; cut *= 0.25) {
    if (cut >= hi) continue;
    if (cut <= u_lo) break;
    pieces.push_back(Piece{cut, hi, id});
    hi = cut;
  }
  pieces.push_back(Piece{u_lo, hi, id});
}

}  // namespace

QuadResult integrate(const LineFunction& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  if (std::isnan(a) || std::isnan(b)) throw InvalidArgument("NaN integration bound");
  if (a == b) return {};
  if (a > b) {
    QuadResult r = integrate(f, b, a, spec);
    r.value = -r.value;
    return r;
  }
  const double R = spec.truncation_radius;
  const double kappa = tail_kappa(spec.tail_exponent);
  std::vector<Map> maps{Map{}};
  std::vector<Piece> pieces;

  const double wlo = std::max(a, -R), whi = std::min(b, R);
  if (wlo < whi) {
    const int n = std::clamp(static_cast<int>(std::ceil((whi - wlo) / (R / 4.0))), 1, 8);
    for (int i = 0; i < n; ++i) {
      const double lo = wlo + (whi - wlo) * i / n;
      const double hi = (i + 1 == n) ? whi : wlo + (whi - wlo) * (i + 1) / n;
      pieces.push_back(Piece{lo, hi, 0});
    }
  }
  // |x| = R u^-kappa  <=>  u = (R/|x|)^(1/kappa)
  auto u_of = [&](double x) { return std::isinf(x) ? 0.0 : std::pow(R / std::abs(x), 1.0 / kappa); };
  if (a < -R) add_tail(maps, pieces, -R, kappa, u_of(a), u_of(std::min(b, -R)));
  if (b > R) add_tail(maps, pieces, R, kappa, u_of(b), u_of(std::max(a, R)));
  return run_adaptive(f, maps, std::move(pieces), Fixed{}, spec);
}

QuadResult integrate_line(const LineFunction& f, const QuadratureSpec& spec) {
  return integrate(f, -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), spec);
}

QuadResult integrate_singular(const LineFunction& f, double a, double b, std::span<const double> singular_points,
                              cplx exponent, const QuadratureSpec& spec) {
  spec.validate();
  if (!(exponent.real() > -1.0)) throw InvalidArgument("singularity exponent must be > -1 (non-integrable otherwise)");
  if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidArgument("integrate_singular needs finite bounds");
  if (a == b) return {};
  if (a > b) {
    QuadResult r = integrate_singular(f, b, a, singular_points, exponent, spec);
    r.value = -r.value;
    return r;
  }
  const double merge = 1e-14 * std::max({1.0, std::abs(a), std::abs(b)});
  std::vector<double> sing;
  for (double p : singular_points)
    if (p >= a - merge && p <= b + merge) sing.push_back(std::clamp(p, a, b));
  std::sort(sing.begin(), sing.end());
  sing.erase(std::unique(sing.begin(), sing.end(), [&](double x, double y) { return y - x <= merge; }), sing.end());

  std::vector<double> brk{a};
  for (double p : sing)
    if (p - brk.back() > merge) brk.push_back(p);
  if (b - brk.back() > merge) brk.push_back(b);
  else brk.back() = b;
  auto is_singular = [&](double x) {
    return std::any_of(sing.begin(), sing.end(), [&](double p) { return std::abs(p - x) <= merge; });
  };

  constexpr double sigma = 0.25;
  const double re1 = 1.0 + exponent.real();
  const int max_cells = std::clamp(
      static_cast<int>(std::ceil(std::log(1e-3 * spec.rel_tol) / (re1 * std::log(sigma)))), 1, 400);

  std::vector<Map> maps{Map{}};
  std::vector<Piece> pieces;
  Fixed fixed;
  auto grade = [&](double x0, double far) {
    const double dir = far > x0 ? 1.0 : -1.0;
    const double floor = 1e-9 * std::max(1.0, std::abs(x0));
    double outer = std::abs(far - x0);
    for (int k = 0; k < max_cells && outer * sigma >= floor; ++k) {
      const double inner = outer * sigma;
      const double p = x0 + dir * inner, q = x0 + dir * outer;
      pieces.push_back(Piece{std::min(p, q), std::max(p, q), 0});
      outer = inner;
    }
    // innermost cell: f = |x - x0|^exponent g with g linear, g' from a second sample at twice the offset
    const double xe = x0 + dir * outer, x2 = x0 + 2.0 * dir * outer;
    const double d1 = std::abs(xe - x0), d2 = std::abs(x2 - x0);
    const cplx g1 = checked(f(xe), xe) / std::pow(cplx(d1), exponent);
    const cplx g2 = checked(f(x2), x2) / std::pow(cplx(d2), exponent);
    const cplx gp = (g2 - g1) / (d2 - d1);
    const cplx lead = g1 * std::pow(cplx(d1), exponent + 1.0) / (1.0 + exponent);
    const cplx slope = gp * std::pow(cplx(d1), exponent + 2.0) * (1.0 / (2.0 + exponent) - 1.0 / (1.0 + exponent));
    const cplx corr = lead + slope;
    fixed.value += corr;
    fixed.error += 1e-2 * std::abs(slope) + std::abs(corr) * d1 * d1;
    fixed.l1 += std::abs(corr);
  };

  for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
    const double p = brk[i], q = brk[i + 1];
    const bool sp = is_singular(p), sq = is_singular(q);
    if (!sp && !sq) {
      pieces.push_back(Piece{p, q, 0});
    } else if (sp && sq) {
      const double mid = 0.5 * (p + q);
      grade(p, mid);
      grade(q, mid);
    } else if (sp) {
      grade(p, q);
    } else {
      grade(q, p);
    }
  }
  return run_adaptive(f, maps, std::move(pieces), fixed, spec);
}

namespace {

void check_samples(const UniformSamples& s) {
  if (s.values.size() < 2) throw InvalidArgument("line_fourier needs at least 2 samples");
  if (!(s.step > 0) || !std::isfinite(s.start)) throw InvalidArgument("line_fourier needs a positive step");
}

void edge_diagnostic(const UniformSamples& s, double rho_hat, std::span<const cplx> lambdas, double edge_tol,
                     LineFourierResult& out) {
  double re_lo = 0.0, re_hi = 0.0;
  if (!lambdas.empty()) {
    re_lo = re_hi = lambdas[0].real();
    for (const auto& l : lambdas) {
      re_lo = std::min(re_lo, l.real());
      re_hi = std::max(re_hi, l.real());
    }
  }
  double ratio = 0.0;
  for (double re : {re_lo, re_hi}) {
    double peak = 0.0;
    for (std::size_t k = 0; k < s.values.size(); ++k)
      peak = std::max(peak, std::exp((rho_hat + re) * s.node(k)) * std::abs(s.values[k]));
    if (peak == 0.0) continue;
    const std::size_t n = s.values.size();
    const double edge = std::max(std::exp((rho_hat + re) * s.node(0)) * std::abs(s.values[0]),
                                 std::exp((rho_hat + re) * s.node(n - 1)) * std::abs(s.values[n - 1]));
    ratio = std::max(ratio, edge / peak);
  }
  out.edge_ratio = ratio;
  out.truncated = ratio > edge_tol;
}

double trap_weight(std::size_t k, std::size_t n, double h) { return (k == 0 || k + 1 == n) ? 0.5 * h : h; }

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

// y (length L) -> DFT in place; sign -1 forward, +1 backward
void fft(std::vector<cplx>& y, int sign) {
  const int L = static_cast<int>(y.size());
  auto* data = reinterpret_cast<fftw_complex*>(y.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(L, data, data, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(fftw_planner_mutex());
  fftw_destroy_plan(plan);
}

bool uniform_imaginary_lattice(std::span<const cplx> lambdas) {
  const std::size_t M = lambdas.size();
  if (M < 16) return false;
  const double re = lambdas[0].real();
  const double d = lambdas[1].imag() - lambdas[0].imag();
  if (d == 0.0) return false;
  for (std::size_t j = 0; j < M; ++j) {
    const double expect = lambdas[0].imag() + static_cast<double>(j) * d;
    if (std::abs(lambdas[j].real() - re) > 1e-14 * std::max(1.0, std::abs(re))) return false;
    if (std::abs(lambdas[j].imag() - expect) > 1e-12 * std::max(1.0, std::abs(expect))) return false;
  }
  return true;
}

}  // namespace

LineFourierResult line_fourier_direct(const UniformSamples& s, double rho_hat, std::span<const cplx> lambdas,
                                      double edge_tol) {
  check_samples(s);
  LineFourierResult out;
  edge_diagnostic(s, rho_hat, lambdas, edge_tol, out);
  const std::size_t n = s.values.size();
  out.values.reserve(lambdas.size());
  for (const auto& lam : lambdas) {
    cplx acc{};
    for (std::size_t k = 0; k < n; ++k) {
      const double sk = s.node(k);
      acc += trap_weight(k, n, s.step) * std::exp((rho_hat + lam) * sk) * s.values[k];
    }
    out.values.push_back(acc);
  }
  return out;
}

LineFourierResult line_fourier(const UniformSamples& s, double rho_hat, std::span<const cplx> lambdas,
                               double edge_tol) {
  check_samples(s);
  if (!uniform_imaginary_lattice(lambdas)) return line_fourier_direct(s, rho_hat, lambdas, edge_tol);

  LineFourierResult out;
  out.fast_path = true;
  edge_diagnostic(s, rho_hat, lambdas, edge_tol, out);
  const std::size_t N = s.values.size(), M = lambdas.size();
  const double c = lambdas[0].real();
  const double w0 = lambdas[0].imag();
  const double dw = lambdas[1].imag() - w0;
  const double h = s.step;
  const double beta = dw * h;

  std::size_t L = 1;
  while (L < N + M - 1) L <<= 1;
  std::vector<cplx> y(L), z(L);
  const cplx I(0.0, 1.0);
  for (std::size_t k = 0; k < N; ++k) {
    const double kk = static_cast<double>(k);
    const cplx a = trap_weight(k, N, h) * std::exp((rho_hat + c) * s.node(k)) * s.values[k];
    y[k] = a * std::exp(I * (w0 * kk * h + 0.5 * beta * kk * kk));
  }
  for (std::size_t m = 0; m < M; ++m) z[m] = std::exp(-I * (0.5 * beta * double(m) * double(m)));
  for (std::size_t m = 1; m < N; ++m) z[L - m] = std::exp(-I * (0.5 * beta * double(m) * double(m)));
  fft(y, -1);
  fft(z, -1);
  for (std::size_t i = 0; i < L; ++i) y[i] *= z[i];
  fft(y, +1);
  out.values.resize(M);
  for (std::size_t j = 0; j < M; ++j) {
    const double jj = static_cast<double>(j);
    const double wj = w0 + jj * dw;
    out.values[j] = y[j] / static_cast<double>(L) * std::exp(I * (wj * s.start + 0.5 * beta * jj * jj));
  }
  return out;
}

}  // namespace hororadon
