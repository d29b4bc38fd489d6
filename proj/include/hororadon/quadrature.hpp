#pragma once

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hororadon {

using cplx = std::complex<double>;
using LineFunction = std::function<cplx(double)>;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct QuadResult {
  cplx value{};
  double error = 0.0;
  // integral of |f| from the same rule, used for scale-free tolerances
  double l1 = 0.0;
  int evaluations = 0;
  int intervals = 0;
};

class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, QuadResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadResult& best() const noexcept { return best_; }

 private:
  QuadResult best_;
};

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 4000;
  double truncation_radius = 40.0;
  // |f(x)| ~ |x|^-p for large |x|; 0 means faster than any power
  double tail_exponent = 0.0;

  void validate() const;
  QuadratureSpec with_tail(double p) const {
    QuadratureSpec s = *this;
    s.tail_exponent = p;
    return s;
  }
  QuadratureSpec with_radius(double r) const {
    QuadratureSpec s = *this;
    s.truncation_radius = r;
    return s;
  }
};

struct Axis {
  double lower = 0.0;
  double upper = 1.0;
  int points = 2;
  // periodic axes omit the upper endpoint
  bool periodic = false;

  void validate() const;
  double step() const { return (upper - lower) / (periodic ? points : points - 1); }
  double node(int i) const { return lower + i * step(); }
};

struct GridSpec {
  Axis angle;
  Axis s;

  void validate() const;
  int size() const { return angle.points * s.points; }
  static GridSpec xi(int n_angle, int n_s, double s_lo, double s_hi);
};

// Adaptive Gauss-Kronrod (21 point) over [a,b]; a and b may be infinite.
QuadResult integrate(const LineFunction& f, double a, double b, const QuadratureSpec& spec);
QuadResult integrate_line(const LineFunction& f, const QuadratureSpec& spec);

// f behaves like c |x - x0|^exponent at each listed point (complex exponent, Re > -1); a and b must
// be finite. Cells are graded down to 1e-9 max(1, |x0|); the rest uses the exact power-law integral.
QuadResult integrate_singular(const LineFunction& f, double a, double b,
                              std::span<const double> singular_points, cplx exponent,
                              const QuadratureSpec& spec);

struct UniformSamples {
  double start = 0.0;
  double step = 1.0;
  std::vector<cplx> values;
  double node(std::size_t i) const { return start + static_cast<double>(i) * step; }
};

struct LineFourierResult {
  std::vector<cplx> values;
  bool truncated = false;
  double edge_ratio = 0.0;
  bool fast_path = false;
};

// Trapezoid approximation of  int e^{(rho_hat + lambda) s} F(s) ds  for each lambda.
LineFourierResult line_fourier(const UniformSamples& samples, double rho_hat,
                               std::span<const cplx> lambdas, double edge_tol = 1e-8);

// Direct summation, exposed for cross-checks of the chirp-z path.
LineFourierResult line_fourier_direct(const UniformSamples& samples, double rho_hat,
                                      std::span<const cplx> lambdas, double edge_tol = 1e-8);

}  // namespace hororadon
