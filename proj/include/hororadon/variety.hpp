#pragma once

#include <array>

#include "hororadon/quadrature.hpp"
#include "hororadon/sl2.hpp"

namespace hororadon {

struct FunctionOnY;

// Point of x1^2 + x2^2 - x3^2 = 1, the adjoint orbit of Z, with chart x = (rho cos phi, rho sin phi, s).
struct PointY {
  std::array<double, 3> x{0.0, 1.0, 0.0};
  double phi = 0.5 * M_PI;
  double s = 0.0;

  static PointY from_ambient(double x1, double x2, double x3);
  static PointY from_chart(double phi, double s);
  double constraint_residual() const;
  double chart_residual() const;
};

PointY base_point();
PointY antipode(const PointY& y);

// Xi coordinates: angle phi~ in [0, 2pi) and A-parameter s; the base element is r_{phi~/2} a_s.
struct HoroPoint {
  double angle = 0.0;
  double s = 0.0;

  HoroPoint() = default;
  HoroPoint(double angle, double s);
  GroupElement base() const;
};

// Xi coordinates of g M_H N.
HoroPoint horo_point(const GroupElement& g);

class HoroChart {
 public:
  HoroChart() = default;
  explicit HoroChart(const GroupElement& x);
  const GroupElement& base() const { return x_; }

 private:
  GroupElement x_;
};

PointY iota(const GroupElement& g);
PointY act(const GroupElement& g, const PointY& y);
// r_theta a_s with iota(section(y)) = y
GroupElement section(const PointY& y);

PointY horocycle(const HoroPoint& xi, double x);
PointY chart_transport(const HoroChart& chart, const HoroPoint& xi, double x);

QuadResult invariant_integral(const FunctionOnY& f, const QuadratureSpec& spec);
QuadResult invariant_l1(const FunctionOnY& f, const QuadratureSpec& spec);

cplx wave_operator(const FunctionOnY& f, const PointY& y, double step = 1e-2);

struct Derivative {
  cplx value;
  double error;
};
Derivative lie_derivative(const FunctionOnY& f, const LieVec& u, const PointY& y, double step = 1e-3);

}  // namespace hororadon
