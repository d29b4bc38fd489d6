#pragma once

#include <string>

#include "hororadon/quadrature.hpp"

namespace hororadon {

// [[a, b], [c, d]] with ad - bc = 1
class GroupElement {
 public:
  GroupElement() = default;
  // Renormalizes by sqrt(det); throws DomainError when det <= 0 or entries are not finite.
  GroupElement(double a, double b, double c, double d);

  static GroupElement unchecked(double a, double b, double c, double d);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  double det() const { return a_ * d_ - b_ * c_; }

  GroupElement inverse() const { return unchecked(d_, -b_, -c_, a_); }
  GroupElement transpose() const { return unchecked(a_, c_, b_, d_); }
  GroupElement operator-() const { return unchecked(-a_, -b_, -c_, -d_); }
  friend GroupElement operator*(const GroupElement& x, const GroupElement& y);

  double frobenius2() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }
  double max_abs_diff(const GroupElement& o) const;
  std::string str() const;

 private:
  double a_ = 1.0, b_ = 0.0, c_ = 0.0, d_ = 1.0;
};

GroupElement identity();
GroupElement rotation(double theta);        // r_theta = [[c, -s], [s, c]]
GroupElement cartan(double s);              // a_s = diag(e^s, e^-s)
GroupElement unipotent(double x);           // n_x = [[1, x], [0, 1]]
GroupElement opposite_unipotent(double y);  // [[1, 0], [y, 1]]
GroupElement hyperbolic(double u);          // exp(uZ), Z = [[0, 1], [1, 0]]
GroupElement weyl();                        // w0 = r_{pi/2}

GroupElement theta(const GroupElement& g);  // transpose inverse
GroupElement tau(const GroupElement& g);    // eta theta(g) eta, eta = diag(1, -1)

// h diag(1,-1) + e E + f F
struct LieVec {
  double h = 0.0, e = 0.0, f = 0.0;

  LieVec operator+(const LieVec& o) const { return {h + o.h, e + o.e, f + o.f}; }
  LieVec operator*(double t) const { return {h * t, e * t, f * t}; }
  double norm() const;
};

LieVec lie_H();
LieVec lie_E();
LieVec lie_F();
LieVec lie_Z();

double killing(const LieVec& x, const LieVec& y);
LieVec bracket(const LieVec& x, const LieVec& y);
LieVec adjoint(const GroupElement& g, const LieVec& x);  // g X g^-1
GroupElement expm(const LieVec& x);

struct Iwasawa {
  double theta_k;  // [0, 2pi)
  double s;
  double x;
};
Iwasawa iwasawa(const GroupElement& g);

struct PolarKAH {
  double theta_k;  // [0, pi)
  double s;
  double u;
  int eps;
  GroupElement recompose() const;
};

class DegenerateDecomposition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PolarKAH polar_kah(const GroupElement& g);

enum class Orbit { e, w0 };

struct HwanFactorization {
  Orbit orbit;
  double u;
  double s;
  double x;
  int eps;
  GroupElement recompose() const;
};

class BoundaryOrbit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kDegeneracyThreshold = 1e-12;

HwanFactorization hwan_decompose(const GroupElement& g, double threshold = kDegeneracyThreshold);

double variety_norm(const GroupElement& g);
double phi0(const GroupElement& g);
double theta_weight(const GroupElement& g);
bool in_Gh(const GroupElement& x);

}  // namespace hororadon
