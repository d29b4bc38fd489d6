#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hororadon/radon.hpp"

namespace hororadon {

// lambda with a_s^lambda = e^{lambda s}; rho = 1
struct SpectralParam {
  cplx lambda{};
};

struct OrbitFunctional {
  cplx eta_e{};
  cplx eta_w{};
};

// s-window for transforms along A
struct SpectralWindow {
  double s_min = -10.0;
  double s_max = 30.0;
  double step = 0.05;
};

struct FourierAValue {
  cplx value{};
  bool truncated = false;
  double edge_ratio = 0.0;
};

// int e^{(1 + lambda) s} F(xi . a_s) ds with xi . a_s = (angle, xi.s + s)
FourierAValue fourier_A(const XiFunction& F, cplx lambda, const HoroPoint& xi, const SpectralWindow& window = {});
// grid slice at the angle node equal to `angle`
FourierAValue fourier_A(const TransformGrid& F, cplx lambda, double angle);

struct PoissonValue {
  cplx value{};
  Orbit orbit = Orbit::e;
  bool boundary = false;
};

// |v1^2 - v2^2|^{(lambda - 1)/2} eta_{w(g)}, v = g e1; right covariance a_s^{lambda - 1}
PoissonValue poisson_j(cplx lambda, const OrbitFunctional& eta, const GroupElement& g);

// int_Y f(y) j(y^-1 g) dphi ds
QuadResult fourier_Y(const FunctionOnY& f, cplx lambda, const OrbitFunctional& eta, const GroupElement& g,
                     const QuadratureSpec& spec);

// Jacobian of (t, x) -> a_t n_x y0 against dphi ds
constexpr double kHorocycleJacobian = 2.0;

struct IdentityCheck {
  cplx lhs{};
  cplx rhs{};
  double residual = 0.0;
  double lhs_error = 0.0;
  bool rhs_truncated = false;
};

IdentityCheck fourier_radon_identity(const FunctionOnY& f, cplx lambda, const OrbitFunctional& eta,
                                     const GroupElement& g, const QuadratureSpec& spec,
                                     const SpectralWindow& window = {});

struct IdentityRow {
  cplx lambda;
  std::string g_id;
  OrbitFunctional eta;
  IdentityCheck check;
};
void write_identity_csv(std::ostream& os, const std::vector<IdentityRow>& rows);

struct GramResult {
  int n = 0;
  std::vector<cplx> gram;  // row-major n x n
  std::vector<double> singular_values;  // ascending
  double sigma_min = 0.0;
};

GramResult injectivity_gram(const std::vector<FunctionOnY>& functions, const GridSpec& grid,
                            const QuadratureSpec& spec);

}  // namespace hororadon
