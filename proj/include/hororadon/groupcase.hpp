#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hororadon/quadrature.hpp"
#include "hororadon/sl2.hpp"

namespace hororadon {

struct GroupFunction {
  std::string id;
  std::function<cplx(const GroupElement&)> sampler;
  // |f(g n_x nbar_y h^-1)| ~ |x|^-p and the inner masses ~ |y|^-p; 0 means faster than any power
  double tail_exponent = 0.0;

  cplx operator()(const GroupElement& g) const { return sampler(g); }
};

// 2^k ((a + d) + i (b - c))^-k, any k >= 1 (no integrability check)
GroupFunction matrix_coefficient(int k);
// integrable discrete-series coefficient, k >= 3
GroupFunction ds_coefficient(int k);
// exp(-|g|_F^2 / w^2)
GroupFunction matrix_gaussian(double width);
// exp(-a b^2) exp(-b c^2) in the entries b, c, so that f(n_x nbar_y) = e^{-a x^2} e^{-b y^2}
GroupFunction separable_gaussian(double a, double b);
GroupFunction zero_group_function();
// "grpds:k", "grpgauss:w", "zero"
GroupFunction parse_group_family(std::string_view spec);

struct GroupPointPair {
  GroupElement g;
  GroupElement h;
};

struct GroupRadonValue {
  cplx value{};
  double error = 0.0;
  double mass = 0.0;
};

// int int f(g n_x nbar_y h^-1) dx dy; x_inner chooses the order of the iterated integrals
GroupRadonValue group_radon(const GroupFunction& f, const GroupPointPair& pair, const QuadratureSpec& spec,
                            bool x_inner = true);

struct FubiniCheck {
  cplx x_inner{};
  cplx y_inner{};
  double mass = 0.0;
  double residual = 0.0;
};

FubiniCheck fubini_factorization_check(const GroupFunction& f, const GroupPointPair& pair,
                                       const QuadratureSpec& spec);

// Haar measure dg = e^{2s} dk ds dx on G = KAN with dk = dtheta / 2pi. In KAK coordinates the same
// measure is 2 pi sinh(2t) dk1 dt dk2. Angles use an n-point periodic trapezoid.
QuadResult haar_integral_kak(const GroupFunction& f, const QuadratureSpec& spec, int angle_nodes = 16);
QuadResult haar_integral_kan(const GroupFunction& f, const QuadratureSpec& spec, int angle_nodes = 16);

// 2 pi int_0^T sinh(2t) |f(a_t)| dt for a function with K-bi-invariant modulus
double haar_mass_to(const GroupFunction& f, double T, const QuadratureSpec& spec);

}  // namespace hororadon
