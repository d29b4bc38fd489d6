#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hororadon/funcspace.hpp"

namespace hororadon {

using XiFunction = std::function<cplx(const HoroPoint&)>;

// Samples over an (angle, s) grid, stored s-major.
struct TransformGrid {
  GridSpec grid;
  std::vector<cplx> values;
  std::vector<double> errors;
  std::vector<double> masses;
  std::vector<char> flagged;
  std::string source_id;
  std::string transform_id;

  std::size_t index(int ia, int is) const { return static_cast<std::size_t>(is) * grid.angle.points + ia; }
  cplx at(int ia, int is) const { return values[index(ia, is)]; }
  std::vector<double> slice_sup() const;
  int flagged_count() const;
  void write_csv(std::ostream& os) const;
  // periodic cubic in the angle, cubic in s, zero outside the s-range
  cplx interpolate(const HoroPoint& xi) const;
  XiFunction interpolator() const;
};

struct RadonValue {
  cplx value{};
  double error = 0.0;
  // integral of |f| along the same horocycle
  double mass = 0.0;
};

RadonValue radon(const FunctionOnY& f, const HoroPoint& xi, const QuadratureSpec& spec);
// R(f)(g M_H N), via the Iwasawa reduction g = k a n
RadonValue radon_at(const FunctionOnY& f, const GroupElement& g, const QuadratureSpec& spec);
TransformGrid radon_grid(const FunctionOnY& f, const GridSpec& grid, const QuadratureSpec& spec);

RadonValue radon_translated(const FunctionOnY& f, const HoroChart& chart, const HoroPoint& xi,
                            const QuadratureSpec& spec);
// int f(base x^-1 n_t x y0) dt for an arbitrary base element
RadonValue radon_translated(const FunctionOnY& f, const HoroChart& chart, const GroupElement& base,
                            const QuadratureSpec& spec);

double change_of_variables_check(const FunctionOnY& f, double k_angle, double s, const QuadratureSpec& spec);

double sup_bound_probe(const FunctionOnY& f, const GridSpec& grid, const QuadratureSpec& spec);

class DivergentIntegral : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

QuadResult dual_radon(const XiFunction& F, const GroupElement& g, const QuadratureSpec& spec);

struct MultiplierGrids {
  GridSpec xi = GridSpec::xi(32, 161, -6.0, 10.0);
  GridSpec y{Axis{0.0, 2.0 * M_PI, 16, true}, Axis{-4.0, 4.0, 81, false}};
  std::vector<int> modes{-2, -1, 0, 1, 2};
  std::vector<double> omegas{0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
};

struct MultiplierEntry {
  int mode;
  double omega;
  cplx ratio;
  bool defined;
};

std::vector<MultiplierEntry> inversion_multiplier_probe(const FunctionOnY& f, const MultiplierGrids& grids,
                                                        const QuadratureSpec& spec);

}  // namespace hororadon
