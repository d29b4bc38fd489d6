#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hororadon/variety.hpp"

namespace hororadon {

using AmbientC = std::array<cplx, 3>;

enum class DecayClass { DiscreteSeries, AmbientGaussian, Custom };

struct FunctionOnY {
  std::string id;
  DecayClass decay = DecayClass::Custom;
  int series_order = 0;
  // |f| ~ |x|^-p along horocycles and ~ |s|^-p in the chart; 0 means faster than any power
  double horocycle_decay = 0.0;
  double chart_decay = 0.0;
  bool smooth = true;
  std::optional<double> eigenvalue;
  std::function<cplx(const PointY&)> sampler;
  // holomorphic extension in ambient coordinates; empty when the family has none
  std::function<cplx(const AmbientC&)> holomorphic;

  cplx operator()(const PointY& y) const { return sampler(y); }
  bool has_complex_extension() const { return static_cast<bool>(holomorphic); }
};

class UnsupportedFamily : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FunctionOnY discrete_series(int n);
FunctionOnY gaussian_bump(const PointY& center, double width);
// e^{i m phi} exp(-s^2 / w^2)
FunctionOnY mode_bump(int m, double width);
FunctionOnY zero_function();
FunctionOnY custom_function(std::string id, std::function<cplx(const PointY&)> sampler, double horocycle_decay,
                            double chart_decay);

FunctionOnY antipodal(const FunctionOnY& f);                     // y -> f(-y)
FunctionOnY translate(const FunctionOnY& f, const GroupElement& g);  // y -> f(g^-1 y)
FunctionOnY scaled(const FunctionOnY& f, cplx alpha);
FunctionOnY sum(const FunctionOnY& f, const FunctionOnY& g);

// "ds:n", "bump:cx,cy,cz,w", "mode:m,w", "zero"
FunctionOnY parse_family(std::string_view spec);

std::vector<PointY> validation_grid();

struct Certification {
  bool finite = true;
  double eigen_residual = 0.0;
  bool pass = true;
};
Certification certify(const FunctionOnY& f);

struct SchwartzSeminorm {
  // counts of H, E, F derivatives, applied in that order
  std::array<int, 3> derivatives{0, 0, 0};
  int order = 0;
};

double schwartz_seminorm(const FunctionOnY& f, const SchwartzSeminorm& sn, const GridSpec& grid);

struct AnalyticProbe {
  std::vector<LieVec> directions;
  std::vector<double> steps;
  // norms[d][k]: L1 norm of f(exp(i steps[k] u_d) .)
  std::vector<std::vector<double>> norms;
  bool bounded = true;
};

AnalyticProbe l1_analytic_probe(const FunctionOnY& f, const std::vector<LieVec>& directions, double step,
                                const QuadratureSpec& spec, int sweep = 4);

}  // namespace hororadon
