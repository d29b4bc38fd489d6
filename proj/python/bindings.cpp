#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hororadon/groupcase.hpp"
#include "hororadon/spectral.hpp"
#include "hororadon/verify.hpp"

namespace py = pybind11;
using namespace hororadon;

namespace {

QuadratureSpec spec_for(double rel_tol) {
  QuadratureSpec q;
  q.rel_tol = rel_tol;
  q.validate();
  return q;
}

py::dict radon_dict(const RadonValue& r) {
  py::dict d;
  d["value"] = r.value;
  d["error"] = r.error;
  d["mass"] = r.mass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Horospherical transforms on SL(2,R)/SO(1,1)";
  m.attr("__version__") = kVersion;

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnsupportedFamily>(m, "UnsupportedFamily", PyExc_ValueError);
  py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_RuntimeError);
  py::register_exception<DivergentIntegral>(m, "DivergentIntegral", PyExc_RuntimeError);

  py::class_<GroupElement>(m, "GroupElement")
      .def(py::init<double, double, double, double>(), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
      .def_property_readonly("a", &GroupElement::a)
      .def_property_readonly("b", &GroupElement::b)
      .def_property_readonly("c", &GroupElement::c)
      .def_property_readonly("d", &GroupElement::d)
      .def("inverse", &GroupElement::inverse)
      .def("__mul__", [](const GroupElement& x, const GroupElement& y) { return x * y; })
      .def("__repr__", &GroupElement::str);
  m.def("identity", &identity);
  m.def("rotation", &rotation, py::arg("theta"));
  m.def("cartan", &cartan, py::arg("s"));
  m.def("unipotent", &unipotent, py::arg("x"));
  m.def("iwasawa", [](const GroupElement& g) {
    const Iwasawa i = iwasawa(g);
    return py::make_tuple(i.theta_k, i.s, i.x);
  });
  m.def("in_Gh", &in_Gh);

  py::class_<FunctionOnY>(m, "FunctionOnY")
      .def_readonly("id", &FunctionOnY::id)
      .def("__call__", [](const FunctionOnY& f, double phi, double s) { return f(PointY::from_chart(phi, s)); },
           py::arg("phi"), py::arg("s"));
  m.def("parse_family", [](const std::string& s) { return parse_family(s); }, py::arg("spec"));

  m.def(
      "radon",
      [](const FunctionOnY& f, double angle, double s, double rel_tol) {
        return radon_dict(radon(f, HoroPoint(angle, s), spec_for(rel_tol)));
      },
      py::arg("f"), py::arg("angle"), py::arg("s"), py::arg("rel_tol") = 1e-10);
  m.def(
      "radon_grid",
      [](const FunctionOnY& f, int angles, int ss, double s_min, double s_max, double rel_tol) {
        const TransformGrid t = radon_grid(f, GridSpec::xi(angles, ss, s_min, s_max), spec_for(rel_tol));
        py::array_t<cplx> out({ss, angles});
        auto v = out.mutable_unchecked<2>();
        for (int is = 0; is < ss; ++is)
          for (int ia = 0; ia < angles; ++ia) v(is, ia) = t.at(ia, is);
        return out;
      },
      py::arg("f"), py::arg("angles"), py::arg("s_points"), py::arg("s_min"), py::arg("s_max"),
      py::arg("rel_tol") = 1e-10);
  m.def(
      "fourier_radon_identity",
      [](const FunctionOnY& f, cplx lambda, cplx eta_e, cplx eta_w, const GroupElement& g, double rel_tol) {
        const IdentityCheck c = fourier_radon_identity(f, lambda, OrbitFunctional{eta_e, eta_w}, g, spec_for(rel_tol));
        py::dict d;
        d["lhs"] = c.lhs;
        d["rhs"] = c.rhs;
        d["residual"] = c.residual;
        d["truncated"] = c.rhs_truncated;
        return d;
      },
      py::arg("f"), py::arg("lam"), py::arg("eta_e"), py::arg("eta_w"), py::arg("g"), py::arg("rel_tol") = 1e-10);
  m.def(
      "group_radon",
      [](const std::string& family, const GroupElement& g, const GroupElement& h, double rel_tol) {
        const GroupRadonValue r = group_radon(parse_group_family(family), {g, h}, spec_for(rel_tol));
        py::dict d;
        d["value"] = r.value;
        d["error"] = r.error;
        d["mass"] = r.mass;
        return d;
      },
      py::arg("family"), py::arg("g"), py::arg("h"), py::arg("rel_tol") = 1e-10);

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed) {
        SuiteConfig cfg;
        cfg.seed = seed;
        const VerificationReport r = run_suite(name, cfg);
        py::dict d;
        d["overall"] = r.overall;
        d["report"] = r.str();
        return d;
      },
      py::arg("name"), py::arg("seed") = 1);
}
