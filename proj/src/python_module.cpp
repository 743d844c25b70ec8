#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "anomcheck/anomaly.hpp"
#include "anomcheck/cli.hpp"
#include "anomcheck/decompose.hpp"
#include "anomcheck/modforms.hpp"
#include "anomcheck/numcheck.hpp"

namespace py = pybind11;
using namespace anomcheck;

namespace {

GeometrySpec geometry(int dim, int l, bool xi, bool w_eq_tx, const std::string& basis) {
  return make_geometry(dim, w_eq_tx ? dim / 2 : l, xi, w_eq_tx, parse_basis_mode(basis));
}

py::dict verification(const VerificationReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["dim"] = r.dim;
  d["l"] = r.l;
  d["xi"] = r.xi;
  d["w_eq_tx"] = r.w_eq_tx;
  d["status"] = r.pass ? "pass" : "fail";
  d["residual"] = r.residual;
  return d;
}

py::dict numeric(const NumericReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["status"] = r.pass ? "pass" : "fail";
  d["max_deviation"] = r.max_deviation;
  d["tolerance"] = r.tolerance;
  d["magnitude"] = r.magnitude;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.attr("__version__") = kToolVersion;
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("identity_ids", &all_identity_ids);

  m.def(
      "verify",
      [](const std::string& id, int dim, int l, bool xi, bool w_eq_tx, const std::string& basis) {
        return verification(verify_identity(id, geometry(dim, l, xi, w_eq_tx, basis)));
      },
      py::arg("id"), py::arg("dim"), py::arg("l") = 2, py::arg("xi") = true, py::arg("w_eq_tx") = false,
      py::arg("basis") = "powersum");

  m.def(
      "expand",
      [](const std::string& series, int order) {
        if (order < 0) throw PreconditionError("order must be non-negative");
        return render(modular_series(ModularSeriesId::parse(series), 2 * order));
      },
      py::arg("series"), py::arg("order"));

  m.def(
      "decompose",
      [](int dim, int l, bool xi, bool w_eq_tx) {
        auto g = geometry(dim, l, xi, w_eq_tx, "powersum");
        const bool case1 = case_for_dimension(dim) == DecompositionCase::Dim8mPlus4;
        auto b = b_coeffs(g);
        auto beta = beta_coeffs(g);
        py::dict d;
        d["case"] = case1 ? 1 : 2;
        d["m"] = b.m;
        std::vector<std::string> bs, betas;
        for (const auto& f : b.coefficients) bs.push_back(render(to_pontryagin(g, f)));
        for (const auto& f : beta.coefficients) betas.push_back(render(to_pontryagin(g, f)));
        d[case1 ? "b" : "z"] = bs;
        d[case1 ? "beta" : "zeta"] = betas;
        d["closed_forms"] = closed_form_check(g).ok;
        return d;
      },
      py::arg("dim"), py::arg("l") = 2, py::arg("xi") = true, py::arg("w_eq_tx") = false);

  m.def("transformation_laws", &transformation_laws);

  m.def(
      "check_law",
      [](const std::string& law) { return numeric(check_transformation(law, default_tau_grid())); },
      py::arg("law"));

  m.def(
      "check_proposition",
      [](const std::string& which, int dim, int l, Complex tau, bool xi, bool w_eq_tx) {
        ComplexSample s;
        s.tau = tau;
        return numeric(check_proposition(parse_proposition(which), geometry(dim, l, xi, w_eq_tx, "powersum"), s));
      },
      py::arg("which"), py::arg("dim"), py::arg("l") = 2, py::arg("tau") = Complex(0.0, 2.0), py::arg("xi") = true,
      py::arg("w_eq_tx") = false);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
