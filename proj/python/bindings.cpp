#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <lseries/contour.hpp>
#include <lseries/ltest.hpp>
#include <lseries/modforms.hpp>
#include <lseries/specfun.hpp>
#include <lseries/verify.hpp>

namespace py = pybind11;
using namespace lseries;

namespace {

CoefficientMap to_map(const py::dict& d) {
  CoefficientMap out;
  for (auto item : d) out[item.first.cast<int>()] = item.second.cast<Complex>();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "L-series of weakly holomorphic and harmonic Maass forms";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());
  py::register_exception<AdmissibilityError>(m, "AdmissibilityError", base.ptr());
  py::register_exception<RegimeError>(m, "RegimeError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("value", &Estimate::value)
      .def_readonly("error", &Estimate::error)
      .def("__complex__", [](const Estimate& e) { return e.value; })
      .def("__repr__", [](const Estimate& e) {
        return "Estimate(" + py::repr(py::cast(e.value)).cast<std::string>() + ", error=" +
               py::repr(py::cast(e.error)).cast<std::string>() + ")";
      });

  // Special functions; each returns an Estimate.
  m.def("exp_int_E", [](Complex s, Complex z) { return exp_int_E(s, z); }, py::arg("s"), py::arg("z"),
        "E_s(z) = z^{s-1} Gamma(1-s, z); the negative axis is the limit from above.");
  m.def("inc_gamma_upper", [](Complex r, Complex z) { return inc_gamma_upper(r, z); }, py::arg("r"), py::arg("z"));
  m.def("cal_EI", [](double w) { return cal_EI(w); }, py::arg("w"));
  m.def("hurwitz_zeta", [](Complex s, Complex z) { return hurwitz_zeta(s, z); }, py::arg("s"), py::arg("z"));
  m.def("hurwitz_zeta_star", [](double a, Complex z) { return hurwitz_zeta_star(a, z); }, py::arg("a"), py::arg("z"));
  m.def("lerch_zeta", [](Complex s, Complex a, Complex z) { return lerch_zeta(s, a, z); }, py::arg("s"), py::arg("a"),
        py::arg("z"));
  m.def("polygamma", [](int n, Complex z) { return polygamma(n, z); }, py::arg("m"), py::arg("z"));
  m.def("gamma", [](Complex z) { return lseries::gamma(z); }, py::arg("z"));
  m.def("bernoulli_poly", &bernoulli_poly, py::arg("n"), py::arg("z"));

  py::class_<FourierExpansion>(m, "FourierExpansion")
      .def_readonly("name", &FourierExpansion::name)
      .def_readonly("weight", &FourierExpansion::weight)
      .def_readonly("level", &FourierExpansion::level)
      .def_readonly("n0", &FourierExpansion::n0)
      .def_readonly("holo", &FourierExpansion::holo)
      .def_readonly("nonholo", &FourierExpansion::nonholo)
      .def_readonly("modular", &FourierExpansion::modular)
      .def("a", &FourierExpansion::a, py::arg("n"))
      .def("b", &FourierExpansion::b, py::arg("n"))
      .def("__call__", [](const FourierExpansion& f, Complex z) { return eval_expansion(f, z).value; }, py::arg("z"))
      .def("__repr__", [](const FourierExpansion& f) {
        return "<FourierExpansion " + f.name + " weight=" + std::to_string(f.weight) + ">";
      });

  m.def("build_J", &build_J, py::arg("prec") = 40, "Hauptmodul J = j - 744.");
  m.def("build_J_squared", &build_J_squared, py::arg("prec") = 40, "J^2 - 393768.");
  m.def(
      "synth_harmonic",
      [](int k, const py::dict& holo, const py::dict& nonholo) { return synth_harmonic(k, to_map(holo), to_map(nonholo)); },
      py::arg("k"), py::arg("holo"), py::arg("nonholo") = py::dict());
  m.def("resolve_form", &resolve_form, py::arg("descriptor"), "Form from 'J', 'Jsq' or 'synth:<json>'.");
  m.def("xi_image", &xi_image, py::arg("f"), py::arg("conjugate_first") = false);

  m.def("l_star", [](const FourierExpansion& f, double s) { return l_star(f, s); }, py::arg("f"), py::arg("s"),
        "L*(f, s) = sum a(n) E_{1-s}(2 pi n), plus the non-holomorphic term.");
  m.def(
      "l_value",
      [](const FourierExpansion& f, Complex s, Complex w) {
        LValue v = l_value(f, TestFunction::phi_sw(s, w));
        return Estimate{v.value, v.error_estimate};
      },
      py::arg("f"), py::arg("s"), py::arg("w"), "Series side L_f(phi_s^w).");
  m.def(
      "l_value_compact",
      [](const FourierExpansion& f, double power, double lo, double hi) {
        LValue v = l_value(f, TestFunction::compact(AnalyticSeed{{{1.0, power}}}, lo, hi));
        return Estimate{v.value, v.error_estimate};
      },
      py::arg("f"), py::arg("power"), py::arg("lo"), py::arg("hi"), "L_f(phi) for phi(y) = (iy)^{-power} on [lo, hi].");

  m.def("rhs_main_theorem", [](const FourierExpansion& f, double s, Complex w) { return rhs_main_theorem(f, s, w); },
        py::arg("f"), py::arg("s"), py::arg("w"));
  m.def("rhs_integer_value", [](const FourierExpansion& f, int n) { return rhs_integer_value(f, n); }, py::arg("f"),
        py::arg("m"));
  m.def("rhs_limit_oracle", [](const FourierExpansion& f, double s) { return rhs_limit_oracle(f, s); }, py::arg("f"),
        py::arg("s"));
  m.def(
      "compact_support_value",
      [](const FourierExpansion& f, double power, double a, double b) {
        return compact_support_value(f, AnalyticSeed{{{1.0, power}}}, a, b);
      },
      py::arg("f"), py::arg("power"), py::arg("a"), py::arg("b"));
  m.def("bfi_quantity", &bfi_quantity, py::arg("f"));

  m.def(
      "verify",
      [](const std::string& config, const std::string& filter, int threads) {
        std::vector<CheckSpec> specs = config.empty() ? default_suite() : parse_suite(config);
        if (!filter.empty()) specs = filter_suite(specs, filter);
        SuiteResult result;
        {
          py::gil_scoped_release release;
          result = run_suite(specs, threads);
        }
        return report_json(result, false);
      },
      py::arg("config") = "", py::arg("filter") = "", py::arg("threads") = 0,
      "Run a suite (JSON text, default suite when empty) and return the JSON report.");
}
