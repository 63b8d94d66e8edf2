#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "gaussmom/fractional.hpp"
#include "gaussmom/gamma_coeff.hpp"
#include "gaussmom/moments.hpp"
#include "gaussmom/power_series.hpp"
#include "gaussmom/special_functions.hpp"
#include "gaussmom/tsallis.hpp"

namespace py = pybind11;
namespace gm = gaussmom;

namespace {

py::object big_int_to_py(const gm::BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::object rational_to_fraction(const gm::BigRational& r) {
  auto fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(big_int_to_py(r.numerator()), big_int_to_py(r.denominator()));
}

gm::DensityRoute route_from_string(const std::string& name) {
  if (name == "closed") return gm::DensityRoute::closed_moments;
  if (name == "quadrature") return gm::DensityRoute::quadrature;
  throw std::domain_error("unknown density route '" + name + "' (use closed or quadrature)");
}

py::list series_to_fractions(const gm::PowerSeries& s) {
  py::list out;
  for (const auto& c : s.coeffs()) out.append(rational_to_fraction(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Gaussian moment integrals via series-coefficient arithmetic, "
            "half-integer gamma/factorial values, Tsallis number densities and "
            "fractional-derivative closed forms.";

  py::class_<gm::HalfIntValue>(m, "HalfIntValue",
                               "Exact value coef * sqrt(pi)**sqrt_pi_power.")
      .def_property_readonly(
          "coef", [](const gm::HalfIntValue& v) { return rational_to_fraction(v.coef); })
      .def_readonly("sqrt_pi_power", &gm::HalfIntValue::sqrt_pi_power)
      .def("__float__", &gm::HalfIntValue::to_double)
      .def("to_float", &gm::HalfIntValue::to_double)
      .def("__eq__",
           [](const gm::HalfIntValue& a, const gm::HalfIntValue& b) { return a == b; })
      .def("__mul__",
           [](const gm::HalfIntValue& a, const gm::HalfIntValue& b) { return a * b; })
      .def("__repr__",
           [](const gm::HalfIntValue& v) { return "HalfIntValue(" + v.str() + ")"; });

  py::class_<gm::MomentResult>(m, "MomentResult")
      .def_property_readonly(
          "exact_coef",
          [](const gm::MomentResult& r) { return rational_to_fraction(r.exact_coef); })
      .def_property_readonly(
          "alpha_exponent",
          [](const gm::MomentResult& r) { return rational_to_fraction(r.alpha_exponent); })
      .def_readonly("float_value", &gm::MomentResult::float_value)
      .def_readonly("error_estimate", &gm::MomentResult::error_estimate)
      .def_property_readonly(
          "method", [](const gm::MomentResult& r) { return std::string(to_string(r.method)); })
      .def("__float__", [](const gm::MomentResult& r) { return r.float_value; })
      .def("__repr__", [](const gm::MomentResult& r) {
        return "MomentResult(" + r.exact_coef.str() + "*sqrt(pi)*alpha^(" +
               r.alpha_exponent.str() + ") ~ " + std::to_string(r.float_value) + ", " +
               to_string(r.method) + ")";
      });

  py::class_<gm::PhysicalConstants>(m, "PhysicalConstants")
      .def_static("natural", &gm::PhysicalConstants::natural)
      .def_static("si", &gm::PhysicalConstants::si)
      .def_readonly("k_B", &gm::PhysicalConstants::k_B)
      .def_readonly("hbar", &gm::PhysicalConstants::hbar)
      .def_readonly("c", &gm::PhysicalConstants::c);

  py::class_<gm::SpeciesThermo>(m, "SpeciesThermo")
      .def(py::init([](double g, double mass, double mu, double T, double q) {
             return gm::SpeciesThermo{g, mass, mu, T, q};
           }),
           py::arg("g") = 1.0, py::arg("mass") = 1.0, py::arg("mu") = 0.0, py::arg("T") = 1.0,
           py::arg("q") = 1.0)
      .def_readwrite("g", &gm::SpeciesThermo::g)
      .def_readwrite("mass", &gm::SpeciesThermo::mass)
      .def_readwrite("mu", &gm::SpeciesThermo::mu)
      .def_readwrite("T", &gm::SpeciesThermo::T)
      .def_readwrite("q", &gm::SpeciesThermo::q);

  // exact core
  m.def(
      "gamma_coeff",
      [](unsigned n, const std::string& method) {
        return rational_to_fraction(
            gm::make_gamma_coefficient(n, gm::gamma_coeff_method_from_string(method)).value);
      },
      py::arg("n"), py::arg("method") = "product",
      "gamma_{2n} as a Fraction; method is product, recurrence, double-factorial or jet.");
  m.def(
      "double_factorial", [](long long v) { return big_int_to_py(gm::double_factorial(v)); },
      py::arg("m"), "m!! for m >= -1, with (-1)!! = 0!! = 1.");
  m.def(
      "rsqrt_series_coeffs",
      [](unsigned order) { return series_to_fractions(gm::series_rsqrt_one_minus_x(order)); },
      py::arg("order"), "Taylor coefficients of (1-x)**-0.5 as Fractions.");
  m.def(
      "reciprocal_series_coeffs",
      [](unsigned order) {
        return series_to_fractions(gm::series_reciprocal_one_minus_x(order));
      },
      py::arg("order"), "Taylor coefficients of (1-x)**-1 as Fractions.");

  // moments
  m.def(
      "moment_closed", [](unsigned n, double alpha) { return gm::moment_closed({n, alpha}); },
      py::arg("n"), py::arg("alpha"));
  m.def(
      "moment_gamma_form",
      [](unsigned n, double alpha) { return gm::moment_gamma_form({n, alpha}); }, py::arg("n"),
      py::arg("alpha"));
  m.def(
      "moment_quadrature",
      [](unsigned n, double alpha, double tol) { return gm::moment_quadrature({n, alpha}, tol); },
      py::arg("n"), py::arg("alpha"), py::arg("tol") = 1e-10);
  m.def("moment_odd", &gm::moment_odd, py::arg("k"), py::arg("alpha"));

  // special functions
  m.def("gamma_half_plus", &gm::gamma_half_plus, py::arg("n"));
  m.def("gamma_half_minus", &gm::gamma_half_minus, py::arg("n"));
  m.def("half_factorial", &gm::half_factorial, py::arg("n"));
  m.def(
      "gamma_recurrence_check",
      [](const std::string& p) {
        return gm::gamma_recurrence_check(gm::BigRational::from_string(p));
      },
      py::arg("p"), "Both sides of Gamma(p+1) = p Gamma(p) at p like '9/2'.");
  m.def(
      "gamma_numeric",
      [](double t, double tol) {
        const auto r = gm::gamma_numeric(t, tol);
        return py::make_tuple(r.value, r.error_estimate);
      },
      py::arg("t"), py::arg("tol") = 1e-10, "(value, abs error estimate)");
  m.def(
      "factorial_numeric",
      [](double v, double tol) {
        const auto r = gm::factorial_numeric(v, tol);
        return py::make_tuple(r.value, r.error_estimate);
      },
      py::arg("m"), py::arg("tol") = 1e-10);
  m.def(
      "hyp2f1_series",
      [](double a, double b, double c, double z, double tol) {
        const auto r = gm::hyp2f1_series({a, b, c, z}, tol);
        return py::make_tuple(r.value, r.error_estimate);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"), py::arg("tol") = 1e-10);
  m.def(
      "hyp2f1_integral",
      [](double a, double b, double c, double z, double tol) {
        const auto r = gm::hyp2f1_integral({a, b, c, z}, tol);
        return py::make_tuple(r.value, r.error_estimate);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"), py::arg("tol") = 1e-10);

  // Tsallis application
  m.def("q_exponential", &gm::q_exponential, py::arg("x"), py::arg("q"));
  m.def("tsallis_entropy", &gm::tsallis_entropy, py::arg("p"), py::arg("q"),
        "Entropy in units of k_B.");
  m.def("occupation_exact", &gm::occupation_exact, py::arg("energy"), py::arg("species"),
        py::arg("constants") = gm::PhysicalConstants::natural());
  m.def("occupation_first_order", &gm::occupation_first_order, py::arg("energy"),
        py::arg("species"), py::arg("constants") = gm::PhysicalConstants::natural());
  m.def("occupation_boltzmann_limit", &gm::occupation_boltzmann_limit, py::arg("energy"),
        py::arg("species"), py::arg("constants") = gm::PhysicalConstants::natural());
  m.def("density_closed", &gm::density_closed, py::arg("species"),
        py::arg("constants") = gm::PhysicalConstants::natural());
  m.def(
      "density_integral",
      [](const gm::SpeciesThermo& s, const gm::PhysicalConstants& constants, double tol,
         const std::string& route) {
        return gm::density_integral(s, constants, tol, route_from_string(route));
      },
      py::arg("species"), py::arg("constants") = gm::PhysicalConstants::natural(),
      py::arg("tol") = 1e-10, py::arg("route") = "closed");

  // fractional calculus
  m.def(
      "frac_derivative_power",
      [](double theta, double alpha, double t, py::object m_window) {
        const auto order = m_window.is_none()
                               ? gm::FracOrder::canonical(alpha)
                               : gm::FracOrder(alpha, m_window.cast<int>());
        return gm::frac_derivative_power(theta, order, t);
      },
      py::arg("theta"), py::arg("alpha"), py::arg("t"), py::arg("m") = py::none());
  m.def("alpha_self_derivative", &gm::alpha_self_derivative, py::arg("alpha"));
  m.def(
      "kth_derivative_reciprocal",
      [](unsigned k) { return big_int_to_py(gm::kth_derivative_reciprocal(k)); }, py::arg("k"));
  m.def("rl_half_derivative", &gm::rl_half_derivative, py::arg("n"), py::arg("m"),
        py::arg("x"));
  m.def("caputo_half_derivative", &gm::caputo_half_derivative, py::arg("n"), py::arg("m"),
        py::arg("x"));
  m.def("regularized_half_derivative", &gm::regularized_half_derivative_at_zero, py::arg("n"));

  m.attr("__version__") = "0.1.0";
}
