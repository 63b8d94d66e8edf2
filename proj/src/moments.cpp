#include "gaussmom/moments.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gaussmom/gamma_coeff.hpp"
#include "gaussmom/half_int_value.hpp"
#include "gaussmom/quadrature.hpp"
#include "gaussmom/special_functions.hpp"

namespace gaussmom {
namespace {

void require_positive_alpha(double alpha, const char* where) {
  if (!(alpha > 0.0)) {
    std::ostringstream msg;
    msg << where << ": alpha must be strictly positive, got " << alpha;
    throw std::domain_error(msg.str());
  }
}

// ln I = ln coef + ln(pi)/2 + exponent * ln(alpha), carried in 50-digit
// floats and exponentiated once; double overflow only at the final cast.
double render_moment_float(const BigRational& coef, double alpha, const BigRational& exponent) {
  const BigFloat log_value = log(coef.to_bigfloat()) + log(bigfloat_pi()) / 2 +
                             exponent.to_bigfloat() * log(BigFloat(alpha));
  return exp(log_value).convert_to<double>();
}

BigRational even_moment_alpha_exponent(unsigned n) { return BigRational(-(2LL * n + 1), 2); }

}  // namespace

const char* to_string(MomentMethod method) {
  switch (method) {
    case MomentMethod::closed:
      return "closed";
    case MomentMethod::gamma_form:
      return "gamma-form";
    case MomentMethod::quadrature:
      return "quadrature";
  }
  return "?";
}

MomentMethod moment_method_from_string(const std::string& name) {
  if (name == "closed") return MomentMethod::closed;
  if (name == "gamma-form") return MomentMethod::gamma_form;
  if (name == "quadrature") return MomentMethod::quadrature;
  throw std::domain_error("unknown moment method '" + name + "'");
}

MomentResult moment_closed(const MomentQuery& query) {
  require_positive_alpha(query.alpha, "moment_closed");
  MomentResult r;
  r.exact_coef = gamma_coeff_product(query.n);
  r.alpha_exponent = even_moment_alpha_exponent(query.n);
  r.float_value = render_moment_float(r.exact_coef, query.alpha, r.alpha_exponent);
  r.method = MomentMethod::closed;
  return r;
}

MomentResult moment_gamma_form(const MomentQuery& query) {
  require_positive_alpha(query.alpha, "moment_gamma_form");
  MomentResult r;
  r.exact_coef = gamma_half_plus(query.n).coef;  // Gamma((2n+1)/2) / sqrt(pi)
  r.alpha_exponent = even_moment_alpha_exponent(query.n);
  r.float_value = render_moment_float(r.exact_coef, query.alpha, r.alpha_exponent);
  r.method = MomentMethod::gamma_form;
  return r;
}

MomentResult moment_quadrature(const MomentQuery& query, double tol) {
  require_positive_alpha(query.alpha, "moment_quadrature");
  if (!(tol >= 1e-14)) {
    throw std::domain_error(
        "moment_quadrature: tolerance floor is 1e-14; below double round-off the error "
        "contract cannot be met");
  }
  const unsigned n = query.n;
  const auto integrand = [n](double t) { return std::pow(t, 2.0 * n) * std::exp(-t * t); };

  // Rough scale first, then grow T (in logs) until the analytic tail bound
  // T^(2n-1) e^(-T^2) falls below tol/4 of it. The bound needs T^2 >= 2n+1.
  double cutoff = std::sqrt(2.0 * n + 1.0) + 1.0;
  const double rough = 2.0 * integrate_adaptive(integrand, 0.0, cutoff, 1e-2, 64).value;
  const double log_threshold = std::log(tol / 4.0 * rough);
  while ((2.0 * n - 1.0) * std::log(cutoff) - cutoff * cutoff > log_threshold) cutoff += 0.5;
  const double tail_bound = std::exp((2.0 * n - 1.0) * std::log(cutoff) - cutoff * cutoff);

  const QuadratureOutcome body = integrate_adaptive(integrand, 0.0, cutoff, tol / 2.0, 4000, 16);
  const double unit_value = 2.0 * body.value;
  const double unit_error = 2.0 * body.error + 2.0 * tail_bound;
  if (!body.converged || unit_error > tol * unit_value) {
    std::ostringstream msg;
    msg << "moment_quadrature: panel budget exhausted before reaching relative tolerance " << tol
        << " (n = " << n << ", estimated error " << unit_error / unit_value << ")";
    throw std::runtime_error(msg.str());
  }

  const double scale = std::pow(query.alpha, -(2.0 * n + 1.0) / 2.0);
  MomentResult r;
  r.exact_coef = gamma_coeff_product(n);  // exact annotation; float is quadrature-only
  r.alpha_exponent = even_moment_alpha_exponent(n);
  r.float_value = unit_value * scale;
  r.method = MomentMethod::quadrature;
  r.error_estimate = unit_error * scale;
  return r;
}

MomentResult moment_odd(unsigned /*k*/, double alpha) {
  require_positive_alpha(alpha, "moment_odd");
  MomentResult r;
  r.exact_coef = 0;
  r.alpha_exponent = 0;
  r.float_value = 0.0;
  r.method = MomentMethod::closed;
  return r;
}

}  // namespace gaussmom
