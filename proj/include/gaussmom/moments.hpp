#pragma once

#include <string>

#include "gaussmom/rational.hpp"

namespace gaussmom {

/// One even Gaussian moment query: integrand x^(2n) e^(-alpha x^2) over the
/// whole real line, alpha strictly positive.
struct MomentQuery {
  unsigned n = 0;
  double alpha = 1.0;
};

enum class MomentMethod { closed, gamma_form, quadrature };

const char* to_string(MomentMethod method);
MomentMethod moment_method_from_string(const std::string& name);

/// A Gaussian moment: the exact closed form (coefficient, alpha exponent),
/// a float rendering, the method that produced the float, and an absolute
/// error estimate (nonzero only for quadrature).
struct MomentResult {
  BigRational exact_coef;       // the gamma_{2n} factor (0 for odd moments)
  BigRational alpha_exponent;   // -(2n+1)/2 (0 for odd moments)
  double float_value = 0.0;
  MomentMethod method = MomentMethod::closed;
  double error_estimate = 0.0;
};

/// gamma_{2n} * sqrt(pi) / alpha^((2n+1)/2) with the coefficient from the
/// product form. The float is rendered through 50-digit logs so large n
/// cannot overflow intermediates.
MomentResult moment_closed(const MomentQuery& query);

/// Same moment through Gamma((2n+1)/2); the exact fields must coincide with
/// moment_closed for every n — that equality is a library invariant.
MomentResult moment_gamma_form(const MomentQuery& query);

/// Independent numerical oracle: after t = sqrt(alpha) x, adaptively
/// integrates 2 * integral_0^T t^(2n) e^(-t^2) dt with T chosen so the
/// analytic tail bound T^(2n-1) e^(-T^2) (valid once T^2 >= 2n+1) is
/// negligible at the requested tolerance. tol is relative, floored at
/// 1e-14; on success error_estimate <= tol * value.
MomentResult moment_quadrature(const MomentQuery& query, double tol);

/// Full-line moment of x^(2k+1) e^(-alpha x^2): exactly zero by symmetry.
MomentResult moment_odd(unsigned k, double alpha);

}  // namespace gaussmom
