#include "gaussmom/gamma_coeff.hpp"

#include <stdexcept>
#include <string>

#include "gaussmom/power_series.hpp"

namespace gaussmom {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt double_factorial(long long m) {
  if (m < -1) {
    throw std::domain_error("double_factorial: argument must be >= -1, got " + std::to_string(m));
  }
  BigInt r = 1;
  for (long long v = m; v >= 2; v -= 2) r *= v;
  return r;
}

BigRational gamma_coeff_product(unsigned n) {
  BigRational result = 1;
  for (unsigned k = 0; k < n; ++k) result *= BigRational(1, 2) + BigRational(k);
  return result;
}

BigRational gamma_coeff_recurrence(unsigned n) {
  BigRational g = 1;  // gamma_0
  for (unsigned k = 0; k < n; ++k) g = BigRational(2LL * k + 1, 2) * g;
  return g;
}

BigRational gamma_coeff_double_factorial(unsigned n) {
  return BigRational(double_factorial(2LL * n - 1), BigInt(1) << n);
}

BigRational gamma_coeff_jet(unsigned n) {
  return jet_nth_derivative_at_zero(series_rsqrt_one_minus_x(n), n);
}

const char* to_string(GammaCoeffMethod method) {
  switch (method) {
    case GammaCoeffMethod::product:
      return "product";
    case GammaCoeffMethod::recurrence:
      return "recurrence";
    case GammaCoeffMethod::double_factorial:
      return "double-factorial";
    case GammaCoeffMethod::jet:
      return "jet";
  }
  return "?";
}

GammaCoeffMethod gamma_coeff_method_from_string(const std::string& name) {
  if (name == "product") return GammaCoeffMethod::product;
  if (name == "recurrence") return GammaCoeffMethod::recurrence;
  if (name == "double-factorial") return GammaCoeffMethod::double_factorial;
  if (name == "jet") return GammaCoeffMethod::jet;
  throw std::domain_error("unknown gamma coefficient method '" + name + "'");
}

GammaCoefficient make_gamma_coefficient(unsigned n, GammaCoeffMethod method) {
  switch (method) {
    case GammaCoeffMethod::product:
      return {n, gamma_coeff_product(n)};
    case GammaCoeffMethod::recurrence:
      return {n, gamma_coeff_recurrence(n)};
    case GammaCoeffMethod::double_factorial:
      return {n, gamma_coeff_double_factorial(n)};
    case GammaCoeffMethod::jet:
      return {n, gamma_coeff_jet(n)};
  }
  throw std::logic_error("make_gamma_coefficient: unreachable");
}

}  // namespace gaussmom
