#include "gaussmom/fractional.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gaussmom/gamma_coeff.hpp"
#include "gaussmom/power_series.hpp"
#include "gaussmom/special_functions.hpp"

namespace gaussmom {
namespace {

constexpr double kIntegerEps = 1e-9;

bool near_integer(double z, long long* out) {
  const double r = std::round(z);
  if (std::abs(z - r) <= kIntegerEps) {
    *out = static_cast<long long>(r);
    return true;
  }
  return false;
}

// z = k/2 with k odd
bool near_half_integer(double z, long long* doubled_out) {
  const double doubled = 2.0 * z;
  const double r = std::round(doubled);
  if (std::abs(doubled - r) <= 2.0 * kIntegerEps &&
      static_cast<long long>(r) % 2 != 0) {
    *doubled_out = static_cast<long long>(r);
    return true;
  }
  return false;
}

// Gamma(z) for real z: exact factorial path for positive integers, exact
// half-integer path for z = k + 1/2 (either sign), Euler integral lifted by
// the recurrence otherwise. Poles throw.
double gamma_real(double z) {
  long long k = 0;
  if (near_integer(z, &k)) {
    if (k <= 0) {
      throw std::domain_error("gamma: pole at nonpositive integer argument " + std::to_string(k));
    }
    return BigRational(factorial(static_cast<unsigned>(k - 1))).to_double();
  }
  long long doubled = 0;
  if (near_half_integer(z, &doubled)) {
    if (doubled > 0) return gamma_half_plus(static_cast<unsigned>((doubled - 1) / 2)).to_double();
    return gamma_half_minus(static_cast<unsigned>((1 - doubled) / 2)).to_double();
  }
  double shift = 1.0;
  double lifted = z;
  while (lifted < 1.0) {
    shift *= lifted;
    lifted += 1.0;
  }
  return gamma_numeric(lifted, 1e-12).value / shift;
}

void require_open_unit_interval(double x, const char* where) {
  if (!(x > 0.0 && x < 1.0)) {
    std::ostringstream msg;
    msg << where << ": x must lie in (0, 1), got " << x;
    throw std::domain_error(msg.str());
  }
}

}  // namespace

FracOrder::FracOrder(double alpha_in, int m_in) : alpha(alpha_in), m(m_in) {
  if (!(alpha > 0.0)) throw std::domain_error("FracOrder: alpha must be > 0");
  if (m < 1) throw std::domain_error("FracOrder: m must be a positive integer");
  if (!(static_cast<double>(m) - 1.0 < alpha && alpha <= static_cast<double>(m))) {
    std::ostringstream msg;
    msg << "FracOrder: m = " << m << " violates m-1 < alpha <= m for alpha = " << alpha;
    throw std::domain_error(msg.str());
  }
}

FracOrder FracOrder::canonical(double alpha) {
  if (!(alpha > 0.0)) throw std::domain_error("FracOrder: alpha must be > 0");
  return FracOrder(alpha, static_cast<int>(std::ceil(alpha)));
}

double frac_derivative_power(double theta, const FracOrder& order, double t) {
  if (!(theta > -1.0)) throw std::domain_error("frac_derivative_power: theta must be > -1");
  if (!(t > 0.0)) throw std::domain_error("frac_derivative_power: t must be > 0");
  const double lower = theta - order.alpha + 1.0;
  long long k = 0;
  if (near_integer(lower, &k) && k <= 0) {
    std::ostringstream msg;
    msg << "frac_derivative_power: Gamma pole at theta - alpha + 1 = " << k
        << " (theta = " << theta << ", alpha = " << order.alpha << ")";
    throw std::domain_error(msg.str());
  }
  return gamma_real(theta + 1.0) / gamma_real(lower) * std::pow(t, theta - order.alpha);
}

double alpha_self_derivative(double alpha) {
  if (!(alpha > -1.0)) throw std::domain_error("alpha_self_derivative: alpha must be > -1");
  long long k = 0;
  if (near_integer(alpha, &k)) {
    return BigRational(factorial(static_cast<unsigned>(k))).to_double();
  }
  long long doubled = 0;
  if (near_half_integer(alpha, &doubled)) {
    // alpha! = Gamma(alpha + 1); alpha = n + 1/2 with n >= 0, or alpha = -1/2
    const long long n = (doubled - 1) / 2;
    if (n >= 0) return half_factorial(static_cast<unsigned>(n)).to_double();
    return gamma_half_plus(0).to_double();
  }
  return factorial_numeric(alpha, 1e-12).value;
}

BigInt kth_derivative_reciprocal(unsigned k) {
  const BigRational d = jet_nth_derivative_at_zero(series_reciprocal_one_minus_x(k), k);
  return d.numerator();  // coefficient is 1, so the jet value is integral
}

double rl_half_derivative(unsigned n, int m, double x) {
  require_open_unit_interval(x, "rl_half_derivative");
  if (m < 1) throw std::domain_error("rl_half_derivative: m must be a positive integer");
  const double c = static_cast<double>(m) - static_cast<double>(n) + 0.5;
  const double series = hyp2f1_series({1.0, 1.0, c, x}, 1e-12).value;
  const double gamma_prefactor = gamma_half_minus(n).to_double();  // exact, sign included
  return std::pow(x, -(static_cast<double>(n) + 0.5)) / gamma_prefactor * series;
}

double caputo_half_derivative(unsigned n, int m, double x) {
  require_open_unit_interval(x, "caputo_half_derivative");
  if (m < 1) throw std::domain_error("caputo_half_derivative: m must be a positive integer");
  const long long d = static_cast<long long>(m) - static_cast<long long>(n);
  const double gamma_den = d >= 0 ? gamma_half_plus(static_cast<unsigned>(d)).to_double()
                                  : gamma_half_minus(static_cast<unsigned>(-d)).to_double();
  const double gamma_num = BigRational(factorial(static_cast<unsigned>(m))).to_double();
  const double c = static_cast<double>(d) + 0.5;
  const double series = hyp2f1_series({static_cast<double>(m) + 1.0, 1.0, c, x}, 1e-12).value;
  return gamma_num / gamma_den * std::pow(x, static_cast<double>(d) - 0.5) * series;
}

HalfIntValue regularized_half_derivative_at_zero(unsigned n) { return half_factorial(n); }

}  // namespace gaussmom
