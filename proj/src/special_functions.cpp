#include "gaussmom/special_functions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gaussmom/gamma_coeff.hpp"
#include "gaussmom/quadrature.hpp"

namespace gaussmom {
namespace {

constexpr int kPanelBudget = 4000;
constexpr int kSeriesTermBudget = 10000;

[[noreturn]] void fail_convergence(const char* what, double tol) {
  std::ostringstream msg;
  msg << what << ": panel budget exhausted before reaching relative tolerance " << tol;
  throw std::runtime_error(msg.str());
}

// integral over (0, 1] of x^(t-1) e^(-x). For t < 1 the x = u^(1/t)
// substitution turns it into (1/t) * integral of exp(-u^(1/t)), which is
// bounded; for t >= 1 the integrand already is.
QuadratureOutcome gamma_head(double t, double rel_tol) {
  if (t < 1.0) {
    const double inv_t = 1.0 / t;
    return integrate_adaptive(
        [t, inv_t](double u) { return std::exp(-std::pow(u, inv_t)) / t; }, 0.0, 1.0, rel_tol,
        kPanelBudget);
  }
  return integrate_adaptive(
      [t](double x) { return std::pow(x, t - 1.0) * std::exp(-x); }, 0.0, 1.0, rel_tol,
      kPanelBudget);
}

// Smallest cutoff X with X >= 2(t-1) whose tail bound
// integral_X^inf x^(t-1) e^(-x) dx <= 2 X^(t-1) e^(-X) drops below
// abs_threshold. Worked in logs so large t cannot overflow.
double gamma_tail_cutoff(double t, double abs_threshold, double* bound_out) {
  double x = std::max(2.0, 2.0 * (t - 1.0) + 1.0);
  const double log_threshold = std::log(abs_threshold);
  while (std::log(2.0) + (t - 1.0) * std::log(x) - x > log_threshold) {
    x *= 1.25;
    if (x > 1e6) throw std::runtime_error("gamma_numeric: tail cutoff did not converge");
  }
  *bound_out = 2.0 * std::exp((t - 1.0) * std::log(x) - x);
  return x;
}

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && std::abs(v - std::round(v)) < 1e-12;
}

// Euler kernel tau^(b-1) (1-tau)^(c-b-1) (1-z*tau)^(-a) integrated over one
// half of [0, 1]; `left` selects the endpoint the half touches, and a power
// substitution absorbs that endpoint's algebraic singularity when its
// exponent base (b, or c-b) is below 1.
QuadratureOutcome euler_half(const Hyp2F1Params& p, bool left, double rel_tol) {
  const double a = p.a, b = p.b, cb = p.c - p.b, z = p.z;
  const auto kernel = [a, b, cb, z](double tau) {
    return std::pow(tau, b - 1.0) * std::pow(1.0 - tau, cb - 1.0) * std::pow(1.0 - z * tau, -a);
  };
  if (left) {
    if (b >= 1.0) return integrate_adaptive(kernel, 0.0, 0.5, rel_tol, kPanelBudget);
    const double inv_b = 1.0 / b;
    return integrate_adaptive(
        [&, inv_b](double u) {
          const double tau = std::pow(u, inv_b);
          return std::pow(1.0 - tau, cb - 1.0) * std::pow(1.0 - z * tau, -a) / b;
        },
        0.0, std::pow(0.5, b), rel_tol, kPanelBudget);
  }
  // right half via sigma = 1 - tau
  const auto mirrored = [&](double sigma) {
    return std::pow(1.0 - sigma, b - 1.0) * std::pow(sigma, cb - 1.0) *
           std::pow(1.0 - z * (1.0 - sigma), -a);
  };
  if (cb >= 1.0) return integrate_adaptive(mirrored, 0.0, 0.5, rel_tol, kPanelBudget);
  const double inv_cb = 1.0 / cb;
  return integrate_adaptive(
      [&, inv_cb](double v) {
        const double sigma = std::pow(v, inv_cb);
        return std::pow(1.0 - sigma, b - 1.0) * std::pow(1.0 - z * (1.0 - sigma), -a) / cb;
      },
      0.0, std::pow(0.5, cb), rel_tol, kPanelBudget);
}

}  // namespace

HalfIntValue gamma_half_plus(unsigned n) { return {gamma_coeff_double_factorial(n), 1}; }

HalfIntValue gamma_half_minus(unsigned n) {
  BigRational coef = gamma_coeff_double_factorial(n).reciprocal();
  if (n % 2 == 1) coef = -coef;
  return {coef, 1};
}

HalfIntValue half_factorial(unsigned n) {
  return {BigRational(2LL * n + 1, 2) * gamma_coeff_double_factorial(n), 1};
}

std::pair<HalfIntValue, HalfIntValue> gamma_recurrence_check(const BigRational& p) {
  if (p.denominator() != 2 || p.sign() <= 0) {
    throw std::domain_error("gamma_recurrence_check: exact path needs p = n + 1/2 > 0, got " +
                            p.str());
  }
  const BigInt two_n_plus_1 = p.numerator();
  const unsigned n = static_cast<unsigned>(((two_n_plus_1 - 1) / 2).convert_to<unsigned long>());
  HalfIntValue lhs = gamma_half_plus(n + 1);       // Gamma(p + 1)
  HalfIntValue rhs = p * gamma_half_plus(n);       // p * Gamma(p)
  return {lhs, rhs};
}

NumericResult gamma_numeric(double t, double tol) {
  if (!(t > 0.0)) throw std::domain_error("gamma_numeric: t must be > 0");
  if (!(tol >= 1e-12)) {
    throw std::domain_error("gamma_numeric: tolerance floor is 1e-12, below double round-off");
  }

  const QuadratureOutcome head = gamma_head(t, tol / 3.0);
  if (!head.converged) fail_convergence("gamma_numeric", tol);

  // head.value is a lower bound for Gamma(t): safe scale for the tail cut.
  double tail_bound = 0.0;
  const double cutoff = gamma_tail_cutoff(t, tol / 3.0 * head.value, &tail_bound);
  const QuadratureOutcome body = integrate_adaptive(
      [t](double x) { return std::exp((t - 1.0) * std::log(x) - x); }, 1.0, cutoff, tol / 3.0,
      kPanelBudget, 16);
  if (!body.converged) fail_convergence("gamma_numeric", tol);

  const double value = head.value + body.value;
  const double error = head.error + body.error + tail_bound;
  if (error > tol * value) fail_convergence("gamma_numeric", tol);
  return {value, error};
}

NumericResult factorial_numeric(double m, double tol) {
  if (!(m > -1.0)) throw std::domain_error("factorial_numeric: m must be > -1");
  return gamma_numeric(m + 1.0, tol);
}

NumericResult hyp2f1_series(const Hyp2F1Params& params, double tol) {
  if (!(std::abs(params.z) < 1.0)) {
    throw std::domain_error("hyp2f1_series: requires |z| < 1");
  }
  if (is_nonpositive_integer(params.c)) {
    throw std::domain_error("hyp2f1_series: c is zero or a negative integer (series pole)");
  }
  if (!(tol > 0.0)) throw std::domain_error("hyp2f1_series: tolerance must be positive");

  double sum = 1.0;
  double term = 1.0;
  for (int k = 0; k < kSeriesTermBudget; ++k) {
    const double next =
        term * (params.a + k) * (params.b + k) / ((params.c + k) * (k + 1.0)) * params.z;
    if (next == 0.0) return {sum, 0.0};  // terminating (polynomial) case
    if (std::abs(next) <= tol * std::abs(sum) && std::abs(next) <= std::abs(term)) {
      return {sum, std::abs(next)};
    }
    sum += next;
    term = next;
  }
  std::ostringstream msg;
  msg << "hyp2f1_series: terms failed to decrease below tolerance within " << kSeriesTermBudget
      << " terms (z = " << params.z << " too close to 1?)";
  throw std::runtime_error(msg.str());
}

NumericResult hyp2f1_integral(const Hyp2F1Params& params, double tol) {
  if (!(params.c > params.b && params.b > 0.0)) {
    throw std::domain_error("hyp2f1_integral: requires c > b > 0");
  }
  if (!(params.z < 1.0)) throw std::domain_error("hyp2f1_integral: requires z < 1");
  if (!(tol >= 1e-12)) {
    throw std::domain_error("hyp2f1_integral: tolerance floor is 1e-12");
  }

  const NumericResult gc = gamma_numeric(params.c, tol / 6.0);
  const NumericResult gb = gamma_numeric(params.b, tol / 6.0);
  const NumericResult gcb = gamma_numeric(params.c - params.b, tol / 6.0);

  const QuadratureOutcome lo = euler_half(params, true, tol / 6.0);
  const QuadratureOutcome hi = euler_half(params, false, tol / 6.0);
  if (!lo.converged || !hi.converged) fail_convergence("hyp2f1_integral", tol);

  const double integral = lo.value + hi.value;
  const double value = gc.value / (gb.value * gcb.value) * integral;

  // relative errors of the three gamma factors and of the integral add
  const double rel =
      gc.error_estimate / gc.value + gb.error_estimate / gb.value +
      gcb.error_estimate / gcb.value + (lo.error + hi.error) / std::abs(integral);
  return {value, std::abs(value) * rel};
}

}  // namespace gaussmom
