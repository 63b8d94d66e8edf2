#pragma once

#include "gaussmom/half_int_value.hpp"
#include "gaussmom/rational.hpp"

namespace gaussmom {

/// A fractional differentiation order alpha > 0 together with the integer
/// window index m satisfying m - 1 < alpha <= m. For alpha = n + 1/2 the
/// canonical choice is m = n + 1, but m stays explicit because the closed
/// forms below keep it symbolic.
struct FracOrder {
  FracOrder(double alpha, int m);
  static FracOrder canonical(double alpha);  // m = ceil(alpha)

  double alpha;
  int m;
};

/// Power rule D^alpha t^theta = Gamma(theta+1)/Gamma(theta-alpha+1)
/// * t^(theta-alpha), theta > -1. Gamma arguments that are integers or
/// half-integers go through the exact paths; anything else through the
/// Euler-integral evaluator. Gamma poles (theta - alpha + 1 a nonpositive
/// integer) are rejected.
double frac_derivative_power(double theta, const FracOrder& order, double t);

/// d^alpha t^alpha / dt^alpha = alpha!, for alpha > -1.
double alpha_self_derivative(double alpha);

/// k-th derivative of (1-x)^(-1) at 0 computed by jet arithmetic on the
/// coefficientwise-solved series; equals k! without ever calling a
/// factorial routine.
BigInt kth_derivative_reciprocal(unsigned k);

/// Riemann-Liouville half-derivative of (1-x)^(-1):
///   x^(-n-1/2) / Gamma(1/2 - n) * 2F1(1, 1; m - n + 1/2; x),  0 < x < 1.
/// Diverges like x^(-n-1/2) as x -> 0+.
double rl_half_derivative(unsigned n, int m, double x);

/// Caputo half-derivative of (1-x)^(-1):
///   Gamma(m+1) / Gamma(m - n + 1/2) * x^(m-n-1/2)
///     * 2F1(m + 1, 1; m - n + 1/2; x),  0 < x < 1.
/// Tends to 0 as x -> 0+ whenever m > n + 1/2.
double caputo_half_derivative(unsigned n, int m, double x);

/// The regularized value at 0: exactly ((2n+1)/2)! = (2n+1)/2 * gamma_{2n}
/// * sqrt(pi), sidestepping the divergent/vanishing endpoint behaviour of
/// the two definitions above.
HalfIntValue regularized_half_derivative_at_zero(unsigned n);

}  // namespace gaussmom
