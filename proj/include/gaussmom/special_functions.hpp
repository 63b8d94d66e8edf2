#pragma once

#include <utility>

#include "gaussmom/half_int_value.hpp"
#include "gaussmom/rational.hpp"

namespace gaussmom {

/// Value plus an absolute error estimate. The tolerance passed to the
/// numeric routines is relative: on success, error_estimate <= tol * |value|.
struct NumericResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Gamma((2n+1)/2) = gamma_{2n} * sqrt(pi), exact.
HalfIntValue gamma_half_plus(unsigned n);

/// Gamma(1/2 - n) = (-1)^n * sqrt(pi) / gamma_{2n}, exact.
HalfIntValue gamma_half_minus(unsigned n);

/// ((2n+1)/2)! = (2n+1)/2 * gamma_{2n} * sqrt(pi), exact. Coincides with
/// gamma_half_plus(n+1).
HalfIntValue half_factorial(unsigned n);

/// Both sides of Gamma(p+1) = p*Gamma(p) for half-integer p = n + 1/2,
/// evaluated exactly and independently; callers assert the pair is equal.
std::pair<HalfIntValue, HalfIntValue> gamma_recurrence_check(const BigRational& p);

/// Euler-integral gamma: integral of x^(t-1) e^(-x) over (0, inf), evaluated
/// by adaptive quadrature with an analytic tail bound. tol is relative and
/// floored at 1e-12.
NumericResult gamma_numeric(double t, double tol);

/// Integral form of m! for m > -1; same machinery as gamma_numeric(m+1).
NumericResult factorial_numeric(double m, double tol);

struct Hyp2F1Params {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double z = 0.0;
};

/// Gauss series sum_k (a)_k (b)_k / (c)_k * z^k / k! with multiplicative
/// term recurrence; requires |z| < 1 and c not a nonpositive integer. Stops
/// once terms are decreasing and below tol * |sum|; the error estimate is
/// the first omitted term.
NumericResult hyp2f1_series(const Hyp2F1Params& params, double tol);

/// Euler-integral evaluation, prefactor Gamma(c) / (Gamma(b) Gamma(c-b));
/// requires c > b > 0 and z < 1. Endpoint singularities for b < 1 or
/// c - b < 1 are absorbed by power substitutions.
NumericResult hyp2f1_integral(const Hyp2F1Params& params, double tol);

}  // namespace gaussmom
