#pragma once

#include <vector>

#include "gaussmom/rational.hpp"

namespace gaussmom {

/// Truncated power series (a "jet") over exact rationals. Index k holds the
/// coefficient of x^k, so a series of length N+1 has order N. Arithmetic on
/// two series truncates to the shorter order; nothing is ever extended
/// silently.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<BigRational> coeffs);

  /// The series 1 - x, truncated to the requested order.
  static PowerSeries one_minus_x(unsigned order);

  unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
  const BigRational& coeff(unsigned k) const;
  const std::vector<BigRational>& coeffs() const { return c_; }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

 private:
  std::vector<BigRational> c_;
};

/// Taylor series of (1-x)^(-1/2) at 0, found by solving the defining
/// identity S*S*(1-x) = 1 coefficient by coefficient. Deliberately does not
/// reuse the product formula for the coefficients, so the two can be checked
/// against each other.
PowerSeries series_rsqrt_one_minus_x(unsigned order);

/// Taylor series of (1-x)^(-1) at 0, from solving S*(1-x) = 1.
PowerSeries series_reciprocal_one_minus_x(unsigned order);

/// k-th derivative at 0 read off the jet: k! * coeff(k). Rejects k beyond
/// the truncation order.
BigRational jet_nth_derivative_at_zero(const PowerSeries& series, unsigned k);

}  // namespace gaussmom
