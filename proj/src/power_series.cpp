#include "gaussmom/power_series.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "gaussmom/gamma_coeff.hpp"

namespace gaussmom {

PowerSeries::PowerSeries(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::domain_error("PowerSeries: needs at least the constant term");
}

PowerSeries PowerSeries::one_minus_x(unsigned order) {
  std::vector<BigRational> c(order + 1, BigRational(0));
  c[0] = 1;
  if (order >= 1) c[1] = -1;
  return PowerSeries(std::move(c));
}

const BigRational& PowerSeries::coeff(unsigned k) const {
  if (k >= c_.size()) throw std::domain_error("PowerSeries: coefficient index beyond order");
  return c_[k];
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const unsigned order = std::min(a.order(), b.order());
  std::vector<BigRational> c(order + 1);
  for (unsigned k = 0; k <= order; ++k) c[k] = a.c_[k] + b.c_[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const unsigned order = std::min(a.order(), b.order());
  std::vector<BigRational> c(order + 1);
  for (unsigned k = 0; k <= order; ++k) c[k] = a.c_[k] - b.c_[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const unsigned order = std::min(a.order(), b.order());
  std::vector<BigRational> c(order + 1, BigRational(0));
  for (unsigned k = 0; k <= order; ++k) {
    for (unsigned j = 0; j <= k; ++j) c[k] += a.c_[j] * b.c_[k - j];
  }
  return PowerSeries(std::move(c));
}

PowerSeries series_rsqrt_one_minus_x(unsigned order) {
  // S*S*(1-x) = 1 forces the Cauchy squares p_k of S to satisfy p_0 = 1 and
  // p_k = p_{k-1}, i.e. every p_k = 1. With c_0 = 1 (principal branch) that
  // pins c_k = (1 - sum_{j=1}^{k-1} c_j c_{k-j}) / 2.
  std::vector<BigRational> c(order + 1);
  c[0] = 1;
  for (unsigned k = 1; k <= order; ++k) {
    BigRational inner = 0;
    for (unsigned j = 1; j < k; ++j) inner += c[j] * c[k - j];
    c[k] = (BigRational(1) - inner) / BigRational(2);
  }
  return PowerSeries(std::move(c));
}

PowerSeries series_reciprocal_one_minus_x(unsigned order) {
  // S*(1-x) = 1: the constant term pins s_0 = 1, every higher coefficient
  // of the product must vanish, so s_k = s_{k-1}.
  std::vector<BigRational> c(order + 1);
  c[0] = 1;
  for (unsigned k = 1; k <= order; ++k) c[k] = c[k - 1];
  return PowerSeries(std::move(c));
}

BigRational jet_nth_derivative_at_zero(const PowerSeries& series, unsigned k) {
  if (k > series.order()) {
    throw std::domain_error("jet_nth_derivative_at_zero: derivative order " + std::to_string(k) +
                            " exceeds series truncation order " + std::to_string(series.order()));
  }
  return BigRational(factorial(k)) * series.coeff(k);
}

}  // namespace gaussmom
