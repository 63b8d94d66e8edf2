#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "gaussmom/fractional.hpp"
#include "gaussmom/special_functions.hpp"

namespace gm = gaussmom;
using gm::BigInt;
using gm::BigRational;
using gm::FracOrder;
using gm::HalfIntValue;

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

BigInt factorial_oracle(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("order window validation") {
  CHECK(FracOrder::canonical(2.5).m == 3);
  CHECK(FracOrder::canonical(3.0).m == 3);
  CHECK(FracOrder::canonical(0.5).m == 1);
  CHECK_NOTHROW(FracOrder(0.5, 1));
  CHECK_THROWS_AS(FracOrder(2.5, 4), std::domain_error);
  CHECK_THROWS_AS(FracOrder(2.5, 2), std::domain_error);
  CHECK_THROWS_AS(FracOrder(-1.0, 1), std::domain_error);
  CHECK_THROWS_AS(FracOrder(0.5, 0), std::domain_error);
}

TEST_CASE("power rule: integer orders reproduce ordinary derivatives") {
  CHECK(gm::frac_derivative_power(2.0, FracOrder(1.0, 1), 3.0) ==
        doctest::Approx(6.0).epsilon(1e-13));

  // theta!/(theta-k)! * t^(theta-k) at t = 1
  for (unsigned theta = 0; theta <= 10; ++theta) {
    for (unsigned k = 1; k <= theta; ++k) {
      CAPTURE(theta);
      CAPTURE(k);
      const double expected =
          BigRational(factorial_oracle(theta), factorial_oracle(theta - k)).to_double();
      const double got = gm::frac_derivative_power(theta, FracOrder(k, k), 1.0);
      CHECK(rel_diff(got, expected) < 1e-13);
    }
  }
}

TEST_CASE("power rule: half-integer and self-derivative cases") {
  // alpha = theta collapses to alpha!
  CHECK(gm::frac_derivative_power(1.0, FracOrder(1.0, 1), 7.0) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(gm::frac_derivative_power(0.5, FracOrder(0.5, 1), 0.3) ==
        doctest::Approx(0.5 * kSqrtPi).epsilon(1e-13));

  // the classic half derivative of t: 2 sqrt(t/pi)
  CHECK(gm::frac_derivative_power(1.0, FracOrder(0.5, 1), 3.0) ==
        doctest::Approx(2.0 * std::sqrt(3.0 / std::numbers::pi)).epsilon(1e-12));

  // generic real arguments route through the numeric gamma
  CHECK(gm::frac_derivative_power(0.3, FracOrder(0.25, 1), 2.0) ==
        doctest::Approx(0.954407664073529976).epsilon(1e-9));
}

TEST_CASE("power rule rejects gamma poles and bad domains") {
  CHECK_THROWS_AS(gm::frac_derivative_power(1.0, FracOrder(2.0, 2), 1.0), std::domain_error);
  CHECK_THROWS_AS(gm::frac_derivative_power(0.5, FracOrder(2.5, 3), 1.0), std::domain_error);
  CHECK_THROWS_AS(gm::frac_derivative_power(-1.0, FracOrder(0.5, 1), 1.0), std::domain_error);
  CHECK_THROWS_AS(gm::frac_derivative_power(1.0, FracOrder(0.5, 1), 0.0), std::domain_error);
}

TEST_CASE("self-derivative gives alpha!") {
  CHECK(gm::alpha_self_derivative(0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gm::alpha_self_derivative(3.0) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(gm::alpha_self_derivative(2.5) == doctest::Approx(1.875 * kSqrtPi).epsilon(1e-13));
  CHECK(gm::alpha_self_derivative(-0.5) == doctest::Approx(kSqrtPi).epsilon(1e-13));
  CHECK(gm::alpha_self_derivative(1.3) == doctest::Approx(1.16671190519816).epsilon(1e-9));
  CHECK_THROWS_AS(gm::alpha_self_derivative(-1.0), std::domain_error);
}

TEST_CASE("jet derivative of the reciprocal series is k!") {
  CHECK(gm::kth_derivative_reciprocal(0) == 1);
  CHECK(gm::kth_derivative_reciprocal(3) == 6);
  CHECK(gm::kth_derivative_reciprocal(7) == 5040);
  for (unsigned k = 0; k <= 30; ++k) {
    CAPTURE(k);
    CHECK(gm::kth_derivative_reciprocal(k) == factorial_oracle(k));
  }
}

TEST_CASE("Riemann-Liouville closed form") {
  // frozen from an independent high-precision evaluation
  CHECK(rel_diff(gm::rl_half_derivative(0, 1, 1e-6), 564.189959674446220) < 1e-9);
  CHECK(rel_diff(gm::rl_half_derivative(1, 2, 0.01), -283.990598889025565) < 1e-9);

  // x^(-1/2) growth law: shrinking x by 100 scales the value by 10
  const double ratio =
      gm::rl_half_derivative(0, 1, 1e-4) / gm::rl_half_derivative(0, 1, 1e-6);
  CHECK(std::abs(ratio * 10.0 - 1.0) < 1e-3);

  CHECK_THROWS_AS(gm::rl_half_derivative(0, 1, 0.0), std::domain_error);
  CHECK_THROWS_AS(gm::rl_half_derivative(0, 1, 1.0), std::domain_error);
  CHECK_THROWS_AS(gm::rl_half_derivative(0, 1, -0.5), std::domain_error);
  CHECK_THROWS_AS(gm::rl_half_derivative(0, 0, 0.5), std::domain_error);
}

TEST_CASE("RL divergence law: scaled values approach 1/Gamma(1/2 - n)") {
  for (unsigned n : {0u, 1u}) {
    CAPTURE(n);
    const double limit = 1.0 / gm::gamma_half_minus(n).to_double();
    double previous = 1e300;
    for (double x : {1e-4, 1e-6, 1e-8}) {
      const double scaled = gm::rl_half_derivative(n, n + 1, x) * std::pow(x, n + 0.5);
      const double dev = std::abs(scaled - limit) / std::abs(limit);
      CHECK(dev < previous);  // monotone approach
      previous = dev;
    }
    CHECK(previous < 1e-4);
  }
}

TEST_CASE("Caputo closed form") {
  CHECK(rel_diff(gm::caputo_half_derivative(0, 1, 1e-6), 1.128380671602874e-3) < 1e-9);
  CHECK(rel_diff(gm::caputo_half_derivative(1, 2, 0.01), 0.230262611947861427) < 1e-9);

  // x^(1/2) decay law: shrinking x by 100 scales the value by 1/10
  const double ratio =
      gm::caputo_half_derivative(0, 1, 1e-4) / gm::caputo_half_derivative(0, 1, 1e-6);
  CHECK(std::abs(ratio / 10.0 - 1.0) < 1e-3);

  CHECK_THROWS_AS(gm::caputo_half_derivative(0, 1, 0.0), std::domain_error);
  CHECK_THROWS_AS(gm::caputo_half_derivative(0, 1, 1.5), std::domain_error);
}

TEST_CASE("Caputo vanishing law: scaled values approach Gamma(m+1)/Gamma(m-n+1/2)") {
  for (unsigned n : {0u, 1u}) {
    CAPTURE(n);
    const int m = static_cast<int>(n) + 1;
    const double limit =
        BigRational(factorial_oracle(m)).to_double() / gm::gamma_half_plus(1).to_double();
    double previous = 1e300;
    for (double x : {1e-4, 1e-6, 1e-8}) {
      const double scaled = gm::caputo_half_derivative(n, m, x) / std::sqrt(x);
      const double dev = std::abs(scaled - limit) / limit;
      CHECK(dev < previous);
      previous = dev;
    }
    CHECK(previous < 1e-4);
  }
}

TEST_CASE("regularized value at zero equals the half factorial") {
  CHECK(gm::regularized_half_derivative_at_zero(0) == HalfIntValue{BigRational(1, 2), 1});
  CHECK(gm::regularized_half_derivative_at_zero(1) == HalfIntValue{BigRational(3, 4), 1});
  CHECK(gm::regularized_half_derivative_at_zero(2) == HalfIntValue{BigRational(15, 8), 1});
  CHECK(gm::regularized_half_derivative_at_zero(0).to_double() ==
        doctest::Approx(0.8862269254527580).epsilon(1e-15));
  for (unsigned n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(gm::regularized_half_derivative_at_zero(n) == gm::half_factorial(n));
  }
}
