#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "gaussmom/gamma_coeff.hpp"
#include "gaussmom/moments.hpp"

namespace gm = gaussmom;
using gm::BigRational;
using gm::MomentQuery;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

TEST_CASE("closed form reproduces the textbook values") {
  const auto r0 = gm::moment_closed({0, 1.0});
  CHECK(r0.exact_coef == BigRational(1));
  CHECK(r0.alpha_exponent == BigRational(-1, 2));
  CHECK(r0.float_value == doctest::Approx(kSqrtPi).epsilon(1e-15));
  CHECK(r0.error_estimate == 0.0);

  const auto r1 = gm::moment_closed({1, 1.0});
  CHECK(r1.exact_coef == BigRational(1, 2));
  CHECK(r1.float_value == doctest::Approx(kSqrtPi / 2).epsilon(1e-15));

  const auto r3 = gm::moment_closed({3, 2.0});
  CHECK(r3.exact_coef == BigRational(15, 8));
  CHECK(r3.alpha_exponent == BigRational(-7, 2));
  CHECK(r3.float_value == doctest::Approx(15.0 / 8 * kSqrtPi * std::pow(2.0, -3.5)).epsilon(1e-14));
}

TEST_CASE("gamma-form agrees with the closed form exactly in the exact fields") {
  const auto g0 = gm::moment_gamma_form({0, 1.0});
  CHECK(g0.float_value == doctest::Approx(kSqrtPi).epsilon(1e-15));

  const auto g2 = gm::moment_gamma_form({2, 1.0});
  CHECK(g2.exact_coef == BigRational(3, 4));

  const auto g14 = gm::moment_gamma_form({1, 4.0});
  CHECK(g14.float_value == doctest::Approx(kSqrtPi / 16).epsilon(1e-14));

  for (unsigned n = 0; n <= 50; ++n) {
    CAPTURE(n);
    const auto closed = gm::moment_closed({n, 1.0});
    const auto gamma = gm::moment_gamma_form({n, 1.0});
    CHECK(closed.exact_coef == gamma.exact_coef);
    CHECK(closed.alpha_exponent == gamma.alpha_exponent);
    CHECK(closed.float_value == gamma.float_value);
  }
}

TEST_CASE("quadrature oracle hits known values and honors its error contract") {
  const auto q0 = gm::moment_quadrature({0, 1.0}, 1e-10);
  CHECK(q0.float_value == doctest::Approx(kSqrtPi).epsilon(1e-10));
  CHECK(q0.error_estimate <= 1e-10 * q0.float_value);
  CHECK(q0.method == gm::MomentMethod::quadrature);

  const auto q5 = gm::moment_quadrature({5, 1.0}, 1e-10);
  CHECK(q5.float_value == doctest::Approx(945.0 / 32 * kSqrtPi).epsilon(1e-10));

  const auto q2 = gm::moment_quadrature({2, 0.5}, 1e-10);
  CHECK(q2.float_value ==
        doctest::Approx(gm::moment_closed({2, 0.5}).float_value).epsilon(1e-9));
}

TEST_CASE("quadrature agrees with the closed form across the oracle grid") {
  for (unsigned n = 0; n <= 10; ++n) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      CAPTURE(n);
      CAPTURE(alpha);
      const double closed = gm::moment_closed({n, alpha}).float_value;
      const double quad = gm::moment_quadrature({n, alpha}, 1e-10).float_value;
      CHECK(std::abs(quad - closed) / closed < 1e-9);
    }
  }
}

TEST_CASE("scaling law in alpha") {
  for (unsigned n = 0; n <= 10; ++n) {
    const double unit = gm::moment_closed({n, 1.0}).float_value;
    for (double alpha : {0.5, 1.0, 2.0, 10.0}) {
      CAPTURE(n);
      CAPTURE(alpha);
      const double expected = unit * std::pow(alpha, -(2.0 * n + 1.0) / 2.0);
      CHECK(gm::moment_closed({n, alpha}).float_value ==
            doctest::Approx(expected).epsilon(1e-14));
    }
  }
}

TEST_CASE("large n renders through logs, no intermediate overflow") {
  // gamma_{600} alone dwarfs double range, but alpha = 12 pulls the moment
  // back inside it; a naive product would hit inf on the way.
  const auto r = gm::moment_closed({300, 12.0});
  CHECK(std::isfinite(r.float_value));
  CHECK(r.float_value > 0.0);
  const double log_expected = std::lgamma(300.5) - 300.5 * std::log(12.0);
  CHECK(std::abs(std::log(r.float_value) - log_expected) < 1e-10);

  // when the value genuinely exceeds double range the render saturates
  CHECK(gm::moment_closed({300, 1.0}).float_value ==
        std::numeric_limits<double>::infinity());
}

TEST_CASE("odd moments vanish identically") {
  for (auto [k, alpha] : {std::pair<unsigned, double>{1, 1.0}, {3, 2.0}, {0, 5.0}}) {
    const auto r = gm::moment_odd(k, alpha);
    CHECK(r.float_value == 0.0);
    CHECK(r.exact_coef == BigRational(0));
    CHECK(r.error_estimate == 0.0);
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(gm::moment_closed({1, 0.0}), std::domain_error);
  CHECK_THROWS_AS(gm::moment_closed({1, -2.0}), std::domain_error);
  CHECK_THROWS_AS(gm::moment_gamma_form({1, 0.0}), std::domain_error);
  CHECK_THROWS_AS(gm::moment_quadrature({1, -1.0}, 1e-10), std::domain_error);
  CHECK_THROWS_AS(gm::moment_odd(1, 0.0), std::domain_error);
  // tolerance floor: below double round-off the contract would be a lie
  CHECK_THROWS_AS(gm::moment_quadrature({1, 1.0}, 1e-15), std::domain_error);
}
