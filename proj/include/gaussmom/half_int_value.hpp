#pragma once

#include <string>

#include "gaussmom/rational.hpp"

namespace gaussmom {

/// Exact value of the form coef * (sqrt(pi))^sqrt_pi_power. Every closed-form
/// result this library produces carries power 0 or 1; multiplication adds
/// powers, which is how pi-valued identities (e.g. reflection products that
/// equal (-1)^n * pi, power 2) are stated and checked exactly.
struct HalfIntValue {
  BigRational coef;
  int sqrt_pi_power = 0;

  double to_double() const;
  BigFloat to_bigfloat() const;
  std::string str() const;

  friend bool operator==(const HalfIntValue& a, const HalfIntValue& b) {
    return a.coef == b.coef && a.sqrt_pi_power == b.sqrt_pi_power;
  }
  friend bool operator!=(const HalfIntValue& a, const HalfIntValue& b) { return !(a == b); }
};

HalfIntValue operator*(const HalfIntValue& a, const HalfIntValue& b);
HalfIntValue operator*(const BigRational& r, const HalfIntValue& v);
HalfIntValue operator-(const HalfIntValue& v);

/// pi to 50 decimal digits; shared by the float renderings.
const BigFloat& bigfloat_pi();

}  // namespace gaussmom
