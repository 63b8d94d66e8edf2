#include "gaussmom/half_int_value.hpp"

#include <stdexcept>

namespace gaussmom {

const BigFloat& bigfloat_pi() {
  static const BigFloat pi = 4 * atan(BigFloat(1));
  return pi;
}

BigFloat HalfIntValue::to_bigfloat() const {
  if (sqrt_pi_power < 0) throw std::domain_error("HalfIntValue: negative sqrt(pi) power");
  BigFloat v = coef.to_bigfloat();
  if (sqrt_pi_power != 0) v *= pow(sqrt(bigfloat_pi()), sqrt_pi_power);
  return v;
}

double HalfIntValue::to_double() const { return to_bigfloat().convert_to<double>(); }

std::string HalfIntValue::str() const {
  if (sqrt_pi_power == 0) return coef.str();
  std::string tail;
  if (sqrt_pi_power == 1) {
    tail = "*sqrt(pi)";
  } else if (sqrt_pi_power == 2) {
    tail = "*pi";
  } else {
    tail = "*sqrt(pi)^" + std::to_string(sqrt_pi_power);
  }
  return coef.str() + tail;
}

HalfIntValue operator*(const HalfIntValue& a, const HalfIntValue& b) {
  return {a.coef * b.coef, a.sqrt_pi_power + b.sqrt_pi_power};
}

HalfIntValue operator*(const BigRational& r, const HalfIntValue& v) {
  return {r * v.coef, v.sqrt_pi_power};
}

HalfIntValue operator-(const HalfIntValue& v) { return {-v.coef, v.sqrt_pi_power}; }

}  // namespace gaussmom
