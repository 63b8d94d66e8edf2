#include "gaussmom/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace gaussmom {

BigRational::BigRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void BigRational::canonicalize() {
  if (den_ == 0) throw std::domain_error("BigRational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

BigRational BigRational::from_string(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return BigRational(BigInt(std::string(text)));
    }
    BigInt num{std::string(text.substr(0, slash))};
    BigInt den{std::string(text.substr(slash + 1))};
    return BigRational(std::move(num), std::move(den));
  } catch (const std::runtime_error&) {
    throw std::domain_error("BigRational: cannot parse '" + std::string(text) + "'");
  }
}

BigRational operator/(const BigRational& x, const BigRational& y) {
  if (y.num_ == 0) throw std::domain_error("BigRational: division by zero");
  return BigRational(x.num_ * y.den_, x.den_ * y.num_);
}

BigRational BigRational::reciprocal() const {
  if (num_ == 0) throw std::domain_error("BigRational: reciprocal of zero");
  return BigRational(den_, num_);
}

BigRational BigRational::pow(long long e) const {
  if (e < 0) return reciprocal().pow(-e);
  BigRational base = *this;
  BigRational result = 1;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

BigFloat BigRational::to_bigfloat() const { return BigFloat(num_) / BigFloat(den_); }

double BigRational::to_double() const { return to_bigfloat().convert_to<double>(); }

std::string BigRational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.str(); }

BigRational abs(const BigRational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace gaussmom
