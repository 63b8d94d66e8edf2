#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace gaussmom {

using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

/// Exact rational number kept in canonical form after every operation:
/// denominator > 0 and gcd(|numerator|, denominator) == 1. Equality is a
/// plain field comparison because of that invariant.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  BigRational(BigInt n) : num_(std::move(n)), den_(1) {}
  BigRational(BigInt num, BigInt den);

  /// Parses "n" or "n/d" with optional leading '-'.
  static BigRational from_string(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  BigRational reciprocal() const;
  BigRational pow(long long e) const;

  /// Rounds once, at the end: the quotient is formed in 50-digit binary
  /// floating point and converted to double as the final step.
  double to_double() const;
  BigFloat to_bigfloat() const;

  std::string str() const;  // "num" when integral, else "num/den"

  friend BigRational operator-(const BigRational& x) {
    BigRational r;
    r.num_ = -x.num_;
    r.den_ = x.den_;
    return r;
  }
  friend BigRational operator+(const BigRational& x, const BigRational& y) {
    return BigRational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend BigRational operator-(const BigRational& x, const BigRational& y) {
    return BigRational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend BigRational operator*(const BigRational& x, const BigRational& y) {
    return BigRational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend BigRational operator/(const BigRational& x, const BigRational& y);

  BigRational& operator+=(const BigRational& y) { return *this = *this + y; }
  BigRational& operator-=(const BigRational& y) { return *this = *this - y; }
  BigRational& operator*=(const BigRational& y) { return *this = *this * y; }
  BigRational& operator/=(const BigRational& y) { return *this = *this / y; }

  friend bool operator==(const BigRational& x, const BigRational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const BigRational& x, const BigRational& y) { return !(x == y); }
  friend bool operator<(const BigRational& x, const BigRational& y) {
    return x.num_ * y.den_ < y.num_ * x.den_;
  }
  friend bool operator>(const BigRational& x, const BigRational& y) { return y < x; }
  friend bool operator<=(const BigRational& x, const BigRational& y) { return !(y < x); }
  friend bool operator>=(const BigRational& x, const BigRational& y) { return !(x < y); }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& x);

 private:
  void canonicalize();

  BigInt num_;
  BigInt den_;
};

BigRational abs(const BigRational& x);

}  // namespace gaussmom
