#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace varbounds {

using BigInt = boost::multiprecision::cpp_int;

/// Exact signed rational. Canonical form is maintained after every
/// operation: denominator > 0 and gcd(|numerator|, denominator) = 1.
/// There is deliberately no conversion to or from floating point; the
/// decimal rendering used for display is computed by integer long division.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  BigInt floor() const;
  BigInt ceil() const;

  /// Lowest-terms string, "p/q", or just "p" when the value is an integer.
  std::string to_string() const;

  /// Plain decimal approximation with the given number of significant
  /// digits, rounded half-up. Exact integer long division throughout.
  std::string decimal_string(int significant_digits = 6) const;

  /// Accepts "p", "p/q" and decimal literals like "-1.25" (parsed exactly).
  static Rational parse(const std::string& text);

private:
  void normalize();
  BigInt num_;
  BigInt den_;
};

/// Floor of the square root of a nonnegative integer.
BigInt isqrt(const BigInt& n);

bool is_perfect_square(const BigInt& n);

/// Exact square root when one exists (numerator and denominator both
/// perfect squares), nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& r);

inline Rational binomial2(const Rational& a) { return a * (a - Rational(1)) / Rational(2); }

}  // namespace varbounds
