#include "varbounds/rational.hpp"

#include <cctype>
#include <sstream>

namespace varbounds {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_;
  if (num_ < 0 && q * den_ != num_) --q;
  return q;
}

BigInt Rational::ceil() const {
  BigInt q = num_ / den_;
  if (num_ > 0 && q * den_ != num_) ++q;
  return q;
}

std::string Rational::to_string() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

std::string Rational::decimal_string(int significant_digits) const {
  if (significant_digits < 1) throw std::invalid_argument("decimal_string: need >= 1 digit");
  if (num_ == 0) return "0";
  const bool neg = num_ < 0;
  const BigInt a = neg ? BigInt(-num_) : num_;
  const BigInt& b = den_;

  const BigInt int_part = a / b;
  const int int_digits = int_part == 0 ? 0 : static_cast<int>(int_part.str().size());

  std::string digits;
  if (int_digits >= significant_digits) {
    // Round at an integer scale.
    BigInt scale = 1;
    for (int i = 0; i < int_digits - significant_digits; ++i) scale *= 10;
    BigInt rounded = (2 * a + b * scale) / (2 * b * scale);
    digits = (rounded * scale).str();
  } else {
    int frac_digits = significant_digits - int_digits;
    if (int_part == 0) {
      // Count leading fractional zeros so they do not eat significant digits.
      BigInt rem = a;
      int zeros = 0;
      while (true) {
        rem *= 10;
        if (rem / b != 0) break;
        ++zeros;
      }
      frac_digits = zeros + significant_digits;
    }
    BigInt pow10 = 1;
    for (int i = 0; i < frac_digits; ++i) pow10 *= 10;
    BigInt scaled = (2 * a * pow10 + b) / (2 * b);
    std::string s = scaled.str();
    if (static_cast<int>(s.size()) <= frac_digits)
      s.insert(0, frac_digits + 1 - s.size(), '0');
    s.insert(s.size() - frac_digits, ".");
    digits = s;
  }
  return neg ? "-" + digits : digits;
}

Rational Rational::parse(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  };
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t"));
  if (!s.empty()) s.erase(s.find_last_not_of(" \t") + 1);
  if (s.empty()) return fail();

  auto is_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  bool neg = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    pos = 1;
  }
  std::string body = s.substr(pos);
  if (body.empty()) return fail();

  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string p = body.substr(0, slash), q = body.substr(slash + 1);
    if (!is_digits(p) || !is_digits(q)) return fail();
    BigInt den(q);
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value = Rational(BigInt(p), den);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!is_digits(ip) || (!fp.empty() && !is_digits(fp))) return fail();
    BigInt pow10 = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) pow10 *= 10;
    BigInt scaled = BigInt(ip) * pow10 + (fp.empty() ? BigInt(0) : BigInt(fp));
    value = Rational(scaled, pow10);
  } else {
    if (!is_digits(body)) return fail();
    value = Rational(BigInt(body));
  }
  return neg ? -value : value;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  return mp::sqrt(n);
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt r = mp::sqrt(n);
  return r * r == n;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.is_negative()) return std::nullopt;
  if (!is_perfect_square(r.num()) || !is_perfect_square(r.den())) return std::nullopt;
  return Rational(isqrt(r.num()), isqrt(r.den()));
}

}  // namespace varbounds
