#include "varbounds/moments.hpp"

namespace varbounds {

MomentSummary summarize(const std::vector<Rational>& values) {
  if (values.empty()) throw std::invalid_argument("summarize: empty value list");
  MomentSummary ms;
  ms.s0 = static_cast<long long>(values.size());
  for (const Rational& a : values) {
    ms.s1 += a;
    ms.s2 += a * a;
  }
  ms.sstar = (ms.s2 - ms.s1) / Rational(2);
  ms.mean = ms.s1 / Rational(ms.s0);
  return ms;
}

Rational variance_slack(const MomentSummary& ms) {
  if (ms.s0 <= 0) throw std::invalid_argument("variance_slack: S0 must be positive");
  return Rational(ms.s0) * ms.s2 - ms.s1 * ms.s1;
}

Rational lower_bound_slack(const Rational& s0, const LowerBoundContext& ctx) {
  if (!(ctx.b > Rational(0))) throw std::invalid_argument("lower_bound_slack: B must be positive");
  if (ctx.c < ctx.b) throw std::invalid_argument("lower_bound_slack: C must be >= B");
  return s0 * ctx.c - ctx.b * ctx.b;
}

Rational f_epsilon(const Rational& b, const Rational& c, const Rational& eps) {
  if (!(b > Rational(0))) throw std::invalid_argument("f_epsilon: B must be positive");
  if (c < b) throw std::invalid_argument("f_epsilon: C must be >= B");
  if (eps.is_negative()) throw std::invalid_argument("f_epsilon: epsilon must be >= 0");
  Rational denom = c + eps;
  if (denom.is_zero()) throw std::domain_error("f_epsilon: division by zero");
  Rational num = b + eps;
  return num * num / denom;
}

Rational integer_shift_slack(const std::vector<long long>& values, long long ell) {
  if (values.empty()) throw std::invalid_argument("integer_shift_slack: empty value list");
  BigInt total = 0;
  for (long long a : values) {
    BigInt d = BigInt(a) - ell;
    total += d * (d - 1);
  }
  return Rational(total);
}

}  // namespace varbounds
