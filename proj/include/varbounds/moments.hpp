#pragma once

#include <vector>

#include "varbounds/rational.hpp"

namespace varbounds {

/// Power sums of a value list: S0 = n, S1 = sum, S2 = sum of squares,
/// and sstar = (S2 - S1)/2, which for integer inputs equals the sum of
/// binomial(a_i, 2).
struct MomentSummary {
  long long s0 = 0;
  Rational s1;
  Rational s2;
  Rational sstar;
  Rational mean;  // S1/S0
};

MomentSummary summarize(const std::vector<Rational>& values);

/// S0*S2 - S1^2. Nonnegative for any summary built by summarize; zero
/// exactly when all inputs were equal.
Rational variance_slack(const MomentSummary& ms);

/// Data for the lower-bounded-S1 inequality: S1 >= B written as
/// S1 = B + epsilon, with C = 2*sstar + B.
struct LowerBoundContext {
  Rational b;
  Rational c;
  Rational epsilon;
};

/// S0*C - B^2.
Rational lower_bound_slack(const Rational& s0, const LowerBoundContext& ctx);

/// (B + eps)^2 / (C + eps); increasing in eps whenever C >= B > 0.
Rational f_epsilon(const Rational& b, const Rational& c, const Rational& eps);

/// Sum of (a_i - ell)(a_i - ell - 1) over integer values; always >= 0,
/// zero exactly when every a_i lies in {ell, ell+1}.
Rational integer_shift_slack(const std::vector<long long>& values, long long ell);

}  // namespace varbounds
