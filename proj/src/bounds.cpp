#include "varbounds/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace varbounds {

namespace {

// Fills satisfied/equality/slack once lhs and rhs are in place.
void finalize(BoundReport& report) {
  if (!report.applicable || !report.lhs) return;
  Rational slack = report.relation == Relation::GreaterEqual ? *report.lhs - report.rhs
                                                             : report.rhs - *report.lhs;
  report.slack = slack;
  report.satisfied = !slack.is_negative();
  report.equality = slack.is_zero();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

Rational rat(long long n) { return Rational(n); }

}  // namespace

BoundReport fisher(const BibdParams& p) {
  auto violations = bibd_identity_violations(p);
  if (!violations.empty())
    throw std::invalid_argument("fisher: BIBD identities violated: " + violations.front().message);
  BoundReport report{.name = "fisher", .relation = Relation::GreaterEqual, .statement = "b >= v"};
  report.lhs = rat(p.b);
  report.rhs = rat(p.v);
  Rational certificate = rat(p.r - p.k) * rat(p.v - p.k) * rat(p.r - p.lambda);
  report.notes.push_back("factorized certificate (r-k)(v-k)(r-lambda) = " + certificate.to_string());
  if (p.k < p.v)
    report.notes.push_back("incomplete design: lambda < r, so the certificate reduces to r >= k");
  else
    report.notes.push_back("complete design (k = v): the inequality is not implied");
  if (p.v == p.b) report.notes.push_back("symmetric design: any two blocks meet in lambda points");
  finalize(report);
  return report;
}

BoundReport mann(const BibdParams& p, long long multiplicity) {
  auto violations = bibd_identity_violations(p);
  if (!violations.empty())
    throw std::invalid_argument("mann: BIBD identities violated: " + violations.front().message);
  require(multiplicity >= 1, "mann: multiplicity must be >= 1");
  BoundReport report{.name = "mann", .relation = Relation::GreaterEqual, .statement = "b >= s*v"};
  report.lhs = rat(p.b);
  report.rhs = rat(multiplicity) * rat(p.v);
  report.notes.push_back("block multiplicity s = " + std::to_string(multiplicity));
  finalize(report);
  return report;
}

BoundReport plackett_burman(long long k, long long n, long long lambda) {
  require(k >= 2, "plackett_burman: need k >= 2");
  require(n >= 2, "plackett_burman: need n >= 2");
  require(lambda >= 1, "plackett_burman: need lambda >= 1");
  BoundReport report{.name = "plackett-burman",
                     .relation = Relation::GreaterEqual,
                     .statement = "lambda >= (k(n-1)+1)/n^2"};
  report.lhs = rat(lambda);
  report.rhs = Rational(BigInt(k) * (n - 1) + 1, BigInt(n) * n);
  Rational k_bound = Rational(BigInt(lambda) * n * n - 1, BigInt(n) - 1);
  report.notes.push_back("equivalent column bound: k <= (lambda*n^2-1)/(n-1) = " +
                         k_bound.to_string());
  finalize(report);
  return report;
}

BoundReport oa_repeated_row(long long k, long long n, long long lambda, long long m) {
  require(k >= 2, "oa_repeated_row: need k >= 2");
  require(n >= 2, "oa_repeated_row: need n >= 2");
  require(lambda >= 1, "oa_repeated_row: need lambda >= 1");
  require(m >= 1, "oa_repeated_row: need m >= 1");
  BoundReport report{.name = "oa-repeated",
                     .relation = Relation::GreaterEqual,
                     .statement = "lambda >= m(k(n-1)+1)/n^2"};
  report.lhs = rat(lambda);
  report.rhs = Rational(BigInt(m) * (BigInt(k) * (n - 1) + 1), BigInt(n) * n);
  report.notes.push_back("row multiplicity m = " + std::to_string(m));
  finalize(report);
  return report;
}

BoundReport johnson_matrix(long long m, long long n, long long r, long long lambda) {
  require(lambda >= 0 && r > lambda, "johnson_matrix: need r > lambda >= 0");
  require(m >= 1 && n >= 1, "johnson_matrix: need m, n >= 1");
  BoundReport report{.name = "johnson",
                     .relation = Relation::LessEqual,
                     .statement = "m <= n(r-lambda)/(r^2 - n*lambda)"};
  BigInt denom = BigInt(r) * r - BigInt(n) * lambda;
  if (denom <= 0) {
    report.applicable = false;
    report.notes.push_back("inapplicable: r^2 - n*lambda = " + denom.str() + " <= 0");
    return report;
  }
  report.lhs = rat(m);
  report.rhs = Rational(BigInt(n) * (r - lambda), denom);
  finalize(report);
  return report;
}

BoundReport johnson_code(long long n, long long r, long long delta,
                         std::optional<long long> code_size) {
  require(delta > 0 && r > delta, "johnson_code: need r > delta > 0");
  require(n >= 1, "johnson_code: need n >= 1");
  BoundReport report{.name = "johnson-code",
                     .relation = Relation::LessEqual,
                     .statement = "|C| <= n*delta/(r^2 - n(r-delta))"};
  BigInt denom = BigInt(r) * r - BigInt(n) * (r - delta);
  if (denom <= 0) {
    report.applicable = false;
    report.notes.push_back("inapplicable: r^2 - n(r-delta) = " + denom.str() + " <= 0");
    return report;
  }
  report.rhs = Rational(BigInt(n) * delta, denom);
  report.notes.push_back("max code size: " + report.rhs.floor().str());
  if (code_size) {
    require(*code_size >= 1, "johnson_code: code size must be >= 1");
    report.lhs = rat(*code_size);
  }
  finalize(report);
  return report;
}

BoundReport stanton_kalbfleisch(long long v, long long k, std::optional<long long> b) {
  require(k >= 2 && k < v, "stanton_kalbfleisch: need 2 <= k < v");
  BoundReport report{.name = "stanton-kalbfleisch",
                     .relation = Relation::GreaterEqual,
                     .statement = "b >= 1 + k^2(v-k)/(v-1)"};
  report.rhs = rat(1) + Rational(BigInt(k) * k * (v - k), BigInt(v) - 1);
  report.notes.push_back("integer bound: b >= " + report.rhs.ceil().str());
  report.notes.push_back("equality block size: 1 + (v-1)/k = " +
                         (rat(1) + Rational(BigInt(v) - 1, BigInt(k))).to_string());
  if (b) report.lhs = rat(*b);
  finalize(report);
  return report;
}

Rational erdos_de_bruijn_slack(long long v, long long k) {
  require(k >= 2 && k < v, "erdos_de_bruijn_slack: need 2 <= k < v");
  Rational direct = rat(1) + Rational(BigInt(k) * k * (v - k), BigInt(v) - 1) - rat(v);
  Rational factored =
      -Rational((BigInt(v) - (k + 1)) * (BigInt(v) - (BigInt(k) * k - k + 1)), BigInt(v) - 1);
  if (direct != factored)
    throw std::logic_error("erdos_de_bruijn_slack: the two algebraic routes disagree");
  return factored;
}

BoundReport mullin_vanstone(long long v, long long r, long long lambda,
                            std::optional<long long> b) {
  require(v >= 1 && r >= 1 && lambda >= 1, "mullin_vanstone: need v, r, lambda >= 1");
  BoundReport report{.name = "mullin-vanstone",
                     .relation = Relation::GreaterEqual,
                     .statement = "b >= r^2*v/(r + lambda(v-1))"};
  report.rhs = Rational(BigInt(r) * r * v, BigInt(r) + BigInt(lambda) * (v - 1));
  report.notes.push_back("integer bound: b >= " + report.rhs.ceil().str());
  if (b) report.lhs = rat(*b);
  finalize(report);
  return report;
}

BoundReport nonincident_lines_bound(const PlaneNonincidence& p) {
  require(p.q >= 2, "nonincident_lines_bound: need plane order q >= 2");
  require(p.s >= 1 && p.s <= p.q * p.q + p.q + 1,
          "nonincident_lines_bound: need 1 <= s <= q^2+q+1");
  BoundReport report{.name = "nonincident",
                     .relation = Relation::LessEqual,
                     .statement = "t <= (q^3+q^2+q-qs)/(q+s)"};
  BigInt q(p.q);
  report.rhs = Rational(q * q * q + q * q + q - q * p.s, q + p.s);
  report.notes.push_back("integer bound: t <= " + report.rhs.floor().str());
  if (p.t) {
    require(*p.t >= 0, "nonincident_lines_bound: need t >= 0");
    report.lhs = rat(*p.t);
  }
  finalize(report);
  return report;
}

WestBoundDetail west_diagonal_bound_detail(long long q) {
  require(q >= 2, "west_diagonal_bound: need q >= 2");
  // Largest integer s with s(q+s) <= q^3+q^2+q-qs, searched over the
  // whole plane's point range. Kept integer-only; no real square roots.
  BigInt lines = BigInt(q) * q * q + BigInt(q) * q + q;
  long long best = 0;
  for (long long s = 1; s <= q * q + q + 1; ++s) {
    if (BigInt(s) * (q + s) <= lines - BigInt(q) * s) best = s;
  }
  WestBoundDetail detail;
  detail.value = rat(best);
  detail.q_is_square = is_perfect_square(BigInt(q));
  if (detail.q_is_square) {
    BigInt root = isqrt(BigInt(q));
    detail.closed_form = rat(1) + rat(q + 1) * Rational(root - 1);
    if (*detail.closed_form != detail.value)
      throw std::logic_error("west_diagonal_bound: closed form disagrees with integer search");
  }
  return detail;
}

Rational west_diagonal_bound(long long q) { return west_diagonal_bound_detail(q).value; }

BoundReport stinson_bound(long long v, long long k, long long ell, std::optional<long long> b) {
  require(k >= 2 && k < v, "stinson_bound: need 2 <= k < v");
  if (ell == 0 || ell == -1)
    throw std::domain_error("stinson_bound: l^2 + l = 0 for l in {-1, 0}");
  BoundReport report{.name = "stinson",
                     .relation = Relation::GreaterEqual,
                     .statement = "b >= 1 + (2lk - v + k + 1)(v-k)/(l^2+l)"};
  BigInt l(ell);
  report.rhs = rat(1) + Rational((2 * l * k - v + k + 1) * (BigInt(v) - k), l * l + l);
  report.notes.push_back("shift l = " + std::to_string(ell));
  report.notes.push_back("integer bound: b >= " + report.rhs.ceil().str());
  if (b) report.lhs = rat(*b);
  finalize(report);
  return report;
}

long long stinson_best_ell(long long v, long long k) {
  require(k >= 2 && k < v, "stinson_best_ell: need 2 <= k < v");
  return (v - 1) / k;
}

namespace {

struct ShiftedCondition {
  long long ell;
  long long remainder;  // t in mr = n*l + t
  Rational lhs;         // m(m-1)*lambda
  Rational rhs;         // (n-t)l^2 + t(l+1)^2 - mr
};

ShiftedCondition shifted_condition(long long m, long long n, long long r, long long lambda) {
  ShiftedCondition cond;
  cond.ell = m * r / n;
  cond.remainder = m * r - n * cond.ell;
  BigInt l(cond.ell), t(cond.remainder);
  cond.lhs = Rational(BigInt(m) * (m - 1) * lambda);
  cond.rhs = Rational((BigInt(n) - t) * l * l + t * (l + 1) * (l + 1) - BigInt(m) * r);
  return cond;
}

}  // namespace

BoundReport johnson_improved_check(long long m, long long n, long long r, long long lambda) {
  require(lambda >= 0 && r > lambda, "johnson_improved_check: need r > lambda >= 0");
  require(m >= 1 && n >= 1 && r >= 1, "johnson_improved_check: need m, n, r >= 1");
  ShiftedCondition cond = shifted_condition(m, n, r, lambda);
  BoundReport report{.name = "johnson-improved",
                     .relation = Relation::GreaterEqual,
                     .statement = "m(m-1)lambda >= (n-t)l^2 + t(l+1)^2 - mr"};
  report.lhs = cond.lhs;
  report.rhs = cond.rhs;
  report.notes.push_back("l = floor(mr/n) = " + std::to_string(cond.ell) +
                         ", t = mr - n*l = " + std::to_string(cond.remainder));
  finalize(report);
  return report;
}

JohnsonImprovedScan johnson_improved_max_m(long long n, long long r, long long lambda) {
  require(lambda >= 0 && r > lambda, "johnson_improved_max_m: need r > lambda >= 0");
  require(n >= 1, "johnson_improved_max_m: need n >= 1");
  JohnsonImprovedScan scan;

  auto holds = [&](long long m) {
    ShiftedCondition cond = shifted_condition(m, n, r, lambda);
    return cond.lhs >= cond.rhs;
  };

  if (BigInt(r) * r - BigInt(n) * lambda <= 0) {
    // rhs - lhs grows like m^2 (r^2 - n*lambda)/n, so the condition holds
    // for every m and there is no largest one.
    return scan;
  }
  // Past this horizon the condition provably fails:
  // rhs >= (mr-n)^2/n > m^2*lambda >= lhs once m(r - sqrt(n*lambda)) > n,
  // and sqrt(n*lambda) <= n + lambda.
  const long long horizon =
      lambda == 0 ? n / r + 1
                  : static_cast<long long>(BigInt(n) * (r + n + lambda) / (BigInt(r) * r - BigInt(n) * lambda)) + 2;

  long long m = 1;
  long long best = 0;
  while (m <= horizon) {
    if (holds(m)) {
      best = m;
      ++m;
      continue;
    }
    if (!scan.first_failure) scan.first_failure = m;
    // Monotonicity in m is not established; re-check a window past the
    // failure and resume from any m that still satisfies the condition.
    long long resume = 0;
    for (long long w = m + 1; w <= std::min(m + n, horizon); ++w)
      if (holds(w)) {
        resume = w;
        break;
      }
    if (resume == 0) break;
    scan.gap_witnesses.push_back(resume);
    best = resume;
    m = resume + 1;
  }
  scan.max_m = best;
  return scan;
}

Rational two_point_error_bound(long long k, const Rational& eps) {
  require(k >= 1, "two_point_error_bound: need k >= 1");
  if (eps.is_negative() || eps > rat(1))
    throw std::invalid_argument("two_point_error_bound: need 0 <= eps <= 1");
  return eps / (rat(k - 1) * (rat(1) - eps) + rat(1));
}

}  // namespace varbounds
