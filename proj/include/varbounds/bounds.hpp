#pragma once

#include <optional>
#include <string>
#include <vector>

#include "varbounds/incidence.hpp"
#include "varbounds/rational.hpp"

namespace varbounds {

enum class Relation { GreaterEqual, LessEqual };

/// Outcome of evaluating one named inequality. `rhs` is always the exact
/// bound value. `lhs` (and with it satisfied/equality/slack) is present
/// only when the bounded quantity was supplied; several bounds can be
/// stated from parameters alone. Slack is oriented so that >= 0 means
/// satisfied, regardless of the relation's direction.
struct BoundReport {
  std::string name;
  Relation relation = Relation::GreaterEqual;
  std::string statement;
  bool applicable = true;
  std::optional<Rational> lhs;
  Rational rhs;
  std::optional<bool> satisfied;
  std::optional<bool> equality;
  std::optional<Rational> slack;
  std::vector<std::string> notes;
};

/// b >= v for a BIBD; notes carry the factorized certificate
/// (r-k)(v-k)(r-lambda). Throws on parameter-identity violations.
BoundReport fisher(const BibdParams& p);

/// b >= s*v when some block occurs with multiplicity s.
BoundReport mann(const BibdParams& p, long long multiplicity);

/// lambda >= (k(n-1)+1)/n^2 for an OA_lambda(k,n).
BoundReport plackett_burman(long long k, long long n, long long lambda);

/// lambda >= m(k(n-1)+1)/n^2 when a row is repeated m times.
BoundReport oa_repeated_row(long long k, long long n, long long lambda, long long m);

/// m <= n(r-lambda)/(r^2 - n*lambda) for 0-1 matrices with constant row
/// weight r and pairwise inner product <= lambda; inapplicable when
/// r^2 - n*lambda <= 0.
BoundReport johnson_matrix(long long m, long long n, long long r, long long lambda);

/// |C| <= n*delta/(r^2 - n(r-delta)) for an [n,r,2*delta] constant-weight
/// code; inapplicable when the denominator is <= 0. Supply the code size
/// to get a satisfied/equality verdict.
BoundReport johnson_code(long long n, long long r, long long delta,
                         std::optional<long long> code_size = {});

/// b >= 1 + k^2(v-k)/(v-1) for a PBD with a block of size k.
BoundReport stanton_kalbfleisch(long long v, long long k, std::optional<long long> b = {});

/// The Stanton-Kalbfleisch implied lower bound on b - v, returned through
/// the factorization -(v-(k+1))(v-(k^2-k+1))/(v-1); both algebraic routes
/// are evaluated and must agree. Nonnegative for k+1 <= v <= k^2-k+1,
/// certifying b >= v.
Rational erdos_de_bruijn_slack(long long v, long long k);

/// b >= r^2 v/(r + lambda(v-1)) for an (r,lambda)-design.
BoundReport mullin_vanstone(long long v, long long r, long long lambda,
                            std::optional<long long> b = {});

struct PlaneNonincidence {
  long long q = 0;  // plane order
  long long s = 0;  // chosen points
  std::optional<long long> t;  // lines disjoint from all chosen points, when known
};

/// t <= (q^3+q^2+q-qs)/(q+s) for s points in a projective plane of order q.
BoundReport nonincident_lines_bound(const PlaneNonincidence& p);

struct WestBoundDetail {
  Rational value;                      // largest s consistent with s = t
  bool q_is_square = false;
  std::optional<Rational> closed_form; // 1 + (q+1)(sqrt(q)-1), square q only
};

/// Largest s for which s = t is consistent with the nonincidence bound.
/// Found by exhaustive integer search; for perfect-square q this equals
/// the closed form 1 + (q+1)(sqrt(q)-1) exactly.
Rational west_diagonal_bound(long long q);
WestBoundDetail west_diagonal_bound_detail(long long q);

/// b >= 1 + (2lk - v + k + 1)(v-k)/(l^2+l) for any integer l with
/// l^2 + l != 0.
BoundReport stinson_bound(long long v, long long k, long long ell,
                          std::optional<long long> b = {});

/// floor((v-1)/k): the shift giving the strongest Stinson bound.
long long stinson_best_ell(long long v, long long k);

/// Necessary condition m(m-1)lambda >= (n-t)l^2 + t(l+1)^2 - mr with
/// l = floor(mr/n), t = mr - n*l.
BoundReport johnson_improved_check(long long m, long long n, long long r, long long lambda);

/// Result of scanning for the largest m passing johnson_improved_check.
/// max_m is absent when the condition holds for every m (r^2 <= n*lambda).
/// Because monotonicity in m is not established, a window past the first
/// failure is re-checked; any satisfying m found there is a gap witness
/// and the scan resumes from it.
struct JohnsonImprovedScan {
  std::optional<long long> max_m;
  std::optional<long long> first_failure;
  std::vector<long long> gap_witnesses;
};

JohnsonImprovedScan johnson_improved_max_m(long long n, long long r, long long lambda);

/// eps/((k-1)(1-eps)+1): the two-point sampling failure bound.
Rational two_point_error_bound(long long k, const Rational& eps);

}  // namespace varbounds
