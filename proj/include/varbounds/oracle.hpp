#pragma once

#include <vector>

#include "varbounds/incidence.hpp"

namespace varbounds {

/// Caps for the backtracking searches. Exceeding a cap is reported as an
/// explicit status; results are never silently truncated.
struct SearchBudget {
  long long max_nodes = 10'000'000;
  long long max_solutions = 1'000'000;
};

enum class SearchStatus { Complete, NodeBudgetExhausted, SolutionCapReached };

struct DesignSearchResult {
  SearchStatus status = SearchStatus::Complete;
  long long nodes = 0;
  std::vector<IncidenceStructure> designs;
};

struct CliqueSearchResult {
  SearchStatus status = SearchStatus::Complete;
  long long nodes = 0;
  long long size = 0;  // exact maximum when status == Complete
};

bool is_prime(long long n);

/// The 7-point projective plane: PG(2,2).
IncidenceStructure fano_plane();

/// One block of size v-1 plus v-1 blocks of size 2 through the last point.
IncidenceStructure near_pencil(int v);

/// PG(2,q) for prime q, plus q = 4 via hard-coded GF(4) tables:
/// q^2+q+1 points and lines, lines of size q+1, every pair on one line.
IncidenceStructure projective_plane(int q);

/// A 6-point hyperoval in projective_plane(4) (conic plus nucleus):
/// every line meets it in 0 or 2 points; exactly 6 lines miss it.
/// Indices refer to projective_plane(4).
struct HyperovalPg24 {
  std::vector<int> points;
  std::vector<int> external_lines;
};

HyperovalPg24 hyperoval_pg24();

/// OA_1(k,p) for prime p and 2 <= k <= p: row (a,b) at index a*p+b has
/// entries (a*j + b) mod p for columns j = 0..k-1.
OrthogonalArray oa_linear(int p, int k);

/// All (v,b,r,k,lambda)-BIBD block multisets (labelled; no isomorph
/// rejection), generated deterministically: candidate blocks in colex
/// order, each new block covers the first deficient pair, blocks covering
/// the same pair chosen in nondecreasing order. Desk scale: v <= 13.
DesignSearchResult enumerate_bibds(int v, int k, long long lambda, const SearchBudget& budget);

/// All PBDs on v points with at most max_b blocks containing at least one
/// block of size exactly k. Desk scale: v <= 10.
DesignSearchResult enumerate_pbds_with_block(int v, int k, int max_b, const SearchBudget& budget);

/// Exact maximum number of weight-r length-n binary words with pairwise
/// Hamming distance >= d, by branch-and-bound over the C(n,r) candidates.
/// Desk scale: n <= 12.
CliqueSearchResult max_constant_weight_code(int n, int r, int d, const SearchBudget& budget);

}  // namespace varbounds
