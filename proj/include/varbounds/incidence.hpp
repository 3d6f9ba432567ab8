#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace varbounds {

/// A point set over [0, v) together with an ordered multiset of blocks.
/// Blocks are stored as fixed-width bitsets so intersection counts cost
/// O(v/64). Duplicate blocks are allowed; empty blocks are not.
/// Immutable after construction.
class IncidenceStructure {
public:
  IncidenceStructure(int num_points, const std::vector<std::vector<int>>& blocks);

  int num_points() const { return num_points_; }
  int num_blocks() const { return static_cast<int>(sizes_.size()); }
  int block_size(int block) const { return sizes_.at(block); }
  std::vector<int> block_points(int block) const;
  bool block_contains(int block, int point) const;

  /// Number of blocks containing both x and y (x != y).
  long long pair_count(int x, int y) const;
  /// Number of blocks containing the point.
  long long replication(int point) const;
  /// |A_i intersect A_j|.
  long long intersection_count(int i, int j) const;

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.num_points_ == b.num_points_ && a.bits_ == b.bits_;
  }

private:
  const std::uint64_t* row(int block) const { return bits_.data() + static_cast<std::size_t>(block) * words_; }
  void check_block_index(int block) const;

  int num_points_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<int> sizes_;
};

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::string family;
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

struct BibdParams {
  long long v = 0, b = 0, r = 0, k = 0, lambda = 0;
};

/// Violations of the BIBD parameter identities vr = bk and
/// lambda(v-1) = r(k-1), plus range checks (2 <= k <= v, positivity).
std::vector<Violation> bibd_identity_violations(const BibdParams& p);

ValidationReport validate_bibd(const IncidenceStructure& inc, const BibdParams& p);

/// Every block of size >= 2 and every pair of points in exactly one block.
ValidationReport validate_pbd(const IncidenceStructure& inc);

struct RLambdaParams {
  long long v = 0, b = 0, r = 0, lambda = 0;
};

/// Every point in exactly r blocks, every pair in exactly lambda blocks;
/// blocks of size 1 are tolerated.
ValidationReport validate_r_lambda(const IncidenceStructure& inc, const RLambdaParams& p);

/// lambda*n^2 rows over k columns with entries in [0, n); within every
/// column pair, each ordered symbol pair occurs in exactly lambda rows.
struct OrthogonalArray {
  int k = 0;
  int n = 0;
  long long lambda = 0;
  std::vector<std::vector<int>> rows;
};

ValidationReport validate_oa(const OrthogonalArray& oa);

/// Binary code of length n <= 64, codewords stored as bitmasks.
struct BinaryCode {
  int n = 0;
  std::vector<std::uint64_t> codewords;

  static BinaryCode from_vectors(int n, const std::vector<std::vector<int>>& rows);
};

struct ConstantWeightStats {
  long long weight = 0;
  std::optional<long long> min_distance;      // absent when fewer than two codewords
  std::optional<long long> max_inner_product; // likewise
};

/// Common weight, minimum pairwise Hamming distance and maximum pairwise
/// inner product. Throws if codeword weights are mixed.
ConstantWeightStats constant_weight_stats(const BinaryCode& code);

struct BlockDeletion {
  IncidenceStructure structure;
  int empty_blocks_dropped = 0;
};

/// Removes block `block` and deletes its points from every other block,
/// relabelling the surviving points contiguously. Blocks that become empty
/// are dropped and counted.
BlockDeletion delete_block(const IncidenceStructure& inc, int block);

/// |A_i intersect A_block| for every i != block, in block order.
std::vector<long long> intersection_profile(const IncidenceStructure& inc, int block);

/// Intersects every block with `points` and relabels; empty intersections
/// are dropped. (The truncation step used to induce a design on a subset.)
IncidenceStructure restrict_to(const IncidenceStructure& inc, const std::vector<int>& points);

}  // namespace varbounds
