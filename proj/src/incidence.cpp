#include "varbounds/incidence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace varbounds {

namespace {

std::string fmt_pair(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

IncidenceStructure::IncidenceStructure(int num_points,
                                       const std::vector<std::vector<int>>& blocks)
    : num_points_(num_points) {
  if (num_points < 0) throw std::invalid_argument("IncidenceStructure: negative point count");
  words_ = num_points == 0 ? 1 : (num_points + 63) / 64;
  bits_.assign(static_cast<std::size_t>(words_) * blocks.size(), 0);
  sizes_.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty())
      throw std::invalid_argument("IncidenceStructure: empty block at index " + std::to_string(i));
    std::uint64_t* w = bits_.data() + i * words_;
    int size = 0;
    for (int p : blocks[i]) {
      if (p < 0 || p >= num_points_)
        throw std::out_of_range("IncidenceStructure: point " + std::to_string(p) +
                                " out of range [0," + std::to_string(num_points_) + ")");
      std::uint64_t bit = std::uint64_t{1} << (p % 64);
      if (!(w[p / 64] & bit)) {
        w[p / 64] |= bit;
        ++size;
      }
    }
    sizes_.push_back(size);
  }
}

void IncidenceStructure::check_block_index(int block) const {
  if (block < 0 || block >= num_blocks())
    throw std::out_of_range("block index " + std::to_string(block) + " out of range");
}

std::vector<int> IncidenceStructure::block_points(int block) const {
  check_block_index(block);
  std::vector<int> pts;
  pts.reserve(sizes_[block]);
  const std::uint64_t* w = row(block);
  for (int p = 0; p < num_points_; ++p)
    if (w[p / 64] >> (p % 64) & 1) pts.push_back(p);
  return pts;
}

bool IncidenceStructure::block_contains(int block, int point) const {
  check_block_index(block);
  if (point < 0 || point >= num_points_) throw std::out_of_range("point out of range");
  return row(block)[point / 64] >> (point % 64) & 1;
}

long long IncidenceStructure::pair_count(int x, int y) const {
  if (x < 0 || x >= num_points_ || y < 0 || y >= num_points_)
    throw std::out_of_range("point out of range");
  if (x == y) throw std::invalid_argument("pair_count: points must be distinct");
  long long count = 0;
  for (int i = 0; i < num_blocks(); ++i) {
    const std::uint64_t* w = row(i);
    if ((w[x / 64] >> (x % 64) & 1) && (w[y / 64] >> (y % 64) & 1)) ++count;
  }
  return count;
}

long long IncidenceStructure::replication(int point) const {
  if (point < 0 || point >= num_points_) throw std::out_of_range("point out of range");
  long long count = 0;
  for (int i = 0; i < num_blocks(); ++i)
    if (row(i)[point / 64] >> (point % 64) & 1) ++count;
  return count;
}

long long IncidenceStructure::intersection_count(int i, int j) const {
  check_block_index(i);
  check_block_index(j);
  const std::uint64_t* a = row(i);
  const std::uint64_t* b = row(j);
  long long count = 0;
  for (int w = 0; w < words_; ++w) count += std::popcount(a[w] & b[w]);
  return count;
}

std::vector<Violation> bibd_identity_violations(const BibdParams& p) {
  std::vector<Violation> out;
  if (p.v < 1 || p.b < 1 || p.r < 1 || p.k < 1 || p.lambda < 1)
    out.push_back({"param-range", "all of v,b,r,k,lambda must be positive"});
  if (p.k < 2 || p.k > p.v)
    out.push_back({"param-range", "need 2 <= k <= v, got k=" + std::to_string(p.k) +
                                      ", v=" + std::to_string(p.v)});
  if (p.v * p.r != p.b * p.k)
    out.push_back({"identity-vr-bk", "vr = " + std::to_string(p.v * p.r) +
                                         " but bk = " + std::to_string(p.b * p.k)});
  if (p.lambda * (p.v - 1) != p.r * (p.k - 1))
    out.push_back({"identity-pair", "lambda(v-1) = " + std::to_string(p.lambda * (p.v - 1)) +
                                        " but r(k-1) = " + std::to_string(p.r * (p.k - 1))});
  return out;
}

ValidationReport validate_bibd(const IncidenceStructure& inc, const BibdParams& p) {
  ValidationReport report{"bibd", bibd_identity_violations(p)};
  if (inc.num_points() != p.v)
    report.violations.push_back({"points-mismatch",
                                 "structure has " + std::to_string(inc.num_points()) +
                                     " points, parameters say v=" + std::to_string(p.v)});
  if (inc.num_blocks() != p.b)
    report.violations.push_back({"blocks-mismatch",
                                 "structure has " + std::to_string(inc.num_blocks()) +
                                     " blocks, parameters say b=" + std::to_string(p.b)});
  for (int i = 0; i < inc.num_blocks(); ++i)
    if (inc.block_size(i) != p.k)
      report.violations.push_back({"block-size", "block " + std::to_string(i) + " has size " +
                                                     std::to_string(inc.block_size(i)) +
                                                     ", expected k=" + std::to_string(p.k)});
  for (int x = 0; x < inc.num_points(); ++x) {
    long long rep = inc.replication(x);
    if (rep != p.r)
      report.violations.push_back({"replication", "point " + std::to_string(x) + " occurs in " +
                                                      std::to_string(rep) + " blocks, expected r=" +
                                                      std::to_string(p.r)});
  }
  for (int x = 0; x < inc.num_points(); ++x)
    for (int y = x + 1; y < inc.num_points(); ++y) {
      long long c = inc.pair_count(x, y);
      if (c != p.lambda)
        report.violations.push_back({"pair-count", "pair " + fmt_pair(x, y) + " covered " +
                                                       std::to_string(c) + " times, expected lambda=" +
                                                       std::to_string(p.lambda)});
    }
  return report;
}

ValidationReport validate_pbd(const IncidenceStructure& inc) {
  ValidationReport report{"pbd", {}};
  for (int i = 0; i < inc.num_blocks(); ++i)
    if (inc.block_size(i) < 2)
      report.violations.push_back({"block-size", "block " + std::to_string(i) + " has size " +
                                                     std::to_string(inc.block_size(i)) +
                                                     ", PBD blocks need size >= 2"});
  for (int x = 0; x < inc.num_points(); ++x)
    for (int y = x + 1; y < inc.num_points(); ++y) {
      long long c = inc.pair_count(x, y);
      if (c != 1)
        report.violations.push_back({"pair-count", "pair " + fmt_pair(x, y) + " covered " +
                                                       std::to_string(c) + " times, expected 1"});
    }
  return report;
}

ValidationReport validate_r_lambda(const IncidenceStructure& inc, const RLambdaParams& p) {
  ValidationReport report{"rlambda", {}};
  if (inc.num_points() != p.v)
    report.violations.push_back({"points-mismatch",
                                 "structure has " + std::to_string(inc.num_points()) +
                                     " points, parameters say v=" + std::to_string(p.v)});
  if (inc.num_blocks() != p.b)
    report.violations.push_back({"blocks-mismatch",
                                 "structure has " + std::to_string(inc.num_blocks()) +
                                     " blocks, parameters say b=" + std::to_string(p.b)});
  for (int x = 0; x < inc.num_points(); ++x) {
    long long rep = inc.replication(x);
    if (rep != p.r)
      report.violations.push_back({"replication", "point " + std::to_string(x) + " occurs in " +
                                                      std::to_string(rep) + " blocks, expected r=" +
                                                      std::to_string(p.r)});
  }
  for (int x = 0; x < inc.num_points(); ++x)
    for (int y = x + 1; y < inc.num_points(); ++y) {
      long long c = inc.pair_count(x, y);
      if (c != p.lambda)
        report.violations.push_back({"pair-count", "pair " + fmt_pair(x, y) + " covered " +
                                                       std::to_string(c) + " times, expected lambda=" +
                                                       std::to_string(p.lambda)});
    }
  return report;
}

ValidationReport validate_oa(const OrthogonalArray& oa) {
  ValidationReport report{"oa", {}};
  if (oa.k < 2) report.violations.push_back({"param-range", "need k >= 2 columns"});
  if (oa.n < 2) report.violations.push_back({"param-range", "need alphabet size n >= 2"});
  if (oa.lambda < 1) report.violations.push_back({"param-range", "need index lambda >= 1"});
  if (!report.violations.empty()) return report;

  const long long expected_rows = oa.lambda * static_cast<long long>(oa.n) * oa.n;
  if (static_cast<long long>(oa.rows.size()) != expected_rows) {
    report.violations.push_back({"row-count", "array has " + std::to_string(oa.rows.size()) +
                                                  " rows, expected lambda*n^2 = " +
                                                  std::to_string(expected_rows)});
    return report;
  }
  for (std::size_t i = 0; i < oa.rows.size(); ++i) {
    if (static_cast<int>(oa.rows[i].size()) != oa.k)
      throw std::invalid_argument("validate_oa: row " + std::to_string(i) + " has wrong width");
    for (int s : oa.rows[i])
      if (s < 0 || s >= oa.n)
        throw std::out_of_range("validate_oa: symbol " + std::to_string(s) + " in row " +
                                std::to_string(i) + " out of range [0," + std::to_string(oa.n) + ")");
  }

  std::vector<long long> counts(static_cast<std::size_t>(oa.n) * oa.n);
  for (int c1 = 0; c1 < oa.k; ++c1)
    for (int c2 = c1 + 1; c2 < oa.k; ++c2) {
      std::fill(counts.begin(), counts.end(), 0);
      for (const auto& r : oa.rows) ++counts[static_cast<std::size_t>(r[c1]) * oa.n + r[c2]];
      for (int s1 = 0; s1 < oa.n; ++s1)
        for (int s2 = 0; s2 < oa.n; ++s2) {
          long long c = counts[static_cast<std::size_t>(s1) * oa.n + s2];
          if (c != oa.lambda)
            report.violations.push_back(
                {"ordered-pair", "columns (" + std::to_string(c1) + "," + std::to_string(c2) +
                                     "): symbol pair (" + std::to_string(s1) + "," +
                                     std::to_string(s2) + ") occurs " + std::to_string(c) +
                                     " times, expected lambda=" + std::to_string(oa.lambda)});
        }
    }
  return report;
}

BinaryCode BinaryCode::from_vectors(int n, const std::vector<std::vector<int>>& rows) {
  if (n < 1 || n > 64) throw std::invalid_argument("BinaryCode: length must be in [1,64]");
  BinaryCode code;
  code.n = n;
  code.codewords.reserve(rows.size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw std::invalid_argument("BinaryCode: wrong codeword length");
    std::uint64_t w = 0;
    for (int i = 0; i < n; ++i) {
      if (r[i] != 0 && r[i] != 1) throw std::invalid_argument("BinaryCode: entries must be 0/1");
      if (r[i]) w |= std::uint64_t{1} << i;
    }
    code.codewords.push_back(w);
  }
  return code;
}

ConstantWeightStats constant_weight_stats(const BinaryCode& code) {
  if (code.codewords.empty())
    throw std::invalid_argument("constant_weight_stats: need at least one codeword");
  ConstantWeightStats stats;
  stats.weight = std::popcount(code.codewords.front());
  for (std::uint64_t w : code.codewords)
    if (std::popcount(w) != stats.weight)
      throw std::invalid_argument("constant_weight_stats: mixed codeword weights");

  const std::size_t m = code.codewords.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      long long dist = std::popcount(code.codewords[i] ^ code.codewords[j]);
      long long ip = std::popcount(code.codewords[i] & code.codewords[j]);
      if (!stats.min_distance || dist < *stats.min_distance) stats.min_distance = dist;
      if (!stats.max_inner_product || ip > *stats.max_inner_product) stats.max_inner_product = ip;
    }
  // For constant weight, distance and inner product are tied: d = 2(r - ip).
  if (stats.min_distance && *stats.min_distance != 2 * (stats.weight - *stats.max_inner_product))
    throw std::logic_error("constant_weight_stats: d = 2(r - lambda) identity failed");
  return stats;
}

BlockDeletion delete_block(const IncidenceStructure& inc, int block) {
  if (block < 0 || block >= inc.num_blocks())
    throw std::out_of_range("delete_block: block index out of range");
  std::vector<int> deleted = inc.block_points(block);
  std::vector<int> relabel(inc.num_points(), -1);
  int next = 0;
  {
    std::vector<bool> gone(inc.num_points(), false);
    for (int p : deleted) gone[p] = true;
    for (int p = 0; p < inc.num_points(); ++p)
      if (!gone[p]) relabel[p] = next++;
  }
  std::vector<std::vector<int>> blocks;
  int dropped = 0;
  for (int i = 0; i < inc.num_blocks(); ++i) {
    if (i == block) continue;
    std::vector<int> kept;
    for (int p : inc.block_points(i))
      if (relabel[p] >= 0) kept.push_back(relabel[p]);
    if (kept.empty())
      ++dropped;
    else
      blocks.push_back(std::move(kept));
  }
  return BlockDeletion{IncidenceStructure(next, blocks), dropped};
}

std::vector<long long> intersection_profile(const IncidenceStructure& inc, int block) {
  if (block < 0 || block >= inc.num_blocks())
    throw std::out_of_range("intersection_profile: block index out of range");
  std::vector<long long> profile;
  profile.reserve(inc.num_blocks() - 1);
  for (int i = 0; i < inc.num_blocks(); ++i)
    if (i != block) profile.push_back(inc.intersection_count(i, block));
  return profile;
}

IncidenceStructure restrict_to(const IncidenceStructure& inc, const std::vector<int>& points) {
  std::vector<int> relabel(inc.num_points(), -1);
  int next = 0;
  for (int p : points) {
    if (p < 0 || p >= inc.num_points()) throw std::out_of_range("restrict_to: point out of range");
    if (relabel[p] < 0) relabel[p] = next++;
  }
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < inc.num_blocks(); ++i) {
    std::vector<int> kept;
    for (int p : inc.block_points(i))
      if (relabel[p] >= 0) kept.push_back(relabel[p]);
    if (!kept.empty()) {
      std::sort(kept.begin(), kept.end());
      blocks.push_back(std::move(kept));
    }
  }
  return IncidenceStructure(next, blocks);
}

}  // namespace varbounds
