// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumrank/encoder.hpp"
#include "sumrank/field.hpp"
#include "sumrank/matrix.hpp"

namespace sumrank {

inline constexpr std::uint64_t kDefaultMessageBudget = std::uint64_t{1} << 24;

/// n = n_1 + ... + n_l with every part >= 1.
class LengthPartition {
 public:
  explicit LengthPartition(std::vector<std::size_t> parts);
  /// One block of length n (rank metric).
  static LengthPartition single(std::size_t n);
  /// n blocks of length 1 (Hamming metric).
  static LengthPartition hamming(std::size_t n);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t blocks() const { return parts_.size(); }
  std::size_t total() const { return total_; }
  bool equal_parts() const;

  bool operator==(const LengthPartition&) const = default;

 private:
  std::vector<std::size_t> parts_;
  std::size_t total_ = 0;
};

struct SumRankProfile {
  std::vector<std::size_t> per_block_ranks;
  std::size_t total = 0;
};

/// M x n matrix over F_q; column i holds the polynomial-basis coordinates
/// of v_i.
Matrix expand(const FieldPtr& field, std::span<const Elem> v);
/// F_q-rank of expand(v), without materializing it.
std::size_t base_rank(const Field& field, std::span<const Elem> v);
std::size_t hamming_weight(std::span<const Elem> v);

/// Throws std::invalid_argument if the partition does not cover v.
SumRankProfile sum_rank_weight(const Field& field, std::span<const Elem> v,
                               const LengthPartition& partition);
std::size_t sum_rank_distance(const Field& field, std::span<const Elem> u,
                              std::span<const Elem> w, const LengthPartition& partition);

/// Outcome of an exhaustive distance computation.
struct DistanceResult {
  bool feasible = true;
  std::size_t distance = 0;
  /// A message attaining the minimum.
  std::vector<Elem> message;
  /// Messages (or message blocks, for column distances) evaluated.
  std::uint64_t enumerated = 0;
  std::string note;
};

/// Minimum sum-rank weight of the nonzero codewords u * G. Messages are
/// normalized (first nonzero coordinate 1), which leaves every block rank
/// unchanged; the budget caps the normalized message count.
DistanceResult min_sum_rank_distance(const Matrix& generator, const LengthPartition& partition,
                                     std::uint64_t budget = kDefaultMessageBudget,
                                     unsigned workers = 1);

/// j-th column sum-rank distance: minimum of sum_i rank(v_i) over truncated
/// codewords v_[0,j] = u_[0,j] G_j^c with u_0 != 0, each length-n block
/// carrying the rank metric.
///
/// Depth-first over time blocks. u_0 is normalized and a branch is dropped
/// as soon as its running sum reaches the best weight found so far. The
/// budget caps evaluated blocks.
DistanceResult column_sum_rank_distance(const PolyEncoder& encoder, std::size_t j,
                                        std::uint64_t budget = kDefaultMessageBudget,
                                        unsigned workers = 1);

struct SingletonBounds {
  double refined_rank = 0;
  /// Only defined for equal parts.
  std::optional<double> refined_sum_rank;
  std::size_t classical = 0;
};

/// min{1, M/n}(n-k)+1, min{1, lM/n}(n-k)+1 and n-k+1.
SingletonBounds singleton_bounds(std::size_t n, std::size_t k, std::size_t degree,
                                 const LengthPartition& partition);
/// Throws std::invalid_argument for unequal parts.
double refined_sum_rank_bound(std::size_t n, std::size_t k, std::size_t degree,
                              const LengthPartition& partition);

/// (j+1)(n-k)+1.
std::size_t column_distance_bound(std::size_t n, std::size_t k, std::size_t j);
/// (n-k)(m+1)+1, the largest free distance of a systematic memory-m encoder.
std::size_t free_distance_bound(std::size_t n, std::size_t k, std::size_t m);

}  // namespace sumrank
