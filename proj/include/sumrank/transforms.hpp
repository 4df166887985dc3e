// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sumrank/matrix.hpp"
#include "sumrank/report.hpp"
#include "sumrank/superregular.hpp"

namespace sumrank {

enum class CheckMode {
  /// Enumerate every additive block C.
  exact,
  /// Screen B X A first. A tuple with no selected minor in F_q is only
  /// re-checked on sampled C choices (and exactly when its C space is at
  /// most exact_limit). Tuples that fail the screen are enumerated exactly.
  /// Heuristic: a sampled pass is not a proof.
  filter,
};

const char* to_string(CheckMode m);

struct CheckOptions {
  CheckMode mode = CheckMode::exact;
  /// Cap on exhaustive work: transform tuples times C choices.
  std::uint64_t budget = std::uint64_t{1} << 24;
  std::uint64_t selection_budget = kDefaultSelectionBudget;
  /// Random C choices re-checked per filter-passing tuple.
  std::uint32_t samples = 1000;
  /// In filter mode, tuples whose C space is at most this large are also
  /// enumerated exactly.
  std::uint64_t exact_limit = 4096;
  /// 0 picks the hardware concurrency.
  unsigned workers = 1;
  std::uint64_t seed = 0x5eed5eedULL;
};

/// Block structure of a transformed matrix B X A + C. B is block-diagonal
/// with nonsingular upper triangular blocks of the row sizes, A likewise
/// with the column sizes, and C carries an arbitrary F_q block of size
/// row_blocks[i] x col_blocks[i] at diagonal position (i, i).
struct TransformLayout {
  std::vector<std::size_t> row_blocks;
  std::vector<std::size_t> col_blocks;

  std::size_t rows() const;
  std::size_t cols() const;
  /// Entries in the C blocks.
  std::size_t c_entries() const;
};

/// diag(U_1, ..., U_l) with U_i ranging over the nonsingular upper
/// triangular matrices of the given sizes over F_q. Block 0 is the most
/// significant index digit. Size-0 blocks contribute nothing.
class BlockUpperTriangularEnum {
 public:
  BlockUpperTriangularEnum(const std::vector<std::size_t>& sizes, FieldPtr base);
  /// Saturates at UINT64_MAX.
  std::uint64_t count() const { return count_; }
  Matrix at(std::uint64_t index) const;

 private:
  FieldPtr base_;
  std::vector<UpperTriangularEnum> parts_;
  std::uint64_t count_ = 1;
};

/// Checks every B X A + C for superregularity (grid == nullptr: every
/// minor nonzero; otherwise every grid-respecting minor nonzero).
///
/// Tuples are scanned in index order (B outer, A inner), so the witness is
/// the lowest failing tuple whatever the worker count. The report carries
/// counters: b_tuples, a_tuples, c_space, filter_pass, filter_fail,
/// sampled, exact, filter_disagreements.
VerificationReport check_transformed(const Matrix& x, const TransformLayout& layout,
                                     const BlockGrid* grid, const CheckOptions& options,
                                     const std::string& kind);

/// F_q-matrix whose C blocks hold the base-q digits of `index`, block by
/// block in row-major order.
Matrix c_matrix_at(const FieldPtr& base, const TransformLayout& layout, std::uint64_t index);

/// Calls fn(i) for i in [0, count) over `workers` threads, in increasing
/// order per thread. fn returns true on failure; indices above the lowest
/// failure seen so far are skipped. Returns the lowest failing index or
/// count if none failed.
std::uint64_t lowest_failure(std::uint64_t count, unsigned workers,
                             const std::function<bool(std::uint64_t)>& fn);

}  // namespace sumrank
