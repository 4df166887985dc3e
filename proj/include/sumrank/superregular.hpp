// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sumrank/matrix.hpp"
#include "sumrank/report.hpp"

namespace sumrank {

inline constexpr std::uint64_t kDefaultSelectionBudget = 100'000'000;

/// Structural support of a matrix: true where the entry is nonzero.
struct ZeroPattern {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> support;

  ZeroPattern() = default;
  ZeroPattern(std::size_t r, std::size_t c, std::vector<std::uint8_t> s);
  static ZeroPattern of(const Matrix& m);
  bool operator()(std::size_t r, std::size_t c) const { return support[r * cols + c] != 0; }
};

/// Row/column block layout; a selection respects the grid when every
/// diagonal entry (rows[i], cols[i]) falls outside the zero blocks.
struct BlockGrid {
  std::vector<std::size_t> row_block_sizes;
  std::vector<std::size_t> col_block_sizes;
  std::set<std::pair<std::size_t, std::size_t>> zero_blocks;

  /// Zero blocks (s, t) for every s > t.
  static BlockGrid upper_triangular(std::vector<std::size_t> row_sizes,
                                    std::vector<std::size_t> col_sizes);
  /// `levels` blocks of size `row_size` x `col_size`, zero below the diagonal.
  static BlockGrid upper_triangular(std::size_t levels, std::size_t row_size, std::size_t col_size);

  std::size_t total_rows() const;
  std::size_t total_cols() const;
  std::size_t row_block(std::size_t r) const;
  std::size_t col_block(std::size_t c) const;
  bool allows(std::size_t r, std::size_t c) const;
  /// Throws std::invalid_argument if the grid does not tile rows x cols.
  void validate(std::size_t rows, std::size_t cols) const;
  /// Pattern that is nonzero exactly outside the zero blocks.
  ZeroPattern pattern() const;
};

/// True iff every Leibniz term of the selected minor meets a zero, i.e.
/// the selected rows and columns admit no perfect matching on the support.
/// Throws std::invalid_argument for a non-square selection.
bool is_trivial_minor(const ZeroPattern& pattern, const RowColSelection& sel);

/// Number of square selections of every size in a rows x cols matrix,
/// saturating at UINT64_MAX.
std::uint64_t count_square_selections(std::size_t rows, std::size_t cols);

/// Precomputed list of square selections in check order: size ascending,
/// then lexicographic on (rows, cols). Optionally restricted to selections
/// that respect a grid.
class SelectionList {
 public:
  SelectionList(std::size_t rows, std::size_t cols, const BlockGrid* grid = nullptr,
                std::size_t min_size = 1, std::uint64_t budget = kDefaultSelectionBudget);

  bool feasible() const { return feasible_; }
  std::size_t size() const { return sizes_.size(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  RowColSelection at(std::size_t i) const;
  std::size_t size_of(std::size_t i) const { return sizes_[i]; }

  enum class Test {
    nonzero,             // minor != 0
    nonzero_or_trivial,  // minor != 0, or the minor is structurally trivial
    outside_base_field,  // minor not in F_q
  };
  /// Index of the first selection whose minor fails `test`, if any.
  std::optional<std::size_t> find_failure(const Matrix& m, Test test) const;

 private:
  std::size_t rows_, cols_;
  bool feasible_ = true;
  std::vector<std::uint32_t> sizes_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint16_t> row_idx_;
  std::vector<std::uint16_t> col_idx_;
};

/// All non-trivial minors nonzero. The witness is the first failing selection.
VerificationReport is_superregular(const Matrix& m,
                                   std::uint64_t selection_budget = kDefaultSelectionBudget);
/// All minors of every size nonzero.
VerificationReport is_full_superregular(const Matrix& m,
                                        std::uint64_t selection_budget = kDefaultSelectionBudget);
/// Every square submatrix whose diagonal lies inside the grid's nonzero
/// blocks is nonsingular. Throws std::invalid_argument for a grid that
/// does not tile m.
VerificationReport is_superregular_constrained(
    const Matrix& m, const BlockGrid& grid,
    std::uint64_t selection_budget = kDefaultSelectionBudget);

/// Square selections (grid-respecting when a grid is given, of size at
/// least min_size) whose minor is structurally non-trivial.
std::uint64_t count_nontrivial_minors(const ZeroPattern& pattern, const BlockGrid* grid = nullptr,
                                      std::size_t min_size = 1);

}  // namespace sumrank
