// SPDX-License-Identifier: Apache-2.0
#include "sumrank/superregular.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sumrank {

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / (n - k + i))
      return std::numeric_limits<std::uint64_t>::max();
    r = r * (n - k + i) / i;
  }
  return r;
}

// Kuhn's augmenting-path matching between selected rows and columns.
bool try_augment(const ZeroPattern& p, const RowColSelection& sel, std::size_t i,
                 std::vector<int>& col_owner, std::vector<char>& seen) {
  for (std::size_t j = 0; j < sel.cols.size(); ++j) {
    if (seen[j] || !p(sel.rows[i], sel.cols[j])) continue;
    seen[j] = 1;
    if (col_owner[j] < 0 ||
        try_augment(p, sel, static_cast<std::size_t>(col_owner[j]), col_owner, seen)) {
      col_owner[j] = static_cast<int>(i);
      return true;
    }
  }
  return false;
}

bool has_perfect_matching(const ZeroPattern& p, const RowColSelection& sel) {
  std::vector<int> col_owner(sel.cols.size(), -1);
  std::vector<char> seen(sel.cols.size());
  for (std::size_t i = 0; i < sel.rows.size(); ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    if (!try_augment(p, sel, i, col_owner, seen)) return false;
  }
  return true;
}

// Streams square selections in check order. `visit` returns false to stop.
template <class Visit>
void walk_selections(std::size_t rows, std::size_t cols, const BlockGrid* grid,
                     std::size_t min_size, Visit&& visit) {
  const std::size_t max_size = std::min(rows, cols);
  RowColSelection sel;
  bool stop = false;

  // Column positions for fixed rows, respecting the grid on the diagonal.
  auto choose_cols = [&](auto&& self, std::size_t i, std::size_t s) -> void {
    if (stop) return;
    if (i == s) {
      if (!visit(sel)) stop = true;
      return;
    }
    const std::size_t start = i == 0 ? 0 : sel.cols[i - 1] + 1;
    for (std::size_t c = start; c + (s - i) <= cols && !stop; ++c) {
      if (grid && !grid->allows(sel.rows[i], c)) continue;
      sel.cols[i] = c;
      self(self, i + 1, s);
    }
  };
  auto choose_rows = [&](auto&& self, std::size_t i, std::size_t s) -> void {
    if (stop) return;
    if (i == s) {
      choose_cols(choose_cols, 0, s);
      return;
    }
    const std::size_t start = i == 0 ? 0 : sel.rows[i - 1] + 1;
    for (std::size_t r = start; r + (s - i) <= rows && !stop; ++r) {
      sel.rows[i] = r;
      self(self, i + 1, s);
    }
  };
  for (std::size_t s = std::max<std::size_t>(min_size, 1); s <= max_size && !stop; ++s) {
    sel.rows.assign(s, 0);
    sel.cols.assign(s, 0);
    choose_rows(choose_rows, 0, s);
  }
}

Elem selected_minor(const Matrix& m, const RowColSelection& sel, std::vector<Elem>& scratch) {
  const std::size_t n = sel.size();
  scratch.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scratch[i * n + j] = m(sel.rows[i], sel.cols[j]);
  return det_in_place(*m.field(), scratch, n);
}

// Exact number of selections the walker would produce, or nullopt once it
// exceeds budget.
std::optional<std::uint64_t> bounded_count(std::size_t rows, std::size_t cols,
                                           const BlockGrid* grid, std::uint64_t budget) {
  if (!grid) {
    const std::uint64_t total = count_square_selections(rows, cols);
    if (total > budget) return std::nullopt;
    return total;
  }
  std::uint64_t n = 0;
  bool over = false;
  walk_selections(rows, cols, grid, 1, [&](const RowColSelection&) {
    if (++n > budget) {
      over = true;
      return false;
    }
    return true;
  });
  if (over) return std::nullopt;
  return n;
}

VerificationReport scan(const Matrix& m, const BlockGrid* grid, bool excuse_trivial,
                        std::uint64_t budget, const char* method) {
  VerificationReport report;
  ReportTimer timer(report);
  report.method = method;
  if (!bounded_count(m.rows(), m.cols(), grid, budget)) {
    report.verdict = Verdict::infeasible;
    report.note = "square selections exceed budget of " + std::to_string(budget);
    return report;
  }
  std::optional<ZeroPattern> pattern;
  std::vector<Elem> scratch;
  walk_selections(m.rows(), m.cols(), grid, 1, [&](const RowColSelection& sel) {
    ++report.checked_count;
    if (selected_minor(m, sel, scratch) != 0) return true;
    if (excuse_trivial) {
      if (!pattern) pattern = ZeroPattern::of(m);
      if (is_trivial_minor(*pattern, sel)) return true;
    }
    report.verdict = Verdict::no;
    Witness w;
    w.kind = "minor";
    w.subject = m;
    w.selection = sel;
    report.witness = std::move(w);
    return false;
  });
  report.counters["selections"] = report.checked_count;
  return report;
}

}  // namespace

ZeroPattern::ZeroPattern(std::size_t r, std::size_t c, std::vector<std::uint8_t> s)
    : rows(r), cols(c), support(std::move(s)) {
  if (support.size() != rows * cols) throw std::invalid_argument("pattern size mismatch");
}

ZeroPattern ZeroPattern::of(const Matrix& m) {
  std::vector<std::uint8_t> s(m.rows() * m.cols());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = m.data()[i] != 0;
  return ZeroPattern(m.rows(), m.cols(), std::move(s));
}

BlockGrid BlockGrid::upper_triangular(std::vector<std::size_t> row_sizes,
                                      std::vector<std::size_t> col_sizes) {
  BlockGrid g;
  g.row_block_sizes = std::move(row_sizes);
  g.col_block_sizes = std::move(col_sizes);
  for (std::size_t s = 0; s < g.row_block_sizes.size(); ++s)
    for (std::size_t t = 0; t < g.col_block_sizes.size() && t < s; ++t) g.zero_blocks.emplace(s, t);
  return g;
}

BlockGrid BlockGrid::upper_triangular(std::size_t levels, std::size_t row_size,
                                      std::size_t col_size) {
  return upper_triangular(std::vector<std::size_t>(levels, row_size),
                          std::vector<std::size_t>(levels, col_size));
}

std::size_t BlockGrid::total_rows() const {
  return std::accumulate(row_block_sizes.begin(), row_block_sizes.end(), std::size_t{0});
}

std::size_t BlockGrid::total_cols() const {
  return std::accumulate(col_block_sizes.begin(), col_block_sizes.end(), std::size_t{0});
}

std::size_t BlockGrid::row_block(std::size_t r) const {
  for (std::size_t b = 0; b < row_block_sizes.size(); ++b) {
    if (r < row_block_sizes[b]) return b;
    r -= row_block_sizes[b];
  }
  throw std::out_of_range("row outside grid");
}

std::size_t BlockGrid::col_block(std::size_t c) const {
  for (std::size_t b = 0; b < col_block_sizes.size(); ++b) {
    if (c < col_block_sizes[b]) return b;
    c -= col_block_sizes[b];
  }
  throw std::out_of_range("column outside grid");
}

bool BlockGrid::allows(std::size_t r, std::size_t c) const {
  return !zero_blocks.contains({row_block(r), col_block(c)});
}

void BlockGrid::validate(std::size_t rows, std::size_t cols) const {
  if (total_rows() != rows || total_cols() != cols)
    throw std::invalid_argument("block grid does not match matrix dimensions");
}

ZeroPattern BlockGrid::pattern() const {
  const std::size_t rows = total_rows(), cols = total_cols();
  std::vector<std::uint8_t> s(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) s[r * cols + c] = allows(r, c);
  return ZeroPattern(rows, cols, std::move(s));
}

bool is_trivial_minor(const ZeroPattern& pattern, const RowColSelection& sel) {
  if (sel.rows.size() != sel.cols.size()) throw std::invalid_argument("non-square selection");
  for (std::size_t i = 0; i < sel.size(); ++i)
    if (sel.rows[i] >= pattern.rows || sel.cols[i] >= pattern.cols)
      throw std::out_of_range("selection out of bounds");
  return !has_perfect_matching(pattern, sel);
}

std::uint64_t count_square_selections(std::size_t rows, std::size_t cols) {
  std::uint64_t total = 0;
  for (std::size_t s = 1; s <= std::min(rows, cols); ++s) {
    const std::uint64_t a = binomial(rows, s), b = binomial(cols, s);
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
      return std::numeric_limits<std::uint64_t>::max();
    if (total > std::numeric_limits<std::uint64_t>::max() - a * b)
      return std::numeric_limits<std::uint64_t>::max();
    total += a * b;
  }
  return total;
}

SelectionList::SelectionList(std::size_t rows, std::size_t cols, const BlockGrid* grid,
                             std::size_t min_size, std::uint64_t budget)
    : rows_(rows), cols_(cols) {
  if (grid) grid->validate(rows, cols);
  if (rows > 0xFFFF || cols > 0xFFFF) throw std::invalid_argument("matrix too large");
  if (!bounded_count(rows, cols, grid, budget)) {
    feasible_ = false;
    return;
  }
  walk_selections(rows, cols, grid, min_size, [&](const RowColSelection& sel) {
    sizes_.push_back(static_cast<std::uint32_t>(sel.size()));
    offsets_.push_back(static_cast<std::uint32_t>(row_idx_.size()));
    for (std::size_t i = 0; i < sel.size(); ++i) {
      row_idx_.push_back(static_cast<std::uint16_t>(sel.rows[i]));
      col_idx_.push_back(static_cast<std::uint16_t>(sel.cols[i]));
    }
    return true;
  });
}

RowColSelection SelectionList::at(std::size_t i) const {
  RowColSelection sel;
  for (std::uint32_t k = 0; k < sizes_[i]; ++k) {
    sel.rows.push_back(row_idx_[offsets_[i] + k]);
    sel.cols.push_back(col_idx_[offsets_[i] + k]);
  }
  return sel;
}

std::optional<std::size_t> SelectionList::find_failure(const Matrix& m, Test test) const {
  if (m.rows() != rows_ || m.cols() != cols_) throw std::invalid_argument("dimension mismatch");
  const Field& f = *m.field();
  std::vector<Elem> scratch;
  std::optional<ZeroPattern> pattern;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    const std::size_t n = sizes_[i];
    const std::uint32_t off = offsets_[i];
    scratch.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        scratch[a * n + b] = m(row_idx_[off + a], col_idx_[off + b]);
    const Elem value = n == 1 ? scratch[0] : det_in_place(f, scratch, n);
    switch (test) {
      case Test::nonzero:
        if (value == 0) return i;
        break;
      case Test::outside_base_field:
        if (f.in_base_field(value)) return i;
        break;
      case Test::nonzero_or_trivial:
        if (value == 0) {
          if (!pattern) pattern = ZeroPattern::of(m);
          if (!is_trivial_minor(*pattern, at(i))) return i;
        }
        break;
    }
  }
  return std::nullopt;
}

VerificationReport is_superregular(const Matrix& m, std::uint64_t selection_budget) {
  return scan(m, nullptr, true, selection_budget, "superregular");
}

VerificationReport is_full_superregular(const Matrix& m, std::uint64_t selection_budget) {
  return scan(m, nullptr, false, selection_budget, "full-superregular");
}

VerificationReport is_superregular_constrained(const Matrix& m, const BlockGrid& grid,
                                               std::uint64_t selection_budget) {
  grid.validate(m.rows(), m.cols());
  return scan(m, &grid, false, selection_budget, "superregular-constrained");
}

std::uint64_t count_nontrivial_minors(const ZeroPattern& pattern, const BlockGrid* grid,
                                      std::size_t min_size) {
  if (grid) grid->validate(pattern.rows, pattern.cols);
  std::uint64_t n = 0;
  walk_selections(pattern.rows, pattern.cols, grid, min_size, [&](const RowColSelection& sel) {
    if (has_perfect_matching(pattern, sel)) ++n;
    return true;
  });
  return n;
}

}  // namespace sumrank
