// SPDX-License-Identifier: Apache-2.0
#include "sumrank/matrix.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace sumrank {

namespace {

const FieldPtr& result_field(const Matrix& a, const Matrix& b) {
  if (!a.field() || !b.field()) throw std::invalid_argument("matrix without field");
  if (*a.field() == *b.field()) return a.field();
  if (a.field()->embeds(*b.field())) return a.field();
  if (b.field()->embeds(*a.field())) return b.field();
  throw std::invalid_argument("mismatched field parameters");
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = saturating_mul(r, base);
  return r;
}

void check_selection(const Matrix& m, const RowColSelection& sel) {
  if (sel.rows.size() != sel.cols.size() || sel.rows.empty())
    throw std::out_of_range("selection must be square and nonempty");
  for (std::size_t i = 0; i < sel.rows.size(); ++i) {
    if (sel.rows[i] >= m.rows() || sel.cols[i] >= m.cols())
      throw std::out_of_range("selection out of bounds");
    if (i > 0 && (sel.rows[i] <= sel.rows[i - 1] || sel.cols[i] <= sel.cols[i - 1]))
      throw std::out_of_range("selection indices must be strictly increasing");
  }
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!field_) throw std::invalid_argument("matrix without field");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (!field_) throw std::invalid_argument("matrix without field");
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
  for (Elem e : data_)
    if (e >= field_->order()) throw std::out_of_range("matrix entry outside field");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::exchange(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, std::initializer_list<std::initializer_list<Elem>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Elem> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(std::move(field), r, c, std::move(data));
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw std::out_of_range("block out of bounds");
  Matrix out(field_, nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
  if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_)
    throw std::out_of_range("block out of bounds");
  if (!src.empty() && !field_->embeds(*src.field()))
    throw std::invalid_argument("mismatched field parameters");
  for (std::size_t r = 0; r < src.rows(); ++r)
    for (std::size_t c = 0; c < src.cols(); ++c) (*this)(r0 + r, c0 + c) = src(r, c);
}

Matrix Matrix::submatrix(const RowColSelection& sel) const {
  check_selection(*this, sel);
  const std::size_t n = sel.size();
  Matrix out(field_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = (*this)(sel.rows[i], sel.cols[j]);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Matrix Matrix::over(FieldPtr ext) const {
  if (!ext->embeds(*field_)) throw std::invalid_argument("mismatched field parameters");
  return Matrix(std::move(ext), rows_, cols_, data_);
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

bool Matrix::is_upper_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < std::min(r, cols_); ++c)
      if ((*this)(r, c) != 0) return false;
  return true;
}

bool Matrix::is_lower_triangular() const { return transpose().is_upper_triangular(); }

bool Matrix::is_permutation() const {
  if (!is_square()) return false;
  std::vector<int> col_hits(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    int ones = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Elem e = (*this)(r, c);
      if (e == 1) {
        ++ones;
        ++col_hits[c];
      } else if (e != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return std::all_of(col_hits.begin(), col_hits.end(), [](int h) { return h == 1; });
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.data_ != b.data_) return false;
  if (a.field_ == b.field_) return true;
  if (!a.field_ || !b.field_) return false;
  // Base-field matrices compare equal to their embedding.
  return a.field_->embeds(*b.field_) || b.field_->embeds(*a.field_);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch");
  const auto& f = result_field(a, b);
  Matrix out(f, a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f->add(a(r, c), b(r, c));
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch");
  const auto& f = result_field(a, b);
  Matrix out(f, a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f->sub(a(r, c), b(r, c));
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
  const auto& fp = result_field(a, b);
  const Field& f = *fp;
  Matrix out(fp, a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto dst = out.row(r);
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const Elem x = a(r, t);
      if (x == 0) continue;
      const auto src = b.row(t);
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (src[c] != 0) dst[c] = f.add(dst[c], f.mul(x, src[c]));
    }
  }
  return out;
}

Matrix scale(Elem c, const Matrix& m) {
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t k = 0; k < m.cols(); ++k) out(r, k) = m.field()->mul(c, m(r, k));
  return out;
}

std::vector<Elem> row_times(std::span<const Elem> v, const Matrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("dimension mismatch");
  const Field& f = *m.field();
  std::vector<Elem> out(m.cols(), 0);
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] == 0) continue;
    const auto src = m.row(t);
    for (std::size_t c = 0; c < out.size(); ++c)
      if (src[c] != 0) out[c] = f.add(out[c], f.mul(v[t], src[c]));
  }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("dimension mismatch");
  Matrix out(result_field(a, b), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix block_diag(const FieldPtr& field, std::span<const Matrix> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out(field, rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Elem det_in_place(const Field& f, std::span<Elem> a, std::size_t n) {
  Elem result = 1;
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * n),
                       a.begin() + static_cast<std::ptrdiff_t>(pivot * n + n),
                       a.begin() + static_cast<std::ptrdiff_t>(col * n));
      negate = !negate;
    }
    const Elem p = a[col * n + col];
    result = f.mul(result, p);
    const Elem pinv = f.inv(p);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Elem x = a[r * n + col];
      if (x == 0) continue;
      const Elem factor = f.mul(x, pinv);
      for (std::size_t c = col + 1; c < n; ++c) {
        const Elem y = a[col * n + c];
        if (y != 0) a[r * n + c] = f.sub(a[r * n + c], f.mul(factor, y));
      }
    }
  }
  return negate ? f.neg(result) : result;
}

Elem det(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  std::vector<Elem> scratch(m.data().begin(), m.data().end());
  return det_in_place(*m.field(), scratch, m.rows());
}

std::size_t rank(const Matrix& m) {
  const Field& f = *m.field();
  std::vector<Elem> a(m.data().begin(), m.data().end());
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t k = 0; k < cols; ++k) std::swap(a[pivot * cols + k], a[r * cols + k]);
    const Elem pinv = f.inv(a[r * cols + c]);
    for (std::size_t rr = r + 1; rr < rows; ++rr) {
      const Elem x = a[rr * cols + c];
      if (x == 0) continue;
      const Elem factor = f.mul(x, pinv);
      for (std::size_t k = c; k < cols; ++k)
        a[rr * cols + k] = f.sub(a[rr * cols + k], f.mul(factor, a[r * cols + k]));
    }
    ++r;
  }
  return r;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const Field& f = *m.field();
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(m.field(), n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular matrix");
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(pivot, k), a(c, k));
        std::swap(inv(pivot, k), inv(c, k));
      }
    }
    const Elem pinv = f.inv(a(c, c));
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) = f.mul(a(c, k), pinv);
      inv(c, k) = f.mul(inv(c, k), pinv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Elem factor = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) = f.sub(a(r, k), f.mul(factor, a(c, k)));
        inv(r, k) = f.sub(inv(r, k), f.mul(factor, inv(c, k)));
      }
    }
  }
  return inv;
}

Elem minor(const Matrix& m, const RowColSelection& sel) { return det(m.submatrix(sel)); }

BruhatFactors bruhat_decompose(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("Bruhat decomposition of non-square matrix");
  const FieldPtr& fp = a.field();
  const Field& f = *fp;
  const std::size_t n = a.rows();
  const Matrix exchange = Matrix::exchange(fp, n);

  // Reduce B = exchange * a to a permutation with downward row operations
  // (accumulated in rows_op, lower triangular) and rightward column
  // operations (cols_op, upper triangular): rows_op * B * cols_op = P.
  Matrix b = exchange * a;
  Matrix rows_op = Matrix::identity(fp, n);
  Matrix cols_op = Matrix::identity(fp, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t i = 0;
    while (i < n && b(i, j) == 0) ++i;
    if (i == n) throw std::domain_error("singular matrix");
    const Elem pinv = f.inv(b(i, j));
    for (std::size_t k = 0; k < n; ++k) {
      b(i, k) = f.mul(b(i, k), pinv);
      rows_op(i, k) = f.mul(rows_op(i, k), pinv);
    }
    for (std::size_t r = i + 1; r < n; ++r) {
      const Elem x = b(r, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        b(r, k) = f.sub(b(r, k), f.mul(x, b(i, k)));
        rows_op(r, k) = f.sub(rows_op(r, k), f.mul(x, rows_op(i, k)));
      }
    }
    for (std::size_t c = j + 1; c < n; ++c) {
      const Elem x = b(i, c);
      if (x == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        b(k, c) = f.sub(b(k, c), f.mul(x, b(k, j)));
        cols_op(k, c) = f.sub(cols_op(k, c), f.mul(x, cols_op(k, j)));
      }
    }
  }
  const Matrix lower = inverse(rows_op);
  const Matrix upper = inverse(cols_op);
  return BruhatFactors{exchange * lower * exchange, exchange * b, upper};
}

// ---------------------------------------------------------------------------

std::uint64_t count_ut_nonsingular(std::size_t s, int q) {
  return saturating_mul(saturating_pow(static_cast<std::uint64_t>(q - 1), s),
                        saturating_pow(static_cast<std::uint64_t>(q), s * (s - (s > 0 ? 1 : 0)) / 2));
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, int q) {
  if (k > n) return 0;
  // [n, k] = [n-1, k-1] + q^k [n-1, k]
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, k); j >= 1; --j)
      row[j] = row[j - 1] + saturating_mul(saturating_pow(static_cast<std::uint64_t>(q), j), row[j]);
  }
  return row[k];
}

UpperTriangularEnum::UpperTriangularEnum(std::size_t size, FieldPtr base)
    : size_(size), base_(std::move(base)), count_(count_ut_nonsingular(size_, base_->q())) {
  if (base_->degree() != 1) throw std::invalid_argument("enumerator over a non-prime field");
  if (count_ == std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("too many upper triangular matrices to index");
}

Matrix UpperTriangularEnum::at(std::uint64_t index) const {
  const auto q = static_cast<std::uint64_t>(base_->q());
  Matrix m(base_, size_, size_);
  for (std::size_t i = 0; i < size_; ++i) {
    m(i, i) = static_cast<Elem>(1 + index % (q - 1));
    index /= (q - 1);
  }
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = r + 1; c < size_; ++c) {
      m(r, c) = static_cast<Elem>(index % q);
      index /= q;
    }
  return m;
}

BaseMatrixEnum::BaseMatrixEnum(std::size_t rows, std::size_t cols, FieldPtr base)
    : rows_(rows), cols_(cols), base_(std::move(base)),
      count_(saturating_pow(static_cast<std::uint64_t>(base_->q()), rows * cols)) {
  if (base_->degree() != 1) throw std::invalid_argument("enumerator over a non-prime field");
  if (count_ == std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("too many base matrices to index");
}

Matrix BaseMatrixEnum::at(std::uint64_t index) const {
  const auto q = static_cast<std::uint64_t>(base_->q());
  std::vector<Elem> data(rows_ * cols_);
  for (auto& e : data) {
    e = static_cast<Elem>(index % q);
    index /= q;
  }
  return Matrix(base_, rows_, cols_, std::move(data));
}

ColumnSpaceEnum::ColumnSpaceEnum(std::size_t n, std::size_t rho, FieldPtr base) {
  if (rho > n) throw std::invalid_argument("subspace dimension exceeds ambient dimension");
  if (base->degree() != 1) throw std::invalid_argument("enumerator over a non-prime field");
  const auto q = static_cast<std::uint64_t>(base->q());
  if (rho == 0) {
    reps_.emplace_back(base, n, 0);
    return;
  }
  // Pivot rows p_0 < ... < p_{rho-1}; column t has a 1 at p_t, zeros above
  // and at the other pivot rows, free entries below elsewhere.
  std::vector<std::size_t> pivots(rho);
  for (std::size_t i = 0; i < rho; ++i) pivots[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t t = 0; t < rho; ++t)
      for (std::size_t r = pivots[t] + 1; r < n; ++r)
        if (std::find(pivots.begin(), pivots.end(), r) == pivots.end()) free_slots.emplace_back(r, t);
    const std::uint64_t combos = saturating_pow(q, free_slots.size());
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
      Matrix m(base, n, rho);
      for (std::size_t t = 0; t < rho; ++t) m(pivots[t], t) = 1;
      std::uint64_t v = idx;
      for (const auto& [r, t] : free_slots) {
        m(r, t) = static_cast<Elem>(v % q);
        v /= q;
      }
      reps_.push_back(std::move(m));
    }
    // Next combination of pivot rows in lexicographic order.
    std::size_t i = rho;
    while (i > 0 && pivots[i - 1] == n - rho + (i - 1)) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t t = i; t < rho; ++t) pivots[t] = pivots[t - 1] + 1;
  }
}

UpperTriangularEnum enum_ut_nonsingular(std::size_t s, int q) {
  return UpperTriangularEnum(s, Field::prime(q));
}

BaseMatrixEnum enum_base_matrices(std::size_t rows, std::size_t cols, int q) {
  return BaseMatrixEnum(rows, cols, Field::prime(q));
}

ColumnSpaceEnum enum_full_rank_column_spaces(std::size_t n, std::size_t rho, int q) {
  return ColumnSpaceEnum(n, rho, Field::prime(q));
}

}  // namespace sumrank
