// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

#include "sumrank/field.hpp"

namespace sumrank {

/// Square selection of rows and columns; both index lists strictly increasing.
struct RowColSelection {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  std::size_t size() const { return rows.size(); }
  bool operator==(const RowColSelection&) const = default;
};

/// Dense row-major matrix over a finite field.
///
/// Matrices over F_q and over F_{q^M} share this type; binary operations
/// embed F_q-matrices into the extension (codes coincide under the natural
/// inclusion).
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(FieldPtr field, std::size_t n);
  /// Ones on the anti-diagonal.
  static Matrix exchange(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, std::initializer_list<std::initializer_list<Elem>> rows);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> data() const { return data_; }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& src);
  Matrix submatrix(const RowColSelection& sel) const;
  Matrix transpose() const;
  /// Same codes, reinterpreted over `ext`, which must embed this field.
  Matrix over(FieldPtr ext) const;

  bool is_zero() const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;
  bool is_permutation() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix scale(Elem c, const Matrix& m);
/// v * m for a row vector v over m's field.
std::vector<Elem> row_times(std::span<const Elem> v, const Matrix& m);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const FieldPtr& field, std::span<const Matrix> blocks);

/// Determinant by elimination on a scratch n*n row-major buffer, which is
/// destroyed. Pivot: first nonzero entry scanning down the column.
Elem det_in_place(const Field& f, std::span<Elem> a, std::size_t n);

/// Throws std::invalid_argument for non-square input.
Elem det(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Throws std::invalid_argument for non-square and std::domain_error for
/// singular input.
Matrix inverse(const Matrix& m);
/// Throws std::out_of_range for an out-of-bounds or malformed selection.
Elem minor(const Matrix& m, const RowColSelection& sel);

struct BruhatFactors {
  Matrix V;  // nonsingular upper triangular
  Matrix Q;  // permutation
  Matrix U;  // nonsingular upper triangular
};

/// a = V * Q * U. Computed from an LPU factorization of exchange(n) * a.
/// Throws std::domain_error for singular input.
BruhatFactors bruhat_decompose(const Matrix& a);

// ---------------------------------------------------------------------------
// Enumerators over F_q. Each is indexable so ranges can be split across
// workers; iteration order is increasing index.

template <class Enumerator>
class IndexIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = Matrix;
  using difference_type = std::ptrdiff_t;

  IndexIterator(const Enumerator* e, std::uint64_t i) : e_(e), i_(i) {}
  Matrix operator*() const { return e_->at(i_); }
  IndexIterator& operator++() {
    ++i_;
    return *this;
  }
  bool operator==(const IndexIterator& o) const { return i_ == o.i_; }

 private:
  const Enumerator* e_;
  std::uint64_t i_;
};

/// All s x s upper triangular matrices over F_q with nonzero diagonal.
class UpperTriangularEnum {
 public:
  UpperTriangularEnum(std::size_t size, FieldPtr base);
  std::uint64_t count() const { return count_; }
  Matrix at(std::uint64_t index) const;
  IndexIterator<UpperTriangularEnum> begin() const { return {this, 0}; }
  IndexIterator<UpperTriangularEnum> end() const { return {this, count_}; }

 private:
  std::size_t size_;
  FieldPtr base_;
  std::uint64_t count_;
};

/// All r x c matrices over F_q; digit i of the index is entry i (row-major).
class BaseMatrixEnum {
 public:
  BaseMatrixEnum(std::size_t rows, std::size_t cols, FieldPtr base);
  std::uint64_t count() const { return count_; }
  Matrix at(std::uint64_t index) const;
  IndexIterator<BaseMatrixEnum> begin() const { return {this, 0}; }
  IndexIterator<BaseMatrixEnum> end() const { return {this, count_}; }

 private:
  std::size_t rows_, cols_;
  FieldPtr base_;
  std::uint64_t count_;
};

/// One reduced column-echelon n x rho representative per rho-dimensional
/// subspace of F_q^n.
class ColumnSpaceEnum {
 public:
  ColumnSpaceEnum(std::size_t n, std::size_t rho, FieldPtr base);
  std::uint64_t count() const { return reps_.size(); }
  const Matrix& at(std::uint64_t index) const { return reps_[index]; }
  auto begin() const { return reps_.begin(); }
  auto end() const { return reps_.end(); }

 private:
  std::vector<Matrix> reps_;
};

UpperTriangularEnum enum_ut_nonsingular(std::size_t s, int q);
BaseMatrixEnum enum_base_matrices(std::size_t rows, std::size_t cols, int q);
/// Throws std::invalid_argument if rho > n.
ColumnSpaceEnum enum_full_rank_column_spaces(std::size_t n, std::size_t rho, int q);

/// (q-1)^s q^(s(s-1)/2), saturating at UINT64_MAX.
std::uint64_t count_ut_nonsingular(std::size_t s, int q);
/// Gaussian binomial [n choose k]_q.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, int q);

}  // namespace sumrank
