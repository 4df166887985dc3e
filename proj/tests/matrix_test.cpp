// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sumrank/matrix.hpp"

using namespace sumrank;

namespace {

FieldPtr f4() { return Field::parse("2^2/111"); }
FieldPtr f8() { return Field::parse("2^3/1011"); }

/// Every n x n matrix over F_q, as row-major code vectors.
std::vector<Matrix> all_square(const FieldPtr& f, std::size_t n) {
  std::vector<Matrix> out;
  const BaseMatrixEnum e(n, n, f);
  for (std::uint64_t i = 0; i < e.count(); ++i) out.push_back(e.at(i));
  return out;
}

}  // namespace

TEST(Matrix, DetExamples) {
  auto f = f4();
  EXPECT_EQ(det(Matrix::identity(f, 3)), 1u);
  const Elem a = f->alpha();
  EXPECT_EQ(det(Matrix(f, 2, 2, {a, 1, 1, a})), a);
  EXPECT_THROW(det(Matrix(f, 2, 3)), std::invalid_argument);
}

TEST(Matrix, DetMatchesLeibniz) {
  std::mt19937_64 rng(11);
  for (auto d : {"2^3/1011", "3^2/112", "2^4/10011"}) {
    auto f = Field::parse(d);
    for (std::size_t n = 1; n <= 5; ++n)
      for (int t = 0; t < 40; ++t) {
        const Matrix m = oracle::random_matrix(f, n, n, rng);
        ASSERT_EQ(det(m), oracle::leibniz_det(m)) << d << " n=" << n;
      }
  }
}

TEST(Matrix, DetIsMultiplicative) {
  std::mt19937_64 rng(12);
  auto f = f8();
  for (int t = 0; t < 100; ++t) {
    const Matrix a = oracle::random_matrix(f, 3, 3, rng), b = oracle::random_matrix(f, 3, 3, rng);
    EXPECT_EQ(det(a * b), f->mul(det(a), det(b)));
  }
}

TEST(Matrix, RankExamples) {
  auto f = f4();
  const Elem a = f->alpha();
  EXPECT_EQ(rank(Matrix(f, 3, 4)), 0u);
  EXPECT_EQ(rank(Matrix::identity(f, 4)), 4u);
  EXPECT_EQ(rank(Matrix(f, 2, 2, {1, a, a, f->mul(a, a)})), 1u);
}

TEST(Matrix, InverseExamples) {
  auto f2 = Field::prime(2);
  const Matrix u(f2, 2, 2, {1, 1, 0, 1});
  EXPECT_EQ(inverse(u), u);
  EXPECT_EQ(inverse(Matrix::identity(f8(), 3)), Matrix::identity(f8(), 3));
  std::mt19937_64 rng(13);
  auto f = f8();
  int checked = 0;
  while (checked < 50) {
    const Matrix m = oracle::random_matrix(f, 3, 3, rng);
    if (det(m) == 0) {
      EXPECT_THROW(inverse(m), std::domain_error);
      continue;
    }
    EXPECT_EQ(m * inverse(m), Matrix::identity(f, 3));
    ++checked;
  }
}

TEST(Matrix, MinorExamples) {
  std::mt19937_64 rng(14);
  auto f = f8();
  const Matrix m = oracle::random_matrix(f, 3, 4, rng);
  EXPECT_EQ(minor(m, {{1}, {2}}), m(1, 2));
  const Elem ad = f->mul(m(0, 1), m(2, 3)), bc = f->mul(m(0, 3), m(2, 1));
  EXPECT_EQ(minor(m, {{0, 2}, {1, 3}}), f->sub(ad, bc));
  const Matrix sq = oracle::random_matrix(f, 3, 3, rng);
  EXPECT_EQ(minor(sq, {{0, 1, 2}, {0, 1, 2}}), det(sq));
  EXPECT_THROW(minor(m, {{0, 3}, {0, 1}}), std::out_of_range);
  EXPECT_THROW(minor(m, {{1, 0}, {0, 1}}), std::out_of_range);
}

TEST(Matrix, MixedFieldProduct) {
  auto f = f8();
  auto f2 = f->base_field();
  const Matrix b(f2, 2, 2, {1, 1, 0, 1});
  const Matrix p(f, 2, 1, {f->alpha(), 1});
  const Matrix prod = b * p;
  EXPECT_EQ(prod.field()->degree(), 3);
  EXPECT_EQ(prod(0, 0), f->add(f->alpha(), 1));
  EXPECT_THROW(Matrix(f4(), 1, 1, {1}) * Matrix(f, 1, 1, {1}), std::invalid_argument);
}

TEST(Bruhat, Examples) {
  auto f2 = Field::prime(2);
  const auto id = Matrix::identity(f2, 2);
  auto r = bruhat_decompose(id);
  EXPECT_EQ(r.V, id);
  EXPECT_EQ(r.Q, id);
  EXPECT_EQ(r.U, id);
  const Matrix swap(f2, 2, 2, {0, 1, 1, 0});
  r = bruhat_decompose(swap);
  EXPECT_EQ(r.V, id);
  EXPECT_EQ(r.Q, swap);
  EXPECT_EQ(r.U, id);
  EXPECT_THROW(bruhat_decompose(Matrix(f2, 2, 2)), std::domain_error);
}

TEST(Bruhat, ExhaustiveReconstruction) {
  for (auto [q, nmax] : {std::pair{2, 3}, std::pair{3, 2}}) {
    auto f = Field::prime(q);
    for (std::size_t n = 1; n <= static_cast<std::size_t>(nmax); ++n) {
      std::size_t nonsingular = 0;
      for (const auto& a : all_square(f, n)) {
        if (det(a) == 0) continue;
        ++nonsingular;
        const auto r = bruhat_decompose(a);
        ASSERT_TRUE(r.V.is_upper_triangular() && det(r.V) != 0);
        ASSERT_TRUE(r.U.is_upper_triangular() && det(r.U) != 0);
        ASSERT_TRUE(r.Q.is_permutation());
        ASSERT_EQ(r.V * r.Q * r.U, a);
      }
      if (q == 2 && n == 3) EXPECT_EQ(nonsingular, 168u);
    }
  }
}

TEST(Bruhat, ExtensionField) {
  std::mt19937_64 rng(15);
  auto f = f8();
  for (int t = 0; t < 100; ++t) {
    const Matrix a = oracle::random_matrix(f, 4, 4, rng);
    if (det(a) == 0) continue;
    const auto r = bruhat_decompose(a);
    ASSERT_EQ(r.V * r.Q * r.U, a);
  }
}

TEST(Enumerators, UpperTriangular) {
  auto f2 = Field::prime(2);
  auto ut = enum_ut_nonsingular(1, 2);
  ASSERT_EQ(ut.count(), 1u);
  EXPECT_EQ(ut.at(0), Matrix(f2, 1, 1, {1}));
  EXPECT_EQ(enum_ut_nonsingular(2, 2).count(), 2u);
  EXPECT_EQ(enum_ut_nonsingular(3, 2).count(), 8u);
  EXPECT_EQ(enum_ut_nonsingular(0, 2).count(), 1u);
  EXPECT_TRUE(enum_ut_nonsingular(0, 2).at(0).empty());
  for (int q : {2, 3})
    for (std::size_t s = 0; s <= 4; ++s) {
      auto e = enum_ut_nonsingular(s, q);
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < s; ++i) expected *= static_cast<std::uint64_t>(q - 1);
      for (std::size_t i = 0; i < (s == 0 ? 0 : s * (s - 1) / 2); ++i) expected *= static_cast<std::uint64_t>(q);
      EXPECT_EQ(e.count(), expected);
      EXPECT_EQ(count_ut_nonsingular(s, q), expected);
      std::set<std::vector<Elem>> distinct;
      for (auto m : e) {
        ASSERT_TRUE(m.is_upper_triangular());
        ASSERT_NE(det(m), 0u);
        distinct.insert({m.data().begin(), m.data().end()});
      }
      EXPECT_EQ(distinct.size(), expected);
    }
}

TEST(Enumerators, BaseMatrices) {
  EXPECT_EQ(enum_base_matrices(1, 1, 2).count(), 2u);
  EXPECT_EQ(enum_base_matrices(2, 1, 2).count(), 4u);
  EXPECT_EQ(enum_base_matrices(2, 2, 3).count(), 81u);
  EXPECT_EQ(enum_base_matrices(0, 3, 2).count(), 1u);
  std::set<std::vector<Elem>> seen;
  for (auto m : enum_base_matrices(2, 2, 3)) seen.insert({m.data().begin(), m.data().end()});
  EXPECT_EQ(seen.size(), 81u);
}

TEST(Enumerators, ColumnSpaces) {
  EXPECT_EQ(enum_full_rank_column_spaces(3, 0, 2).count(), 1u);
  EXPECT_EQ(enum_full_rank_column_spaces(2, 1, 2).count(), 3u);
  EXPECT_THROW(enum_full_rank_column_spaces(2, 3, 2), std::invalid_argument);

  // Oracle: quotient every full-rank n x rho matrix by its column space,
  // keyed by the set of vectors it spans.
  auto f2 = Field::prime(2);
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t rho = 0; rho <= n; ++rho) {
      std::set<std::set<std::uint32_t>> spaces;
      const BaseMatrixEnum all(n, rho, f2);
      for (std::uint64_t i = 0; i < all.count(); ++i) {
        const Matrix m = all.at(i);
        if (rank(m) != rho) continue;
        std::set<std::uint32_t> span;
        for (std::uint32_t mask = 0; mask < (1u << rho); ++mask) {
          std::uint32_t v = 0;
          for (std::size_t r = 0; r < n; ++r) {
            Elem x = 0;
            for (std::size_t c = 0; c < rho; ++c)
              if (mask >> c & 1u) x ^= m(r, c);
            v |= x << r;
          }
          span.insert(v);
        }
        spaces.insert(span);
      }
      auto e = enum_full_rank_column_spaces(n, rho, 2);
      EXPECT_EQ(e.count(), spaces.size()) << n << " " << rho;
      EXPECT_EQ(e.count(), gaussian_binomial(n, rho, 2));
      for (const auto& m : e) EXPECT_EQ(rank(m), rho);
    }
  EXPECT_EQ(enum_full_rank_column_spaces(3, 2, 2).count(), 7u);
  EXPECT_EQ(gaussian_binomial(4, 2, 3), 130u);
}

TEST(Matrix, Structure) {
  auto f = f4();
  const Matrix a(f, 2, 3, {1, 2, 3, 0, 1, 2});
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ(a.block(0, 1, 2, 2), Matrix(f, 2, 2, {2, 3, 1, 2}));
  EXPECT_EQ(hstack(a, a).cols(), 6u);
  EXPECT_TRUE(Matrix::exchange(f, 3).is_permutation());
  EXPECT_EQ(Matrix::exchange(f, 3) * Matrix::exchange(f, 3), Matrix::identity(f, 3));
  EXPECT_THROW(Matrix(f, 1, 1, {4}), std::out_of_range);
  const std::vector<Matrix> blocks{Matrix::identity(f, 1), a};
  const Matrix d = block_diag(f, blocks);
  EXPECT_EQ(d.rows(), 3u);
  EXPECT_EQ(d.cols(), 4u);
  EXPECT_EQ(d(1, 1), 1u);
  EXPECT_EQ(d(0, 1), 0u);
}
