// SPDX-License-Identifier: Apache-2.0
#include "sumrank/conv_codes.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>

#include "sumrank/superregular.hpp"

namespace sumrank {

TransformTuple TransformTuple::identity(const FieldPtr& base, std::size_t n, std::size_t k,
                                        std::size_t j) {
  TransformTuple t;
  for (std::size_t i = 0; i <= j; ++i) {
    t.b.push_back(Matrix::identity(base, k));
    t.a.push_back(Matrix::identity(base, n - k));
    t.c.emplace_back(base, k, n - k);
  }
  return t;
}

void TransformTuple::validate(std::size_t n, std::size_t k, std::size_t j) const {
  if (b.size() != j + 1 || a.size() != j + 1 || c.size() != j + 1)
    throw std::invalid_argument("transform tuple needs j+1 matrices of each kind");
  auto nonsingular_ut = [](const Matrix& m, std::size_t s) {
    if (m.rows() != s || m.cols() != s || !m.is_upper_triangular()) return false;
    for (std::size_t i = 0; i < s; ++i)
      if (m(i, i) == 0) return false;
    return m.field()->degree() == 1;
  };
  for (std::size_t i = 0; i <= j; ++i) {
    if (!nonsingular_ut(b[i], k) || !nonsingular_ut(a[i], n - k))
      throw std::invalid_argument("transform " + std::to_string(i) +
                                  " is not nonsingular upper triangular over F_q");
    if (c[i].rows() != k || c[i].cols() != n - k || c[i].field()->degree() != 1)
      throw std::invalid_argument("C_" + std::to_string(i) + " has the wrong shape or field");
  }
}

namespace {

Matrix sliding(const FieldPtr& f, std::size_t rows, std::size_t cols, std::size_t j,
               const std::function<Matrix(std::size_t)>& coeff) {
  Matrix out(f, rows * (j + 1), cols * (j + 1));
  for (std::size_t s = 0; s <= j; ++s)
    for (std::size_t t = s; t <= j; ++t) out.set_block(s * rows, t * cols, coeff(t - s));
  return out;
}

}  // namespace

Matrix sliding_generator(const PolyEncoder& enc, std::size_t j) {
  return sliding(enc.field(), enc.k(), enc.n(), j,
                 [&](std::size_t i) { return enc.coefficient(i); });
}

Matrix sliding_parity(const PolyEncoder& enc, std::size_t j) {
  if (!enc.is_systematic()) throw std::logic_error("encoder is not systematic");
  return sliding(enc.field(), enc.k(), enc.n() - enc.k(), j,
                 [&](std::size_t i) { return enc.parity(i); });
}

Matrix build_Tj(const PolyEncoder& enc, const TransformTuple& tuple, std::size_t j) {
  tuple.validate(enc.n(), enc.k(), j);
  const FieldPtr& base = tuple.b[0].field();
  const Matrix p = sliding_parity(enc, j);
  Matrix t = block_diag(base, tuple.b) * p * block_diag(base, tuple.a);
  return t + block_diag(base, tuple.c);
}

TransformLayout tj_layout(const PolyEncoder& enc, std::size_t j) {
  return TransformLayout{std::vector<std::size_t>(j + 1, enc.k()),
                         std::vector<std::size_t>(j + 1, enc.n() - enc.k())};
}

BlockGrid tj_grid(const PolyEncoder& enc, std::size_t j) {
  return BlockGrid::upper_triangular(j + 1, enc.k(), enc.n() - enc.k());
}

namespace {

void add_counters(VerificationReport& into, const VerificationReport& from) {
  for (const auto& [name, value] : from.counters) into.counters[name] += value;
  into.checked_count += from.checked_count;
}

void merge_level(VerificationReport& total, VerificationReport level, std::size_t i) {
  add_counters(total, level);
  if (level.witness) level.witness->level = i;
  if (level.verdict == Verdict::no) {
    total.verdict = Verdict::no;
    total.witness = level.witness;
  } else if (level.verdict == Verdict::infeasible && total.verdict == Verdict::yes) {
    total.verdict = Verdict::infeasible;
  }
  if (!level.note.empty())
    total.note += (total.note.empty() ? "" : "; ") + ("level " + std::to_string(i) + ": " + level.note);
  total.levels.push_back(std::move(level));
}

void require_level(const PolyEncoder& enc, std::size_t j) {
  if (j > enc.memory())
    throw std::invalid_argument("level " + std::to_string(j) + " exceeds encoder memory " +
                                std::to_string(enc.memory()));
}

}  // namespace

VerificationReport check_mMSR(const PolyEncoder& enc, std::size_t j, const CheckOptions& options) {
  if (!enc.is_systematic()) throw std::logic_error("encoder is not systematic");
  require_level(enc, j);
  VerificationReport total;
  ReportTimer timer(total);
  total.method = to_string(options.mode);
  for (std::size_t i = 0; i <= j && total.verdict != Verdict::no; ++i) {
    const BlockGrid grid = tj_grid(enc, i);
    merge_level(total, check_transformed(sliding_parity(enc, i), tj_layout(enc, i), &grid, options, "mmsr"), i);
  }
  if (total.verdict == Verdict::yes) {
    // Every entry of an upper block must then be nonzero.
    const Matrix p = sliding_parity(enc, j);
    const BlockGrid grid = tj_grid(enc, j);
    std::uint64_t zeros = 0;
    for (std::size_t r = 0; r < p.rows(); ++r)
      for (std::size_t c = 0; c < p.cols(); ++c)
        if (grid.allows(r, c) && p(r, c) == 0) ++zeros;
    total.counters["upper_block_zero_entries"] = zeros;
    if (zeros) {
      total.verdict = Verdict::no;
      total.note = "zero entry in an upper block despite a passing search";
    }
  }
  return total;
}

std::vector<std::vector<std::size_t>> column_profiles(std::size_t n, std::size_t k, std::size_t j) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> rho(j + 1);
  auto rec = [&](auto&& self, std::size_t t, std::size_t sum) -> void {
    if (t == j + 1) {
      if (sum == k * (j + 1)) out.push_back(rho);
      return;
    }
    for (std::size_t r = 0; r <= n && sum + r <= k * (t + 1); ++r) {
      rho[t] = r;
      self(self, t + 1, sum + r);
    }
  };
  rec(rec, 0, 0);
  return out;
}

namespace {

VerificationReport oracle_level(const PolyEncoder& enc, std::size_t i, const CheckOptions& options) {
  VerificationReport report;
  ReportTimer timer(report);
  report.method = "exact";
  const FieldPtr& f = enc.field();
  const FieldPtr base = f->base_field();
  const std::size_t n = enc.n(), kk = enc.k() * (i + 1);
  const Matrix g = sliding_generator(enc, i);
  const auto profiles = column_profiles(n, enc.k(), i);

  std::vector<ColumnSpaceEnum> reps;
  for (std::size_t rho = 0; rho <= n; ++rho) reps.emplace_back(n, rho, base);

  // Offsets of each profile in the flattened (profile, representatives) index.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> offset{0};
  for (const auto& p : profiles) {
    std::uint64_t c = 1;
    for (std::size_t rho : p) c = (c > kMax / reps[rho].count()) ? kMax : c * reps[rho].count();
    offset.push_back(offset.back() > kMax - c ? kMax : offset.back() + c);
  }
  const std::uint64_t total = offset.back();
  report.counters["profiles"] = profiles.size();
  report.counters["products"] = total;
  if (total > options.budget) {
    report.verdict = Verdict::infeasible;
    report.note = std::to_string(total) + " products over budget " + std::to_string(options.budget);
    return report;
  }

  // pieces[t][rho][r] = (column block t of G) * representative r.
  std::vector<std::vector<std::vector<Matrix>>> pieces(i + 1);
  for (std::size_t t = 0; t <= i; ++t) {
    const Matrix gt = g.block(0, t * n, kk, n);
    pieces[t].resize(n + 1);
    for (std::size_t rho = 0; rho <= n; ++rho)
      for (const auto& rep : reps[rho]) pieces[t][rho].push_back(gt * rep);
  }

  auto decode = [&](std::uint64_t idx, std::size_t& pi, std::vector<std::uint64_t>& choice) {
    pi = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), idx) - offset.begin()) - 1;
    std::uint64_t local = idx - offset[pi];
    const auto& p = profiles[pi];
    choice.assign(i + 1, 0);
    for (std::size_t t = i + 1; t-- > 0;) {
      choice[t] = local % reps[p[t]].count();
      local /= reps[p[t]].count();
    }
  };

  std::mutex mu;
  std::uint64_t witness_index = total;
  Witness witness;
  const auto low = lowest_failure(total, options.workers, [&](std::uint64_t idx) {
    std::size_t pi;
    std::vector<std::uint64_t> choice;
    decode(idx, pi, choice);
    const auto& p = profiles[pi];
    std::vector<Elem> scratch(kk * kk);
    std::size_t col = 0;
    for (std::size_t t = 0; t <= i; ++t) {
      const Matrix& piece = pieces[t][p[t]][choice[t]];
      for (std::size_t c = 0; c < piece.cols(); ++c, ++col)
        for (std::size_t r = 0; r < kk; ++r) scratch[r * kk + col] = piece(r, c);
    }
    if (det_in_place(*f, scratch, kk) != 0) return false;
    std::vector<Matrix> blocks;
    for (std::size_t t = 0; t <= i; ++t) blocks.push_back(reps[p[t]].at(choice[t]));
    Matrix astar = block_diag(base, blocks);
    std::lock_guard lock(mu);
    if (idx < witness_index) {
      witness_index = idx;
      witness = Witness{};
      witness.kind = "mmsr-oracle";
      witness.profile = p;
      witness.subject = g * astar;
      witness.transforms = {{"Astar", std::move(astar)}};
      RowColSelection all;
      for (std::size_t r = 0; r < kk; ++r) {
        all.rows.push_back(r);
        all.cols.push_back(r);
      }
      witness.selection = all;
    }
    return true;
  });
  report.checked_count = low < total ? low + 1 : total;
  if (low < total) {
    report.verdict = Verdict::no;
    report.witness = std::move(witness);
  }
  return report;
}

}  // namespace

VerificationReport check_mMSR_oracle(const PolyEncoder& enc, std::size_t j,
                                     const CheckOptions& options) {
  require_level(enc, j);
  VerificationReport total;
  ReportTimer timer(total);
  total.method = "exact";
  for (std::size_t i = 0; i <= j && total.verdict != Verdict::no; ++i)
    merge_level(total, oracle_level(enc, i, options), i);
  return total;
}

std::vector<Matrix> laurent_systematize(const std::vector<Matrix>& s, const std::vector<Matrix>& q,
                                        std::size_t j) {
  if (s.empty() || q.empty()) throw std::invalid_argument("S and Q need at least one coefficient");
  const FieldPtr& f = s[0].field();
  const std::size_t k = s[0].rows();
  if (!(s[0] == Matrix::identity(f, k)))
    throw std::invalid_argument("S_0 must be the identity");
  const std::size_t r = q[0].cols();
  std::vector<Matrix> p;
  for (std::size_t i = 0; i <= j; ++i) {
    Matrix pi = i < q.size() ? q[i].over(f) : Matrix(f, k, r);
    for (std::size_t h = 1; h <= std::min(i, s.size() - 1); ++h) pi = pi - s[h] * p[i - h];
    p.push_back(std::move(pi));
  }
  return p;
}

PolyEncoder systematize(const PolyEncoder& enc) {
  if (enc.is_systematic()) return enc;
  const std::size_t n = enc.n(), k = enc.k();
  if (k >= n) throw std::invalid_argument("systematic form needs k < n");
  const Matrix s0inv = inverse(enc.coefficient(0).block(0, 0, k, k));
  std::vector<Matrix> s, q;
  for (std::size_t i = 0; i <= enc.memory(); ++i) {
    const Matrix g = s0inv * enc.coefficient(i);
    s.push_back(g.block(0, 0, k, k));
    q.push_back(g.block(0, k, k, n - k));
  }
  return PolyEncoder::systematic(enc.field(), n, k, laurent_systematize(s, q, enc.memory()));
}

PolyEncoder construct_frobenius(std::size_t n, std::size_t k, std::size_t m,
                                const FieldParams& params) {
  if (k == 0 || k >= n) throw std::invalid_argument("construction needs 0 < k < n");
  const FieldPtr f = Field::make(params);
  const std::size_t big_r = std::max(k, n - k);
  std::vector<Matrix> p;
  for (std::size_t i = 0; i <= m; ++i) {
    Matrix pi(f, k, n - k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n - k; ++c) pi(r, c) = f->frobenius(f->alpha(), big_r * i + r + c);
    p.push_back(std::move(pi));
  }
  return PolyEncoder::systematic(f, n, k, std::move(p));
}

std::size_t compute_L(std::size_t delta, std::size_t n, std::size_t k) {
  if (k == 0 || k >= n) throw std::invalid_argument("L needs 0 < k < n");
  return delta / k + delta / (n - k);
}

}  // namespace sumrank
