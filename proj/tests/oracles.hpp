// SPDX-License-Identifier: Apache-2.0
// Independent reference implementations used only by tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "sumrank/matrix.hpp"

namespace oracle {

/// Polynomials over F_q as low-to-high coefficient vectors.
using Poly = std::vector<int>;

inline Poly trim(Poly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

inline Poly from_code(std::uint64_t code, int q, int degree) {
  Poly p(static_cast<std::size_t>(degree), 0);
  for (int i = 0; i < degree; ++i) {
    p[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(q));
    code /= static_cast<std::uint64_t>(q);
  }
  return p;
}

inline std::uint64_t to_code(const Poly& p, int q) {
  std::uint64_t c = 0;
  for (std::size_t i = p.size(); i-- > 0;) c = c * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(p[i]);
  return c;
}

inline int mod(int a, int q) { return ((a % q) + q) % q; }

inline int inv_mod(int a, int q) {
  for (int x = 1; x < q; ++x)
    if (mod(a * x, q) == 1) return x;
  return 0;
}

/// Schoolbook product then long division by the monic `modulus`.
inline Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, int q) {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = mod(prod[i + j] + a[i] * b[j], q);
  const std::size_t d = modulus.size() - 1;
  for (std::size_t i = prod.size(); i-- > d;) {
    const int c = prod[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) prod[i - d + j] = mod(prod[i - d + j] - c * modulus[j], q);
  }
  prod.resize(d);
  return prod;
}

/// Extended Euclid in F_q[x]: returns a^-1 mod modulus.
inline Poly inverse(const Poly& a, const Poly& modulus, int q) {
  auto divmod = [q](Poly num, const Poly& den, Poly& quot) {
    num = trim(num);
    const Poly d = trim(den);
    quot.assign(num.size(), 0);
    const int lead_inv = inv_mod(d.back(), q);
    while (num.size() >= d.size() && !(num.size() == 1 && num[0] == 0)) {
      const std::size_t shift = num.size() - d.size();
      const int c = mod(num.back() * lead_inv, q);
      quot[shift] = c;
      for (std::size_t j = 0; j < d.size(); ++j) num[shift + j] = mod(num[shift + j] - c * d[j], q);
      num = trim(num);
      if (num.size() < d.size()) break;
    }
    quot = trim(quot);
    return num;
  };
  auto sub_mul = [q](const Poly& x, const Poly& y, const Poly& z) {  // x - y*z
    Poly r(std::max(x.size(), y.size() + z.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
    for (std::size_t i = 0; i < y.size(); ++i)
      for (std::size_t j = 0; j < z.size(); ++j) r[i + j] = mod(r[i + j] - y[i] * z[j], q);
    return trim(r);
  };
  Poly r0 = trim(modulus), r1 = trim(a), s0{0}, s1{1};
  while (!(r1.size() == 1 && r1[0] == 0)) {
    Poly quot;
    Poly r2 = divmod(r0, r1, quot);
    Poly s2 = sub_mul(s0, quot, s1);
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  const int c = inv_mod(r0[0], q);
  for (auto& x : s0) x = mod(x * c, q);
  s0.resize(modulus.size() - 1, 0);
  return s0;
}

/// Leibniz determinant over all permutations.
inline sumrank::Elem leibniz_det(const sumrank::Matrix& m) {
  const auto& f = *m.field();
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  sumrank::Elem total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    sumrank::Elem term = 1;
    for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m(i, perm[i]));
    total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// True iff some permutation avoids every zero of the selected pattern.
inline bool has_nonzero_term(const std::vector<std::vector<bool>>& support,
                             const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) {
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < rows.size() && ok; ++i) ok = support[rows[i]][cols[perm[i]]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline sumrank::Matrix random_matrix(const sumrank::FieldPtr& f, std::size_t r, std::size_t c,
                                     std::mt19937_64& rng) {
  sumrank::Matrix m(f, r, c);
  std::uniform_int_distribution<sumrank::Elem> d(0, f->order() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

/// F_q-rank by exhaustive span check: the largest s such that some s
/// columns are independent, found by counting the span size.
inline std::size_t base_rank_by_span(const sumrank::Field& f, const std::vector<sumrank::Elem>& v) {
  // The F_q-span of v inside F_{q^M}, grown one generator at a time.
  std::vector<sumrank::Elem> span{0};
  for (auto x : v) {
    if (std::find(span.begin(), span.end(), x) != span.end()) continue;
    std::vector<sumrank::Elem> next;
    for (int c = 0; c < f.q(); ++c)
      for (auto s : span) next.push_back(f.add(s, f.mul(static_cast<sumrank::Elem>(c), x)));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    span = next;
  }
  std::size_t r = 0;
  for (std::size_t size = 1; size < span.size(); size *= static_cast<std::size_t>(f.q())) ++r;
  return r;
}

}  // namespace oracle
