// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "sumrank/encoder.hpp"
#include "sumrank/matrix.hpp"
#include "sumrank/report.hpp"
#include "sumrank/transforms.hpp"

namespace sumrank {

/// Per-time-block transforms for T_j: B_t (k x k) and A_t ((n-k) x (n-k))
/// nonsingular upper triangular over F_q, C_t arbitrary k x (n-k) over F_q.
struct TransformTuple {
  std::vector<Matrix> b;
  std::vector<Matrix> a;
  std::vector<Matrix> c;

  /// Identity B_t, A_t and zero C_t for t = 0..j.
  static TransformTuple identity(const FieldPtr& base, std::size_t n, std::size_t k, std::size_t j);
  /// Throws std::invalid_argument when lengths, shapes or triangularity are off.
  void validate(std::size_t n, std::size_t k, std::size_t j) const;
};

/// k(j+1) x n(j+1), block (s, t) = G_{t-s} for t >= s.
Matrix sliding_generator(const PolyEncoder& enc, std::size_t j);
/// k(j+1) x (n-k)(j+1), block (s, t) = P_{t-s} for t >= s. Throws
/// std::logic_error for a non-systematic encoder.
Matrix sliding_parity(const PolyEncoder& enc, std::size_t j);

/// diag(B_t) P_j^c diag(A_t) + diag(C_t).
Matrix build_Tj(const PolyEncoder& enc, const TransformTuple& tuple, std::size_t j);

/// Row blocks k and column blocks n - k, j + 1 of each.
TransformLayout tj_layout(const PolyEncoder& enc, std::size_t j);
/// Zero blocks strictly below the block diagonal.
BlockGrid tj_grid(const PolyEncoder& enc, std::size_t j);

/// For each level i = 0..j, every T_i over all transform tuples passes the
/// grid-constrained superregularity test. One sub-report per level in
/// `levels`; stops at the first failing level. Requires j <= memory().
VerificationReport check_mMSR(const PolyEncoder& enc, std::size_t j,
                              const CheckOptions& options = {});

/// Independent check of the same property from the generator side: for
/// each level i <= j, every profile (rho_0..rho_i) and every block-diagonal
/// A* of column-space representatives, G_i^c A* is nonsingular.
VerificationReport check_mMSR_oracle(const PolyEncoder& enc, std::size_t j,
                                     const CheckOptions& options = {});

/// Column profiles of length j+1 in lexicographic order: 0 <= rho_t <= n,
/// prefix sums at most k(t+1), total k(j+1).
std::vector<std::vector<std::size_t>> column_profiles(std::size_t n, std::size_t k, std::size_t j);

/// P_0..P_j of S(D)^-1 Q(D). Throws std::invalid_argument unless S_0 = I.
std::vector<Matrix> laurent_systematize(const std::vector<Matrix>& s, const std::vector<Matrix>& q,
                                        std::size_t j);

/// Systematic encoder with the same truncated column distances as `enc`,
/// expanded to depth memory(). The leading k x k block S_0 of G_0 is
/// first normalized to I; throws std::domain_error when S_0 is singular.
PolyEncoder systematize(const PolyEncoder& enc);

/// Systematic encoder with P_i(r, c) = alpha^(q^(R i + r + c)), R = max(k, n-k).
PolyEncoder construct_frobenius(std::size_t n, std::size_t k, std::size_t m,
                                const FieldParams& params);

/// floor(delta/k) + floor(delta/(n-k)). Throws unless 0 < k < n.
std::size_t compute_L(std::size_t delta, std::size_t n, std::size_t k);

}  // namespace sumrank
