// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sumrank/matrix.hpp"
#include "sumrank/metrics.hpp"
#include "sumrank/report.hpp"
#include "sumrank/transforms.hpp"

namespace sumrank {

/// Systematic sum-rank block code with generator [J_1, P_1, ..., J_l, P_l].
///
/// Block i has length n_i and dimension k_i, and contributes k_i rows.
/// J_i is k x k_i, zero except I_{k_i} in row block i; `parity` is the
/// k x (n - k) concatenation [P_1 | ... | P_l].
struct SystematicBlockCode {
  LengthPartition partition{{1}};
  std::vector<std::size_t> dims;
  Matrix parity;

  std::size_t n() const { return partition.total(); }
  std::size_t k() const;
  /// Throws std::invalid_argument when dims and parity disagree with the
  /// partition.
  void validate() const;
  /// Row blocks (k_i) and column blocks (n_i - k_i) of the parity matrix.
  TransformLayout layout() const;
};

Matrix assemble_generator(const SystematicBlockCode& code);

/// Parity part P of [I_k | P] = S^-1 G when the leading k x k block S of G
/// is invertible.
std::optional<Matrix> systematic_parity(const Matrix& g);

/// [I | P] is MDS iff P is full superregular.
VerificationReport check_mds(const Matrix& p,
                             std::uint64_t selection_budget = kDefaultSelectionBudget);

/// Every full-size minor of G U nonzero for every nonsingular upper
/// triangular U over F_q.
VerificationReport check_mrd_transforms(const Matrix& g, const CheckOptions& options = {});

/// Every full-size minor of G A nonzero for every A = diag(A_1, ..., A_l)
/// with A_i nonsingular upper triangular over F_q.
VerificationReport check_msrd_transforms(const Matrix& g, const LengthPartition& partition,
                                         const CheckOptions& options = {});

/// B P A + C full superregular for all nonsingular upper triangular B, A
/// and all C over F_q.
VerificationReport check_mrd_systematic(const Matrix& p, const CheckOptions& options = {});

/// diag(B_i) P diag(A_i) + diag(C_i) full superregular for all block tuples.
VerificationReport check_msrd_systematic(const SystematicBlockCode& code,
                                         const CheckOptions& options = {});

/// k x n Moore matrix with entry (i, j) = (alpha^j)^(q^i). Throws
/// std::invalid_argument when M < n or k > n.
Matrix construct_gabidulin(std::size_t n, std::size_t k, const FieldParams& params);

}  // namespace sumrank
