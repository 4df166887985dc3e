// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "sumrank/matrix.hpp"

namespace sumrank {

/// Polynomial encoder G(D) = G_0 + G_1 D + ... + G_m D^m of an (n, k)
/// convolutional code. A systematic encoder stores only its parity
/// coefficients P_i, with G_0 = [I_k | P_0] and G_i = [0 | P_i].
///
/// Trailing zero coefficients are dropped, so memory() is the index of the
/// last nonzero coefficient.
class PolyEncoder {
 public:
  /// Each P_i is k x (n - k); requires 0 < k < n.
  static PolyEncoder systematic(FieldPtr field, std::size_t n, std::size_t k,
                                std::vector<Matrix> parity);
  /// Each G_i is k x n; requires 0 < k <= n and some G_i != 0.
  static PolyEncoder general(FieldPtr field, std::size_t n, std::size_t k,
                             std::vector<Matrix> coeffs);

  const FieldPtr& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t memory() const { return coeffs_.size() - 1; }
  bool is_systematic() const { return systematic_; }

  /// G_i; zero for i > memory().
  Matrix coefficient(std::size_t i) const;
  /// P_i; zero for i > memory(). Throws std::logic_error if not systematic.
  Matrix parity(std::size_t i) const;
  /// Stored coefficients: P_i when systematic, G_i otherwise.
  const std::vector<Matrix>& stored() const { return coeffs_; }

 private:
  PolyEncoder() = default;

  FieldPtr field_;
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  bool systematic_ = false;
  std::vector<Matrix> coeffs_;
};

}  // namespace sumrank
