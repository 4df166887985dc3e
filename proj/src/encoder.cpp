// SPDX-License-Identifier: Apache-2.0
#include "sumrank/encoder.hpp"

#include <stdexcept>
#include <string>

namespace sumrank {
namespace {

void check_shapes(const FieldPtr& field, const std::vector<Matrix>& coeffs, std::size_t rows,
                  std::size_t cols) {
  if (coeffs.empty()) throw std::invalid_argument("encoder needs at least one coefficient");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Matrix& c = coeffs[i];
    if (c.rows() != rows || c.cols() != cols)
      throw std::invalid_argument("coefficient " + std::to_string(i) + " is " +
                                  std::to_string(c.rows()) + "x" + std::to_string(c.cols()) +
                                  ", expected " + std::to_string(rows) + "x" +
                                  std::to_string(cols));
    if (!field->embeds(*c.field()))
      throw std::invalid_argument("mismatched field parameters");
  }
}

std::vector<Matrix> trimmed(const FieldPtr& field, std::vector<Matrix> coeffs) {
  for (auto& c : coeffs) c = c.over(field);
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

}  // namespace

PolyEncoder PolyEncoder::systematic(FieldPtr field, std::size_t n, std::size_t k,
                                    std::vector<Matrix> parity) {
  if (k == 0 || k >= n) throw std::invalid_argument("systematic encoder needs 0 < k < n");
  check_shapes(field, parity, k, n - k);
  PolyEncoder e;
  e.field_ = field;
  e.n_ = n;
  e.k_ = k;
  e.systematic_ = true;
  e.coeffs_ = trimmed(field, std::move(parity));
  return e;
}

PolyEncoder PolyEncoder::general(FieldPtr field, std::size_t n, std::size_t k,
                                 std::vector<Matrix> coeffs) {
  if (k == 0 || k > n) throw std::invalid_argument("encoder needs 0 < k <= n");
  check_shapes(field, coeffs, k, n);
  PolyEncoder e;
  e.field_ = field;
  e.n_ = n;
  e.k_ = k;
  e.coeffs_ = trimmed(field, std::move(coeffs));
  if (e.coeffs_.size() == 1 && e.coeffs_[0].is_zero())
    throw std::invalid_argument("encoder is identically zero");
  return e;
}

Matrix PolyEncoder::coefficient(std::size_t i) const {
  if (!systematic_) return i < coeffs_.size() ? coeffs_[i] : Matrix(field_, k_, n_);
  Matrix g(field_, k_, n_);
  if (i == 0) g.set_block(0, 0, Matrix::identity(field_, k_));
  if (i < coeffs_.size()) g.set_block(0, k_, coeffs_[i]);
  return g;
}

Matrix PolyEncoder::parity(std::size_t i) const {
  if (!systematic_) throw std::logic_error("encoder is not systematic");
  return i < coeffs_.size() ? coeffs_[i] : Matrix(field_, k_, n_ - k_);
}

}  // namespace sumrank
