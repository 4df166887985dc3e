// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sumrank {

/// Element of a finite field, stored as the integer whose base-q digits are
/// its coordinates in the polynomial basis {1, a, ..., a^(M-1)}.
using Elem = std::uint32_t;

/// Largest field order accepted by Field::make.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 24;

/// Parameters of F_{q^M} = F_q[x] / (poly).
///
/// `poly` is stored low-to-high: poly[i] is the coefficient of x^i, so it
/// has M + 1 entries and poly[M] == 1. The textual descriptor lists the
/// same coefficients high-to-low.
struct FieldParams {
  int q = 2;
  int degree = 1;
  std::vector<int> poly{1, 1};

  bool operator==(const FieldParams&) const = default;
};

bool is_prime(std::uint64_t n);

/// True iff `poly` (low-to-high, monic) is irreducible over F_q.
bool is_irreducible(int q, std::span<const int> poly);

/// True iff params.poly is irreducible over F_q and the class of x has
/// multiplicative order q^M - 1.
bool validate_primitive(const FieldParams& params);

/// Built-in primitive polynomial (low-to-high) for q = 2, M <= 20 and
/// q = 3, M <= 8. Each entry is the numerically smallest primitive
/// polynomial of its degree.
std::optional<std::vector<int>> builtin_primitive_poly(int q, int degree);

/// Every monic primitive polynomial of the given degree, in increasing
/// numeric order of the coefficient digits.
std::vector<std::vector<int>> all_primitive_polys(int q, int degree);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field : public std::enable_shared_from_this<Field> {
 public:
  /// Throws std::invalid_argument if q is not prime, the order exceeds
  /// kMaxFieldOrder, or poly is not primitive.
  static FieldPtr make(const FieldParams& params);
  /// Uses the built-in primitive polynomial.
  static FieldPtr make(int q, int degree);
  static FieldPtr prime(int q) { return make(q, 1); }
  /// Parses "q^M/c_M...c_0" (or "q^M" for the built-in polynomial).
  static FieldPtr parse(std::string_view descriptor);

  std::string descriptor() const;
  const FieldParams& params() const { return params_; }
  int q() const { return params_.q; }
  int degree() const { return params_.degree; }
  Elem order() const { return order_; }

  /// F_q as a field of its own. Codes of base elements coincide in both.
  FieldPtr base_field() const;
  /// True iff `other` is this field or its prime subfield F_q.
  bool embeds(const Field& other) const;

  Elem alpha() const { return alpha_; }

  Elem add(Elem a, Elem b) const {
    if (params_.q == 2) return a ^ b;
    return add_digits(a, b, false);
  }
  Elem sub(Elem a, Elem b) const {
    if (params_.q == 2) return a ^ b;
    return add_digits(a, b, true);
  }
  Elem neg(Elem a) const { return sub(0, a); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
      std::uint32_t e = log_[a] + log_[b];
      return exp_[e];
    }
    return mul_slow(a, b);
  }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^(q^j).
  Elem frobenius(Elem a, std::uint64_t j) const;
  bool in_base_field(Elem a) const;
  /// alpha^e.
  Elem exp(std::uint64_t e) const;
  /// Discrete log base alpha; a must be nonzero.
  std::uint64_t log(Elem a) const;

  std::vector<int> digits(Elem a) const;
  Elem from_digits(std::span<const int> digits) const;

  bool operator==(const Field& other) const { return params_ == other.params_; }

 private:
  explicit Field(FieldParams params);

  Elem add_digits(Elem a, Elem b, bool subtract) const;
  Elem mul_slow(Elem a, Elem b) const;

  FieldParams params_;
  Elem order_ = 0;
  Elem alpha_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;  // doubled so log(a) + log(b) needs no reduction
  mutable FieldPtr base_;
};

/// Element paired with its field; arithmetic checks that both operands
/// live in the same field.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem code);

  const FieldPtr& field() const { return field_; }
  Elem code() const { return code_; }

  FieldElement inv() const;
  FieldElement frobenius(std::uint64_t j) const;
  bool in_base_field() const { return field_->in_base_field(code_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  Elem code_;
};

}  // namespace sumrank
