// SPDX-License-Identifier: Apache-2.0
#include "sumrank/field.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

namespace sumrank {

namespace {

// Dense polynomials over F_q, low-to-high, trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int mod_q(long long v, int q) {
  long long r = v % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

int inv_mod(int a, int q) {
  // q is prime: a^(q-2).
  long long result = 1, base = a % q;
  for (int e = q - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
  }
  return static_cast<int>(result);
}

Poly poly_mod(Poly a, const Poly& m, int q) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = inv_mod(m.back(), q);
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const long long c = static_cast<long long>(a.back()) * lead_inv % q;
    for (int i = 0; i <= dm; ++i) a[shift + i] = mod_q(a[shift + i] - c * m[i], q);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int q) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = mod_q(r[i + j] + static_cast<long long>(a[i]) * b[j], q);
  }
  return poly_mod(std::move(r), m, q);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, int q) {
  Poly result{1};
  base = poly_mod(std::move(base), m, q);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, q);
    base = poly_mulmod(base, base, m, q);
    e >>= 1;
  }
  return result;
}

Poly poly_sub(Poly a, const Poly& b, int q) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_q(a[i] - b[i], q);
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, int q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t checked_order(int q, int degree) {
  std::uint64_t order = 1;
  for (int i = 0; i < degree; ++i) {
    order *= static_cast<std::uint64_t>(q);
    if (order > kMaxFieldOrder) throw std::invalid_argument("field order exceeds 2^24");
  }
  return order;
}

bool x_has_full_order(int q, const Poly& poly) {
  const int degree = static_cast<int>(poly.size()) - 1;
  const std::uint64_t group = checked_order(q, degree) - 1;
  const Poly x{0, 1};
  if (poly_powmod(x, group, poly, q) != Poly{1}) return false;
  for (std::uint64_t p : prime_factors(group))
    if (poly_powmod(x, group / p, poly, q) == Poly{1}) return false;
  return true;
}

// clang-format off
constexpr std::array<const char*, 20> kBinaryPolys = {
    "11", "111", "1011", "10011", "100101", "1000011", "10000011",
    "100011101", "1000010001", "10000001001", "100000000101",
    "1000001010011", "10000000011011", "100000000101011",
    "1000000000000011", "10000000000101101", "100000000000001001",
    "1000000000000100111", "10000000000000100111",
    "100000000000000001001"};
constexpr std::array<const char*, 8> kTernaryPolys = {
    "11", "112", "1021", "10012", "100021", "1000012", "10000121", "100001002"};
// clang-format on

Poly from_high_to_low(std::string_view digits) {
  Poly p;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) p.push_back(*it - '0');
  return p;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_irreducible(int q, std::span<const int> poly_in) {
  Poly poly(poly_in.begin(), poly_in.end());
  trim(poly);
  const int degree = static_cast<int>(poly.size()) - 1;
  if (degree < 1) return false;
  if (degree == 1) return true;
  // Rabin: x^(q^M) = x mod f, and gcd(x^(q^(M/p)) - x, f) = 1 for primes p | M.
  auto frob_power = [&](int times) {
    Poly r{0, 1};
    for (int i = 0; i < times; ++i) r = poly_powmod(r, static_cast<std::uint64_t>(q), poly, q);
    return r;
  };
  const Poly x{0, 1};
  if (poly_sub(frob_power(degree), x, q) != Poly{}) return false;
  for (std::uint64_t p : prime_factors(static_cast<std::uint64_t>(degree))) {
    Poly g = poly_gcd(poly, poly_sub(frob_power(degree / static_cast<int>(p)), x, q), q);
    if (g.size() != 1) return false;
  }
  return true;
}

bool validate_primitive(const FieldParams& params) {
  if (!is_prime(static_cast<std::uint64_t>(params.q)) || params.degree < 1) return false;
  if (static_cast<int>(params.poly.size()) != params.degree + 1 || params.poly.back() != 1)
    return false;
  for (int c : params.poly)
    if (c < 0 || c >= params.q) return false;
  if (!is_irreducible(params.q, params.poly)) return false;
  return x_has_full_order(params.q, params.poly);
}

std::optional<std::vector<int>> builtin_primitive_poly(int q, int degree) {
  if (q == 2 && degree >= 1 && degree <= 20) return from_high_to_low(kBinaryPolys[degree - 1]);
  if (q == 3 && degree >= 1 && degree <= 8) return from_high_to_low(kTernaryPolys[degree - 1]);
  return std::nullopt;
}

namespace {

/// Monic degree-M candidates in numeric order of their low coefficients;
/// stops after `limit` primitive ones.
std::vector<std::vector<int>> primitive_polys(int q, int degree, std::size_t limit) {
  std::vector<std::vector<int>> out;
  const std::uint64_t count = checked_order(q, degree);
  for (std::uint64_t code = 0; code < count && out.size() < limit; ++code) {
    FieldParams params{q, degree, {}};
    std::uint64_t c = code;
    for (int i = 0; i < degree; ++i) {
      params.poly.push_back(static_cast<int>(c % q));
      c /= q;
    }
    params.poly.push_back(1);
    if (params.poly[0] == 0) continue;
    if (validate_primitive(params)) out.push_back(params.poly);
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> all_primitive_polys(int q, int degree) {
  return primitive_polys(q, degree, SIZE_MAX);
}

// ---------------------------------------------------------------------------

Field::Field(FieldParams params) : params_(std::move(params)) {
  order_ = static_cast<Elem>(checked_order(params_.q, params_.degree));
  const int q = params_.q;
  // Class of x; for M = 1 that is the root -c_0 of x + c_0.
  alpha_ = params_.degree == 1 ? static_cast<Elem>(mod_q(-params_.poly[0], q))
                               : static_cast<Elem>(q);
  if (order_ <= (Elem{1} << 20)) {
    const Elem group = order_ - 1;
    log_.assign(order_, 0);
    exp_.assign(2 * static_cast<std::size_t>(group), 0);
    Elem cur = 1;
    for (Elem e = 0; e < group; ++e) {
      exp_[e] = cur;
      exp_[e + group] = cur;
      log_[cur] = e;
      cur = mul_slow(cur, alpha_);
    }
  }
}

FieldPtr Field::make(const FieldParams& params) {
  if (!is_prime(static_cast<std::uint64_t>(params.q)))
    throw std::invalid_argument("base field order must be prime");
  if (params.degree < 1) throw std::invalid_argument("extension degree must be >= 1");
  checked_order(params.q, params.degree);
  if (!validate_primitive(params))
    throw std::invalid_argument("polynomial is not primitive over F_" + std::to_string(params.q));
  return FieldPtr(new Field(params));
}

FieldPtr Field::make(int q, int degree) {
  auto poly = builtin_primitive_poly(q, degree);
  if (!poly) {
    if (!is_prime(static_cast<std::uint64_t>(q)) || degree < 1)
      throw std::invalid_argument("invalid field parameters");
    auto all = primitive_polys(q, degree, 1);
    if (all.empty()) throw std::invalid_argument("no primitive polynomial found");
    poly = all.front();
  }
  return make(FieldParams{q, degree, *poly});
}

FieldPtr Field::parse(std::string_view text) {
  auto fail = [&]() -> FieldPtr {
    throw std::invalid_argument("bad field descriptor: " + std::string(text));
  };
  const auto caret = text.find('^');
  const auto slash = text.find('/');
  int q = 0, degree = 1;
  const std::string_view q_part = text.substr(0, std::min(caret, slash));
  if (std::from_chars(q_part.data(), q_part.data() + q_part.size(), q).ec != std::errc{}) fail();
  if (caret != std::string_view::npos) {
    const auto end = slash == std::string_view::npos ? text.size() : slash;
    const std::string_view m_part = text.substr(caret + 1, end - caret - 1);
    auto [ptr, ec] = std::from_chars(m_part.data(), m_part.data() + m_part.size(), degree);
    if (ec != std::errc{} || ptr != m_part.data() + m_part.size()) fail();
  }
  if (slash == std::string_view::npos) return make(q, degree);

  std::string_view coeffs = text.substr(slash + 1);
  std::vector<int> high_to_low;
  if (coeffs.find_first_of(", ") != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos < coeffs.size()) {
      while (pos < coeffs.size() && (coeffs[pos] == ',' || coeffs[pos] == ' ')) ++pos;
      if (pos >= coeffs.size()) break;
      int value = 0;
      auto [ptr, ec] = std::from_chars(coeffs.data() + pos, coeffs.data() + coeffs.size(), value);
      if (ec != std::errc{}) fail();
      high_to_low.push_back(value);
      pos = static_cast<std::size_t>(ptr - coeffs.data());
    }
  } else {
    for (char c : coeffs) {
      if (c < '0' || c > '9') fail();
      high_to_low.push_back(c - '0');
    }
  }
  if (static_cast<int>(high_to_low.size()) != degree + 1) fail();
  FieldParams params{q, degree, std::vector<int>(high_to_low.rbegin(), high_to_low.rend())};
  return make(params);
}

std::string Field::descriptor() const {
  std::string out = std::to_string(params_.q) + "^" + std::to_string(params_.degree) + "/";
  for (int i = params_.degree; i >= 0; --i) {
    if (params_.q > 10 && i != params_.degree) out += ',';
    out += std::to_string(params_.poly[static_cast<std::size_t>(i)]);
  }
  return out;
}

FieldPtr Field::base_field() const {
  if (params_.degree == 1) return shared_from_this();
  if (!base_) base_ = make(params_.q, 1);
  return base_;
}

bool Field::embeds(const Field& other) const {
  if (other == *this) return true;
  return other.params_.degree == 1 && other.params_.q == params_.q &&
         *base_field() == other;
}

Elem Field::add_digits(Elem a, Elem b, bool subtract) const {
  const Elem q = static_cast<Elem>(params_.q);
  Elem result = 0, place = 1;
  for (int i = 0; i < params_.degree; ++i) {
    const Elem da = a % q, db = b % q;
    a /= q;
    b /= q;
    const Elem d = subtract ? (da + q - db) % q : (da + db) % q;
    result += d * place;
    place *= q;
  }
  return result;
}

Elem Field::mul_slow(Elem a, Elem b) const {
  const int q = params_.q;
  const int degree = params_.degree;
  if (q == 2) {
    std::uint64_t product = 0;
    for (int i = 0; i < degree; ++i)
      if ((b >> i) & 1U) product ^= static_cast<std::uint64_t>(a) << i;
    std::uint64_t modulus = 0;
    for (int i = 0; i <= degree; ++i)
      if (params_.poly[static_cast<std::size_t>(i)]) modulus |= std::uint64_t{1} << i;
    for (int d = 2 * degree - 2; d >= degree; --d)
      if ((product >> d) & 1U) product ^= modulus << (d - degree);
    return static_cast<Elem>(product);
  }
  const auto da = digits(a);
  const auto db = digits(b);
  Poly product(2 * static_cast<std::size_t>(degree), 0);
  for (int i = 0; i < degree; ++i)
    for (int j = 0; j < degree; ++j)
      product[static_cast<std::size_t>(i + j)] =
          mod_q(product[static_cast<std::size_t>(i + j)] + da[i] * db[j], q);
  Poly reduced = poly_mod(std::move(product), params_.poly, q);
  reduced.resize(static_cast<std::size_t>(degree), 0);
  return from_digits(reduced);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (!log_.empty()) {
    const Elem group = order_ - 1;
    return exp_[(group - log_[a]) % group];
  }
  return pow(a, static_cast<std::uint64_t>(order_) - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!log_.empty()) {
    const std::uint64_t group = order_ - 1;
    return exp_[static_cast<std::size_t>((log_[a] * (e % group)) % group)];
  }
  Elem result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::frobenius(Elem a, std::uint64_t j) const {
  j %= static_cast<std::uint64_t>(params_.degree);
  Elem r = a;
  for (std::uint64_t i = 0; i < j; ++i) r = pow(r, static_cast<std::uint64_t>(params_.q));
  return r;
}

bool Field::in_base_field(Elem a) const { return pow(a, static_cast<std::uint64_t>(params_.q)) == a; }

Elem Field::exp(std::uint64_t e) const {
  const std::uint64_t group = order_ - 1;
  if (!exp_.empty()) return exp_[static_cast<std::size_t>(e % group)];
  return pow(alpha_, e % group);
}

std::uint64_t Field::log(Elem a) const {
  if (a == 0) throw std::domain_error("log of zero");
  if (!log_.empty()) return log_[a];
  Elem cur = 1;
  for (std::uint64_t e = 0; e + 1 < order_; ++e) {
    if (cur == a) return e;
    cur = mul(cur, alpha_);
  }
  throw std::logic_error("element outside multiplicative group");
}

std::vector<int> Field::digits(Elem a) const {
  std::vector<int> out(static_cast<std::size_t>(params_.degree));
  const Elem q = static_cast<Elem>(params_.q);
  for (auto& d : out) {
    d = static_cast<int>(a % q);
    a /= q;
  }
  return out;
}

Elem Field::from_digits(std::span<const int> digits) const {
  Elem result = 0, place = 1;
  for (int d : digits) {
    result += static_cast<Elem>(mod_q(d, params_.q)) * place;
    place *= static_cast<Elem>(params_.q);
  }
  return result;
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldPtr field, Elem code) : field_(std::move(field)), code_(code) {
  if (!field_) throw std::invalid_argument("null field");
  if (code_ >= field_->order()) throw std::out_of_range("element code out of range");
}

namespace {
const FieldPtr& common(const FieldElement& a, const FieldElement& b) {
  if (!(*a.field() == *b.field())) throw std::invalid_argument("mismatched field parameters");
  return a.field();
}
}  // namespace

FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }

FieldElement FieldElement::frobenius(std::uint64_t j) const {
  return {field_, field_->frobenius(code_, j)};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f->add(a.code_, b.code_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f->sub(a.code_, b.code_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f->mul(a.code_, b.code_)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return *a.field_ == *b.field_ && a.code_ == b.code_;
}

}  // namespace sumrank
