// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sumrank/field.hpp"

using namespace sumrank;

namespace {

FieldPtr f4() { return Field::parse("2^2/111"); }
FieldPtr f8() { return Field::parse("2^3/1011"); }

}  // namespace

TEST(Field, AddExamples) {
  auto f = f4();
  const Elem a = f->alpha();
  EXPECT_EQ(f->add(a, a), 0u);
  for (Elem x = 0; x < f->order(); ++x) EXPECT_EQ(f->add(0, x), x);
  auto f3 = Field::prime(3);
  EXPECT_EQ(f3->add(1, 2), 0u);
}

TEST(Field, MulExamples) {
  auto f = f4();
  const Elem a = f->alpha();
  EXPECT_EQ(f->mul(a, a), f->add(a, 1));
  for (Elem x = 0; x < f->order(); ++x) EXPECT_EQ(f->mul(1, x), x);
  auto g = f8();
  EXPECT_EQ(g->pow(g->alpha(), 3), g->add(g->alpha(), 1));
}

TEST(Field, InverseExamples) {
  auto f = f4();
  EXPECT_EQ(f->inv(1), 1u);
  EXPECT_EQ(f->inv(f->alpha()), f->add(f->alpha(), 1));
  auto g = f8();
  const Elem a2p1 = g->add(g->mul(g->alpha(), g->alpha()), 1);
  EXPECT_EQ(g->inv(g->alpha()), a2p1);
  // Extended-Euclid oracle: x^-1 mod x^3+x+1.
  const auto inv = oracle::inverse({0, 1, 0}, {1, 1, 0, 1}, 2);
  EXPECT_EQ(oracle::to_code(inv, 2), a2p1);
  EXPECT_THROW(g->inv(0), std::domain_error);
}

TEST(Field, Frobenius) {
  auto f = f4();
  for (Elem x = 0; x < f->order(); ++x) EXPECT_EQ(f->frobenius(x, 0), x);
  EXPECT_EQ(f->frobenius(f->alpha(), 1), f->add(f->alpha(), 1));
  auto g = f8();
  EXPECT_EQ(g->frobenius(g->alpha(), 3), g->alpha());
  for (Elem x = 0; x < g->order(); ++x) {
    EXPECT_EQ(g->frobenius(x, 3), x);
    for (Elem y = 0; y < g->order(); ++y) {
      EXPECT_EQ(g->frobenius(g->add(x, y), 1), g->add(g->frobenius(x, 1), g->frobenius(y, 1)));
      EXPECT_EQ(g->frobenius(g->mul(x, y), 2), g->mul(g->frobenius(x, 2), g->frobenius(y, 2)));
    }
  }
}

TEST(Field, BaseFieldMembership) {
  auto f = f4();
  EXPECT_TRUE(f->in_base_field(0));
  EXPECT_TRUE(f->in_base_field(1));
  EXPECT_FALSE(f->in_base_field(f->alpha()));
  auto f16 = Field::make(2, 4);
  const Elem a5 = f16->pow(f16->alpha(), 5);
  EXPECT_NE(f16->pow(f16->alpha(), 10), a5);
  EXPECT_FALSE(f16->in_base_field(a5));
  for (auto d : {"2^3/1011", "3^2/112", "2^4/10011", "3^3/1021"}) {
    auto g = Field::parse(d);
    int count = 0;
    for (Elem x = 0; x < g->order(); ++x) count += g->in_base_field(x);
    EXPECT_EQ(count, g->q()) << d;
  }
}

TEST(Field, ValidatePrimitive) {
  EXPECT_TRUE(validate_primitive({2, 2, {1, 1, 1}}));
  EXPECT_FALSE(validate_primitive({2, 2, {1, 0, 1}}));
  EXPECT_FALSE(validate_primitive({2, 4, {1, 1, 1, 1, 1}}));
  EXPECT_TRUE(is_irreducible(2, std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_THROW(Field::make({2, 2, {1, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(Field::make({4, 1, {1, 1}}), std::invalid_argument);
}

TEST(Field, BuiltinTableIsPrimitive) {
  for (int m = 1; m <= 20; ++m) {
    auto p = builtin_primitive_poly(2, m);
    ASSERT_TRUE(p) << m;
    EXPECT_TRUE(validate_primitive({2, m, *p})) << m;
  }
  for (int m = 1; m <= 8; ++m) {
    auto p = builtin_primitive_poly(3, m);
    ASSERT_TRUE(p) << m;
    EXPECT_TRUE(validate_primitive({3, m, *p})) << m;
  }
}

TEST(Field, PrimitivePolynomialCounts) {
  // phi(q^M - 1) / M primitive polynomials of degree M.
  EXPECT_EQ(all_primitive_polys(2, 4).size(), 2u);
  EXPECT_EQ(all_primitive_polys(2, 5).size(), 6u);
  EXPECT_EQ(all_primitive_polys(2, 6).size(), 6u);
  EXPECT_EQ(all_primitive_polys(2, 8).size(), 16u);
  EXPECT_EQ(all_primitive_polys(3, 2).size(), 2u);
  EXPECT_EQ(all_primitive_polys(3, 3).size(), 4u);
}

TEST(Field, ArithmeticMatchesPolynomialOracle) {
  for (auto d : {"2^3/1011", "2^4/11001", "3^2/112", "3^3/1021", "2^5/100101"}) {
    auto f = Field::parse(d);
    const auto& poly = f->params().poly;
    for (Elem a = 0; a < f->order(); ++a)
      for (Elem b = 0; b < f->order(); ++b) {
        const auto pa = oracle::from_code(a, f->q(), f->degree());
        const auto pb = oracle::from_code(b, f->q(), f->degree());
        ASSERT_EQ(f->mul(a, b), oracle::to_code(oracle::mulmod(pa, pb, poly, f->q()), f->q()))
            << d << " " << a << "*" << b;
        oracle::Poly sum(pa.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (pa[i] + pb[i]) % f->q();
        ASSERT_EQ(f->add(a, b), oracle::to_code(sum, f->q()));
      }
    for (Elem a = 1; a < f->order(); ++a) {
      const auto inv = oracle::inverse(oracle::from_code(a, f->q(), f->degree()), poly, f->q());
      ASSERT_EQ(f->inv(a), oracle::to_code(inv, f->q())) << d << " inv " << a;
    }
  }
}

TEST(Field, AxiomsOnSmallFields) {
  for (auto d : {"2^2/111", "2^3/1011", "3^2/112"}) {
    auto f = Field::parse(d);
    const Elem n = f->order();
    for (Elem a = 0; a < n; ++a) {
      EXPECT_EQ(f->add(a, f->neg(a)), 0u);
      if (a) EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
          ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
          ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
        }
    }
  }
}

TEST(Field, DiscreteLogIsUnique) {
  for (auto d : {"2^4/10011", "3^2/112", "2^7/10001001"}) {
    auto f = Field::parse(d);
    std::set<Elem> seen;
    for (std::uint64_t e = 0; e + 1 < f->order(); ++e) {
      const Elem x = f->exp(e);
      EXPECT_TRUE(seen.insert(x).second);
      EXPECT_EQ(f->log(x), e);
    }
    EXPECT_EQ(seen.size(), f->order() - 1);
  }
}

TEST(Field, SlowPathAgreesWithTables) {
  // 2^21 has no log tables; compare against the oracle on a sample.
  auto f = Field::make(2, 21);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Elem> d(0, f->order() - 1);
  for (int i = 0; i < 2000; ++i) {
    const Elem a = d(rng), b = d(rng);
    const auto prod = oracle::mulmod(oracle::from_code(a, 2, 21), oracle::from_code(b, 2, 21),
                                     f->params().poly, 2);
    ASSERT_EQ(f->mul(a, b), oracle::to_code(prod, 2));
    if (a) ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
  }
}

TEST(Field, DescriptorRoundTrip) {
  auto f = Field::parse("2^3/1011");
  EXPECT_EQ(f->descriptor(), "2^3/1011");
  EXPECT_EQ(f->q(), 2);
  EXPECT_EQ(f->degree(), 3);
  EXPECT_EQ(*Field::parse(f->descriptor()), *f);
  EXPECT_EQ(Field::parse("2^4")->descriptor(), "2^4/10011");
  EXPECT_THROW(Field::parse("garbage"), std::invalid_argument);
  EXPECT_THROW(Field::parse("2^3/1111"), std::invalid_argument);
}

TEST(Field, ElementWrapper) {
  auto f = f4();
  auto g = f8();
  FieldElement a(f, f->alpha());
  EXPECT_EQ((a * a).code(), f->add(f->alpha(), 1));
  EXPECT_EQ((a + a).code(), 0u);
  EXPECT_THROW(a + FieldElement(g, 1), std::invalid_argument);
  EXPECT_THROW(FieldElement(f, 4), std::out_of_range);
}
