#include <gtest/gtest.h>

#include <random>

#include "hypercert/field.hpp"
#include "oracles.hpp"

using namespace hypercert;

namespace {

struct FieldCase {
  std::uint32_t p, m;
};

class SmallFields : public ::testing::TestWithParam<FieldCase> {};

TEST_P(SmallFields, ArithmeticMatchesSchoolbookPolynomials) {
  const auto [p, m] = GetParam();
  const FieldPtr f = build_field(p, m);
  ASSERT_EQ(f->order(), static_cast<std::uint32_t>(std::pow(p, m)));
  for (elem_t a = 0; a < f->order(); ++a) {
    for (elem_t b = 0; b < f->order(); ++b) {
      ASSERT_EQ(f->mul(a, b), oracle::poly_mul(*f, a, b)) << a << "*" << b;
      ASSERT_EQ(f->add(a, b), oracle::poly_add(*f, a, b)) << a << "+" << b;
    }
    if (a) ASSERT_EQ(f->inv(a), oracle::brute_inverse(*f, a));
    ASSERT_EQ(f->add(a, f->neg(a)), 0u);
  }
}

TEST_P(SmallFields, ModulusIsIrreducibleAndFirstInSearchOrder) {
  const auto [p, m] = GetParam();
  const FieldPtr f = build_field(p, m);
  ASSERT_TRUE(oracle::brute_irreducible(f->modulus(), p));
  if (m == 1) return;
  // No monic irreducible of degree m has a smaller base-p code.
  std::uint64_t own = 0;
  for (std::size_t i = m; i-- > 0;) own = own * p + f->modulus()[i];
  for (std::uint64_t code = 0; code < own; ++code) {
    std::vector<std::uint32_t> poly(m + 1);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < m; ++i) {
      poly[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    poly[m] = 1;
    EXPECT_FALSE(oracle::brute_irreducible(poly, p)) << "earlier irreducible with code " << code;
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, SmallFields,
                         ::testing::Values(FieldCase{2, 1}, FieldCase{3, 1}, FieldCase{5, 1}, FieldCase{2, 2},
                                           FieldCase{2, 3}, FieldCase{3, 2}, FieldCase{2, 4}, FieldCase{5, 2},
                                           FieldCase{3, 3}));

TEST(Field, KnownModuli) {
  EXPECT_EQ(build_field(2, 2)->modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(build_field(2, 3)->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(build_field(3, 2)->modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(Field, RandomAxiomsOnLargerField) {
  const FieldPtr f = build_field(3, 6);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<elem_t> pick(0, f->order() - 1);
  for (int i = 0; i < 2000; ++i) {
    const elem_t a = pick(rng), b = pick(rng), c = pick(rng);
    ASSERT_EQ(f->mul(a, b), oracle::poly_mul(*f, a, b));
    ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
    if (a) ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
  }
}

TEST(Field, SubfieldIsFixedByFrobenius) {
  const FieldPtr f = build_field(2, 4);
  const auto sub = f->subfield_elements(4);
  ASSERT_EQ(sub.size(), 4u);
  for (auto x : sub) EXPECT_EQ(f->pow(x, 4), x);
  EXPECT_TRUE(f->contains_subfield(4));
  EXPECT_FALSE(f->contains_subfield(8));
  // Closed under the field operations.
  for (auto x : sub)
    for (auto y : sub) {
      EXPECT_NE(std::find(sub.begin(), sub.end(), f->mul(x, y)), sub.end());
      EXPECT_NE(std::find(sub.begin(), sub.end(), f->add(x, y)), sub.end());
    }
}

TEST(Field, FromIntReducesNegatives) {
  const FieldPtr f = build_field(5, 1);
  EXPECT_EQ(f->from_int(-3), 2u);
  EXPECT_EQ(f->from_int(12), 2u);
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(build_field(4, 1), std::invalid_argument);
  EXPECT_THROW(build_field(2, 0), std::invalid_argument);
  EXPECT_THROW(build_field(2, 40), std::invalid_argument);
}

TEST(FieldElement, MixingFieldsThrows) {
  const FieldPtr f = build_field(2, 2), g = build_field(2, 3);
  const FieldElement a(f, 1), b(g, 1);
  EXPECT_THROW((void)(a + b), std::invalid_argument);
  EXPECT_EQ((FieldElement(f, 2) * FieldElement(f, 2)).code(), f->mul(2, 2));
}

}  // namespace
