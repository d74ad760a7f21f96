#include <gtest/gtest.h>

#include "hypercert/errors.hpp"
#include "hypercert/unipotent_group.hpp"
#include "oracles.hpp"

using namespace hypercert;

namespace {

Matrix model(const GroupElement& g, int eps) {
  const FieldPtr& f = g.params[0].field();
  return oracle::heisenberg_matrix(f, g.params[0].code(), g.params[1].code(), g.params[2].code(), eps);
}

// The multiplication law agrees with 3x3 unitriangular matrices, which are a
// faithful model of the A2 unipotent group.
TEST(GroupLaw, MatchesUnitriangularModel) {
  for (int eps : {1, -1}) {
    for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}}) {
      const auto g = enumerate_group(RootSystemTag::a2_unipotent(), build_field(p, r), p == 2 && r == 2 ? 4 : p, eps);
      ASSERT_EQ(g.order(), std::size_t{g.q()} * g.q() * g.q());
      for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j) {
          const auto prod = g.law().multiply(g.element(i), g.element(j));
          ASSERT_EQ(model(prod, eps), model(g.element(i), eps) * model(g.element(j), eps));
          ASSERT_EQ(g.element(g.multiply_index(i, j)), prod);
        }
    }
  }
}

TEST(GroupLaw, SignIsReadFromTheAlgebra) {
  const FieldPtr f = build_field(3, 1);
  EXPECT_EQ(UnipotentGroupLaw::from_algebra(heisenberg_algebra(3, 1, f, 1)).commutator_sign(), 1);
  EXPECT_EQ(UnipotentGroupLaw::from_algebra(heisenberg_algebra(3, 1, f, -1)).commutator_sign(), -1);
  EXPECT_THROW(UnipotentGroupLaw(RootSystemTag::a1(), 2), std::invalid_argument);
}

TEST(GroupTable, AxiomsAndExponent) {
  const auto heis2 = check_group_axioms(enumerate_group(RootSystemTag::a2_unipotent(), build_field(2, 1), 2));
  EXPECT_TRUE(heis2.ok());
  EXPECT_EQ(heis2.exponent, 4u);  // dihedral of order 8
  const auto heis3 = check_group_axioms(enumerate_group(RootSystemTag::a2_unipotent(), build_field(3, 1), 3));
  EXPECT_TRUE(heis3.ok());
  EXPECT_EQ(heis3.exponent, 3u);
  const auto line = check_group_axioms(enumerate_group(RootSystemTag::a1(), build_field(2, 3), 8));
  EXPECT_TRUE(line.ok());
  EXPECT_EQ(line.exponent, 2u);
}

TEST(GroupTable, InversesAndOrders) {
  const auto g = enumerate_group(RootSystemTag::a2_unipotent(), build_field(2, 2), 4);
  EXPECT_EQ(g.order(), 64u);
  EXPECT_EQ(g.identity_index(), 0u);
  for (std::size_t i = 0; i < g.order(); ++i) {
    EXPECT_EQ(g.multiply_index(i, g.inverse_index(i)), 0u);
    EXPECT_EQ(g.index_of(g.element(i)), i);
    const auto ord = g.element_order(i);
    EXPECT_TRUE(ord == 1 || ord == 2 || ord == 4);
  }
}

TEST(GroupAction, IsAHomomorphismForStandardModules) {
  const FieldPtr f4 = build_field(2, 2);
  const auto st = steinberg(f4, 2, 2);
  const auto g1 = enumerate_group(RootSystemTag::a1(), f4, 4);
  const auto rep = check_group_homomorphism(st, g1);
  EXPECT_TRUE(rep.ok);
  EXPECT_TRUE(rep.exhaustive);
  EXPECT_EQ(rep.pairs_checked, 16u);

  const auto alg = heisenberg_algebra(2, 1, build_field(2, 1));
  const auto reg = regular_module(alg);
  const auto g2 = enumerate_group(alg);
  EXPECT_TRUE(check_group_homomorphism(reg, g2).ok);
}

// U(F_q) acts faithfully on the regular module: distinct group elements have
// distinct images, and the action is exhaustively multiplicative.
TEST(GroupAction, RegularModuleIsAFaithfulHomomorphism) {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}}) {
    const auto alg = heisenberg_algebra(p, r, build_field(p, r));
    const auto reg = regular_module(alg);
    const auto g = enumerate_group(alg);
    const auto hom = check_group_homomorphism(reg, g);
    EXPECT_TRUE(hom.ok);
    EXPECT_TRUE(hom.exhaustive);
    const auto images = group_images(reg, g);
    for (std::size_t i = 0; i < images.size(); ++i)
      for (std::size_t j = i + 1; j < images.size(); ++j) ASSERT_FALSE(images[i] == images[j]) << i << " " << j;
  }
}

TEST(GroupAction, CorruptedModuleBreaksHomomorphism) {
  const FieldPtr f4 = build_field(2, 2);
  const auto st = steinberg(f4, 2, 2);
  std::vector<Matrix> ops(st.ops(0).begin(), st.ops(0).end());
  ops[1](2, 0) = 0;
  const RationalModule bad(f4, st.tag(), st.r(), st.weights(), {ops}, true, "corrupted");
  const auto rep = check_group_homomorphism(bad, enumerate_group(RootSystemTag::a1(), f4, 4));
  EXPECT_FALSE(rep.ok);
  ASSERT_TRUE(rep.counterexample.has_value());
}

TEST(GroupAction, NormMatrixIsSumOfImages) {
  const FieldPtr f = build_field(3, 1);
  const auto m = sym_power(f, 1, 2);
  const auto g = enumerate_group(RootSystemTag::a1(), f, 3);
  Matrix sum = Matrix::zero(f, 3, 3);
  for (elem_t a = 0; a < 3; ++a) sum += oracle::sym_substitution(f, 2, a);
  EXPECT_EQ(norm_matrix(m, g), sum);
  const auto images = group_images(m, g);
  ASSERT_EQ(images.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_EQ(images[i], group_action_matrix(m, g.element(i)));
}

TEST(GroupAction, MismatchedKindsThrow) {
  const FieldPtr f = build_field(2, 1);
  const auto g = enumerate_group(RootSystemTag::a1(), f, 2);
  const UnipotentGroupLaw law(RootSystemTag::a2_unipotent(), 1);
  EXPECT_THROW(law.multiply(g.element(0), g.element(1)), IncompatibleError);
}

}  // namespace
