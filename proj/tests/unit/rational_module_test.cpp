#include <gtest/gtest.h>

#include "hypercert/errors.hpp"
#include "hypercert/rational_module.hpp"
#include "oracles.hpp"

using namespace hypercert;

namespace {

FieldElement el(const FieldPtr& f, elem_t c) { return {f, c}; }

TEST(SymPower, ActionIsSubstitution) {
  for (auto [p, r, d] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 1}, {3, 1, 2}, {3, 2, 4}, {5, 1, 4}, {2, 2, 3}}) {
    const FieldPtr f = build_field(p, r);
    const auto m = sym_power(f, r, d);
    ASSERT_EQ(m.dim(), d + 1);
    for (elem_t a = 0; a < f->order(); ++a)
      ASSERT_EQ(group_element_action(m, 0, el(f, a)), oracle::sym_substitution(f, d, a)) << "Sym^" << d << " a=" << a;
    EXPECT_EQ(m.weights().front(), (Weight{{static_cast<int>(d)}}));
    EXPECT_EQ(m.weights().back(), (Weight{{-static_cast<int>(d)}}));
  }
}

TEST(Steinberg, ActionIsTensorOfFrobeniusTwistedSymmetricPowers) {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    const FieldPtr f = build_field(p, r);
    const auto st = steinberg(f, p, r);
    std::size_t expect_dim = 1;
    for (std::uint32_t i = 0; i < r; ++i) expect_dim *= p;
    ASSERT_EQ(st.dim(), expect_dim);
    for (elem_t a = 0; a < f->order(); ++a) {
      Matrix expect = Matrix::identity(f, 1);
      elem_t ai = a;
      for (std::uint32_t i = 0; i < r; ++i) {
        expect = kron(expect, oracle::sym_substitution(f, p - 1, ai));
        ai = f->pow(ai, p);
      }
      ASSERT_EQ(group_element_action(st, 0, el(f, a)), expect) << f->name() << " a=" << a;
    }
  }
}

TEST(Validate, AllConstructorsPass) {
  const FieldPtr f4 = build_field(2, 2), f9 = build_field(3, 2), f3 = build_field(3, 1);
  std::vector<RationalModule> mods{
      trivial_module(f4, RootSystemTag::a1(), 2),
      natural_sl2(f4, 2),
      sym_power(f9, 2, 5),
      frobenius_twist(sym_power(f9, 2, 2), 1),
      tensor(natural_sl2(f9, 2), sym_power(f9, 2, 2)),
      direct_sum(natural_sl2(f3, 1), trivial_module(f3, RootSystemTag::a1(), 1)),
      steinberg(f9, 3, 2),
      regular_module(line_algebra(2, 2, f4)),
      regular_module(heisenberg_algebra(2, 1, build_field(2, 1))),
      regular_module(heisenberg_algebra(3, 1, f3)),
      pullback_additive(steinberg(build_field(2, 2), 2, 1), AdditivePolynomial::lang_type(f4, 2)),
  };
  for (const auto& m : mods) {
    const auto rep = validate(m);
    EXPECT_TRUE(rep.all_passed()) << m.name();
    for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << m.name() << " " << c.invariant << ": " << c.witness;
  }
}

TEST(Validate, CorruptedOperatorFailsGroupLaw) {
  const FieldPtr f = build_field(2, 2);
  const auto st = steinberg(f, 2, 2);
  std::vector<Matrix> ops(st.ops(0).begin(), st.ops(0).end());
  ops[1](2, 0) = 0;
  const RationalModule bad(f, st.tag(), st.r(), st.weights(), {ops}, true, "corrupted");
  const auto rep = validate(bad);
  EXPECT_FALSE(rep.all_passed());
  EXPECT_FALSE(rep.get("group_law").passed);
  EXPECT_FALSE(rep.get("group_law").witness.empty());
}

TEST(Validate, WrongWeightsFailWeightShift) {
  const FieldPtr f = build_field(3, 1);
  const auto m = sym_power(f, 1, 2);
  auto weights = m.weights();
  std::swap(weights[0], weights[2]);
  const RationalModule bad(f, m.tag(), 1, weights, {std::vector<Matrix>(m.ops(0).begin(), m.ops(0).end())});
  const auto rep = validate(bad);
  EXPECT_FALSE(rep.get("weight_shift").passed);
  EXPECT_TRUE(rep.get("identity").passed);
}

TEST(Validate, IncoherentDividedPowersDetected) {
  // A_1 = A_2 = E nilpotent with A_1 A_1 != C(2,1) A_2 in characteristic 3.
  const FieldPtr f = build_field(3, 1);
  Matrix e(f, 3, 3);
  e(1, 0) = 1;
  e(2, 1) = 1;
  const RationalModule bad(f, RootSystemTag::a1(), 1, std::vector<Weight>(3, Weight{{0}}),
                           {{Matrix::identity(f, 3), e, e}}, false, "incoherent");
  const auto rep = validate(bad);
  EXPECT_FALSE(rep.get("divided_power_coherence").passed);
  EXPECT_TRUE(rep.get("weight_shift").vacuous);
}

TEST(Validate, IdentityOperatorMustBeIdentity) {
  const FieldPtr f = build_field(2, 1);
  const RationalModule bad(f, RootSystemTag::a1(), 1, {Weight{{0}}}, {{Matrix::zero(f, 1, 1)}});
  EXPECT_FALSE(validate(bad).get("identity").passed);
  EXPECT_THROW((void)validate(bad).get("nonexistent"), std::out_of_range);
}

TEST(Pullback, LowOperatorsAgreeAndActionComposes) {
  const FieldPtr f = build_field(2, 4);  // contains F_4 with room for t - t^4
  const auto st = steinberg(f, 2, 2);
  const auto lang = AdditivePolynomial::lang_type(f, st.q());
  const auto pb = pullback_additive(st, lang);
  EXPECT_FALSE(pb.has_weights());
  for (std::uint32_t n = 0; n < st.q(); ++n) EXPECT_EQ(pb.op(0, n), st.op(0, n)) << n;
  for (elem_t a = 0; a < f->order(); ++a) {
    const FieldElement fa = lang.evaluate(el(f, a));
    ASSERT_EQ(group_element_action(pb, 0, el(f, a)), group_element_action(st, 0, fa));
    // On F_q the pullback is trivial.
    if (f->pow(a, st.q()) == a) EXPECT_TRUE(group_element_action(pb, 0, el(f, a)).is_identity());
  }
}

TEST(AdditivePolynomial, RejectsNonAdditiveExponents) {
  const FieldPtr f = build_field(3, 2);
  EXPECT_THROW(AdditivePolynomial(f, {{2, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(AdditivePolynomial(f, {{1, 1}, {9, 2}}));
  const auto lang = AdditivePolynomial::lang_type(f, 3);
  EXPECT_EQ(lang.degree(), 3u);
  for (elem_t a = 0; a < f->order(); ++a) {
    const elem_t expect = f->sub(a, f->pow(a, 3));
    EXPECT_EQ(lang.evaluate(el(f, a)).code(), expect);
  }
}

TEST(RegularModule, DimensionsAndLowOperatorsAreLeftMultiplication) {
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}}) {
    const FieldPtr f = build_field(p, r);
    const auto alg = heisenberg_algebra(p, r, f);
    const auto m = regular_module(alg);
    ASSERT_EQ(m.dim(), std::size_t{alg.q()} * alg.q() * alg.q());
    const auto left = regular_representation(alg);
    for (std::size_t root = 0; root < 3; ++root)
      for (std::uint32_t n = 0; n < alg.q(); ++n)
        ASSERT_EQ(m.op(root, n), left[alg.root_power_index(root, n)]) << "root " << root << " n " << n;
    EXPECT_TRUE(validate(m).all_passed());
  }
}

TEST(RegularModule, LineCaseIsLeftMultiplication) {
  const FieldPtr f = build_field(3, 2);
  const auto alg = line_algebra(3, 2, f);
  const auto m = regular_module(alg);
  ASSERT_EQ(m.dim(), 9u);
  const auto left = regular_representation(alg);
  for (std::uint32_t n = 0; n < 9; ++n) EXPECT_EQ(m.op(0, n), left[n]);
}

TEST(RationalModule, ShapeErrors) {
  const FieldPtr f = build_field(2, 1);
  EXPECT_THROW(RationalModule(f, RootSystemTag::a1(), 1, {Weight{{0}}}, {{Matrix::identity(f, 2)}}),
               std::invalid_argument);
  EXPECT_THROW(RationalModule(f, RootSystemTag::a1(), 2, {Weight{{0}}}, {{Matrix::identity(f, 1)}}), IncompatibleError);
  EXPECT_THROW(tensor(natural_sl2(f, 1), natural_sl2(build_field(3, 1), 1)), IncompatibleError);
  EXPECT_THROW(y_operator(natural_sl2(f, 1), 0, 2), std::out_of_range);
}

TEST(YOperators, FoldDividedPowersModQMinusOne) {
  const FieldPtr f = build_field(3, 1);
  const auto m = sym_power(f, 1, 5);  // N = 6 > q = 3
  // y_1 = A_1 + A_3 + A_5, y_2 = A_2 + A_4
  EXPECT_EQ(y_operator(m, 0, 1), m.op(0, 1) + m.op(0, 3) + m.op(0, 5));
  EXPECT_EQ(y_operator(m, 0, 2), m.op(0, 2) + m.op(0, 4));
  EXPECT_TRUE(y_operator(m, 0, 0).is_identity());
}

}  // namespace
