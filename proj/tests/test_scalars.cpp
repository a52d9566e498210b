#include <gtest/gtest.h>

#include "generators.hpp"
#include "trihopf/scalars.hpp"

using namespace trihopf;

TEST(Rational, MakeRationalCanonicalizes) {
  const Rational q = make_rational("6", "-4");
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(make_rational("0", "7").get_den(), 1);
}

TEST(Rational, RejectsZeroDenominatorAndGarbage) {
  EXPECT_THROW(make_rational("1", "0"), DivisionByZero);
  EXPECT_THROW(make_rational("1x", "2"), FormatError);
  EXPECT_THROW(make_rational("", "2"), FormatError);
}

TEST(CycScalar, RationalSum) {
  EXPECT_EQ(CycScalar(make_rational(1, 2)) + CycScalar(make_rational(1, 3)), CycScalar(make_rational(5, 6)));
}

TEST(CycScalar, ZetaFourSquared) {
  const CycScalar i = root_of_unity(4, 1);
  EXPECT_EQ(i * i, CycScalar(-1));
  EXPECT_TRUE((i * i).is_rational());
}

TEST(CycScalar, ZetaSixSquaredReducesModPhi6) {
  // Phi_6 = x^2 - x + 1, so x^2 = x - 1.
  const CycScalar z = root_of_unity(6, 1);
  EXPECT_EQ(z * z, z - CycScalar(1));
  const CycScalar sq = z * z;
  ASSERT_EQ(sq.order(), 6);
  EXPECT_EQ(sq.coeffs(), (std::vector<Rational>{-1, 1}));
}

TEST(CycScalar, RootOfUnityExamples) {
  EXPECT_TRUE(root_of_unity(1, 0).is_one());
  EXPECT_EQ(root_of_unity(2, 1), CycScalar(-1));
  const CycScalar w = root_of_unity(3, 1);
  EXPECT_TRUE((w * w * w).is_one());
  EXPECT_EQ(root_of_unity(5, -1), root_of_unity(5, 4));
}

TEST(CycScalar, CoefficientLengthIsEulerPhi) {
  for (int n : {3, 4, 5, 7, 8, 9, 12, 15, 16}) {
    const CycScalar z = root_of_unity(n, 1);
    EXPECT_EQ(static_cast<int>(z.coeffs().size()), detail::euler_phi(n)) << n;
  }
}

TEST(CycScalar, InverseOfZeroThrows) {
  EXPECT_THROW(CycScalar().inverse(), DivisionByZero);
  EXPECT_THROW(CycScalar(1) / CycScalar(0), DivisionByZero);
}

TEST(CycScalar, MixedOrdersPromoteToLcm) {
  const CycScalar s = root_of_unity(3, 1) + root_of_unity(4, 1);
  EXPECT_EQ(s.order(), 12);
  EXPECT_EQ(s - root_of_unity(4, 1), root_of_unity(3, 1));
}

TEST(CycScalar, EqualityAcrossRepresentations) {
  // zeta_6^2 = zeta_3
  EXPECT_EQ(root_of_unity(6, 2), root_of_unity(3, 1));
  EXPECT_EQ(root_of_unity(12, 4).minimal().order(), 3);
  EXPECT_EQ(root_of_unity(3, 1).embed(12), root_of_unity(12, 4));
  EXPECT_FALSE(root_of_unity(4, 1) == CycScalar(1));
}

TEST(CycScalar, MinimalOfSqrtMinusThree) {
  // zeta_3 - zeta_3^2 = sqrt(-3) lies in Q(zeta_3), written in Q(zeta_12).
  const CycScalar x = (root_of_unity(12, 4) - root_of_unity(12, 8));
  EXPECT_EQ(x.minimal().order(), 3);
}

TEST(CycScalar, Printing) {
  EXPECT_EQ(CycScalar(make_rational(-3, 4)).str(), "-3/4");
  EXPECT_EQ(root_of_unity(6, 2).str(), "z3");
  EXPECT_EQ((CycScalar(2) - root_of_unity(4, 1)).str(), "2-z4");
}

TEST(CycScalarProperty, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(testgen::kSeed);
  for (int trial = 0; trial < 150; ++trial) {
    const CycScalar a = testgen::scalar(rng, testgen::field_order(rng));
    const CycScalar b = testgen::scalar(rng, testgen::field_order(rng));
    const CycScalar c = testgen::scalar(rng, testgen::field_order(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
  }
}

TEST(CycScalarProperty, EmbeddingIsRingHomomorphism) {
  std::mt19937 rng(testgen::kSeed + 1);
  const std::pair<int, int> towers[] = {{3, 6}, {3, 12}, {4, 8}, {4, 12}, {5, 15}, {8, 16}, {1, 9}};
  for (int trial = 0; trial < 100; ++trial) {
    const auto [n, m] = towers[trial % 7];
    const CycScalar a = testgen::scalar(rng, n);
    const CycScalar b = testgen::scalar(rng, n);
    const CycScalar ea = CycScalar::from_coeffs(m, a.embed(m).coeffs());
    const CycScalar eb = CycScalar::from_coeffs(m, b.embed(m).coeffs());
    EXPECT_EQ(ea * eb, (a * b));
    EXPECT_EQ(ea + eb, (a + b));
    EXPECT_EQ((a * b).embed(m).coeffs(), (ea * eb).embed(m).coeffs());
  }
}

TEST(CycScalarProperty, PrimitiveRootHasExactOrder) {
  for (int n = 1; n <= 16; ++n) {
    const CycScalar z = root_of_unity(n, 1);
    CycScalar p = 1;
    for (int j = 1; j < n; ++j) {
      p *= z;
      EXPECT_FALSE(p.is_one()) << "n=" << n << " j=" << j;
    }
    p *= z;
    EXPECT_TRUE(p.is_one()) << n;
  }
}
