#include <gtest/gtest.h>

#include "radical_oracle.hpp"
#include "sweedler_h4.hpp"
#include "trihopf/constructions.hpp"

using namespace trihopf;

namespace {

HopfData sweedler() {
  const auto z2 = cyclic_group(2);
  return modified_supergroup_algebra(z2, sign_representation(z2, {{1, -1}}), 1).hopf;
}

HopfData with_antipode(const HopfData& h, Mat s) {
  std::vector<int> parity(h.parity().begin(), h.parity().end());
  return HopfData(h.dim(), h.is_super(), parity, h.unit(), h.mult(), h.counit(), h.comult(), std::move(s));
}

HopfData with_mult(const HopfData& h, MultTable m) {
  std::vector<int> parity(h.parity().begin(), h.parity().end());
  return HopfData(h.dim(), h.is_super(), parity, h.unit(), std::move(m), h.counit(), h.comult(), h.antipode());
}

std::vector<HopfData> small_catalog() {
  std::vector<HopfData> out;
  for (int n = 1; n <= 6; ++n) out.push_back(group_algebra(cyclic_group(n)));
  out.push_back(group_algebra(symmetric_group3()));
  out.push_back(group_algebra(quaternion_group()));
  for (int n = 0; n <= 3; ++n) out.push_back(exterior_algebra(n));
  const auto z2 = cyclic_group(2);
  out.push_back(supergroup_algebra(z2, sign_representation(z2, {{1, -1}, {1, -1}})));
  out.push_back(sweedler());
  const auto k = abelian_group({2, 2});
  out.push_back(modified_supergroup_algebra(k, sign_representation(k, {sign_characters(k)[1]}), 2).hopf);
  return out;
}

}  // namespace

TEST(HopfData, ShapeValidation) {
  const HopfData h = group_algebra(cyclic_group(2));
  EXPECT_THROW(HopfData(2, false, {0, 0}, h.unit(), h.mult(), h.counit(), h.comult(), Mat(3, 3)), ShapeError);
  EXPECT_THROW(HopfData(2, false, {0, 1}, h.unit(), h.mult(), h.counit(), h.comult(), h.antipode()), ShapeError);
  EXPECT_THROW(HopfData(0, false, {}, {}, {}, {}, {}, Mat(0, 0)), ShapeError);
}

TEST(VerifyHopf, GroupAlgebraOfS3) { EXPECT_TRUE(verify_hopf(group_algebra(symmetric_group3())).all()); }

TEST(VerifyHopf, SweedlerType) { EXPECT_TRUE(verify_hopf(sweedler()).all()); }

TEST(VerifyHopf, ZeroAntipodeFailsAtTheUnit) {
  // With S = 0, m(S (x) id) Delta(1) = 0 != 1, so the first failing basis
  // index is the unit.
  const HopfData h = with_antipode(group_algebra(cyclic_group(2)), Mat(2, 2));
  const auto rep = verify_hopf(h);
  EXPECT_FALSE(rep.antipode.ok);
  EXPECT_EQ(rep.antipode.witness, std::vector<int>{0});
  EXPECT_TRUE(rep.associativity.ok && rep.bialgebra.ok && rep.coassociativity.ok);
}

TEST(VerifyHopf, ZeroingSOfGFailsAtG) {
  Mat s = Mat::identity(2);
  s(1, 1) = 0;
  const auto rep = verify_hopf(with_antipode(group_algebra(cyclic_group(2)), s));
  EXPECT_FALSE(rep.antipode.ok);
  EXPECT_EQ(rep.antipode.witness, std::vector<int>{1});
}

TEST(VerifyHopf, CorruptedProductGivesFirstWitness) {
  const HopfData h = group_algebra(cyclic_group(3));
  MultTable m = h.mult();
  m[1 * 3 + 1] = {{0, CycScalar(1)}};  // g*g = 1 instead of g^2
  const auto rep = verify_hopf(with_mult(h, m));
  EXPECT_FALSE(rep.associativity.ok);
  // (gg)g = g(gg) still holds, so the first failure is (gg)g^2 != g(gg^2).
  EXPECT_EQ(rep.associativity.witness, (std::vector<int>{1, 1, 2}));
  // Group-likes stay multiplicative under the corruption.
  EXPECT_TRUE(rep.bialgebra.ok);
}

TEST(VerifyHopf, GradingViolationReported) {
  const HopfData e = exterior_algebra(1);
  const HopfData bad(2, true, {0, 1}, e.unit(), e.mult(), Vec{1, 1}, e.comult(), e.antipode());
  const auto rep = verify_hopf(bad);
  EXPECT_FALSE(rep.grading.ok);
  EXPECT_EQ(rep.grading.witness, std::vector<int>{1});
}

TEST(VerifyHopf, SuperSignsMatter) {
  // The exterior algebra is a Hopf superalgebra but not an ordinary bialgebra.
  const HopfData e = exterior_algebra(2);
  EXPECT_TRUE(verify_hopf(e).all());
  std::vector<int> parity(e.parity().begin(), e.parity().end());
  const HopfData plain(4, false, std::vector<int>(4, 0), e.unit(), e.mult(), e.counit(), e.comult(), e.antipode());
  EXPECT_FALSE(verify_hopf(plain).bialgebra.ok);
}

TEST(Cocommutative, Examples) {
  EXPECT_TRUE(is_cocommutative(group_algebra(dihedral_group4())));
  const auto z2 = cyclic_group(2);
  EXPECT_TRUE(is_cocommutative(supergroup_algebra(z2, sign_representation(z2, {{1, -1}}))));
  EXPECT_FALSE(is_cocommutative(dual_hopf(group_algebra(symmetric_group3()))));
  EXPECT_FALSE(is_cocommutative(sweedler()));
}

TEST(Dual, KZ2IsSelfDualViaIdempotents) {
  const HopfData h = group_algebra(cyclic_group(2));
  const CycScalar half = make_rational(1, 2);
  // columns e+ = (1+g)/2, e- = (1-g)/2
  const Mat p = Mat::from_columns(2, std::vector<Vec>{Vec{half, half}, Vec{half, -half}});
  EXPECT_EQ(change_basis(h, p), dual_hopf(h));
}

TEST(Dual, DoubleDualOfS3) {
  const HopfData h = group_algebra(symmetric_group3());
  EXPECT_EQ(dual_hopf(dual_hopf(h)), h);
}

TEST(Dual, DualOfS3IsCommutativeNotCocommutative) {
  const HopfData d = dual_hopf(group_algebra(symmetric_group3()));
  EXPECT_TRUE(is_commutative(d));
  EXPECT_FALSE(is_cocommutative(d));
  EXPECT_TRUE(verify_hopf(d).all());
}

TEST(Radical, GroupAlgebrasAreSemisimple) {
  for (const auto& g : {cyclic_group(1), cyclic_group(4), symmetric_group3(), quaternion_group()})
    EXPECT_TRUE(jacobson_radical(group_algebra(g)).empty()) << g.name();
}

TEST(Radical, SweedlerRadicalIsSpanOfXAndGx) {
  const auto rad = jacobson_radical(sweedler());
  ASSERT_EQ(rad.size(), 2u);
  const std::vector<Vec> expected{basis_vector(4, 1), basis_vector(4, 3)};
  EXPECT_TRUE(oracle::same_span(rad, expected));
}

TEST(Radical, SupergroupRadicalDimension) {
  const auto z2 = cyclic_group(2);
  const auto chars = sign_characters(z2);
  for (int n = 0; n <= 2; ++n) {
    std::vector<std::vector<int>> v(n, chars[1]);
    const HopfData h = n ? supergroup_algebra(z2, sign_representation(z2, v)) : group_algebra(z2);
    const auto rad = jacobson_radical(h);
    EXPECT_EQ(static_cast<int>(rad.size()), 2 * ((1 << n) - 1)) << n;
    EXPECT_TRUE(oracle::same_span(rad, oracle::candidate_radical(h)));
  }
}

TEST(Semisimple, Examples) {
  EXPECT_TRUE(is_semisimple(group_algebra(cyclic_group(3))));
  EXPECT_FALSE(is_semisimple(sweedler()));
  const auto k = abelian_group({2, 2});
  const auto a = AbelianSubgroup::whole(k);
  const auto beta = alternating_nondegenerate_bicharacters(a.factors)[0].polarization();
  EXPECT_TRUE(is_semisimple(semisimple_triangular(k, a, beta, 0).hopf));
}

TEST(Chevalley, Examples) {
  EXPECT_TRUE(is_chevalley(group_algebra(symmetric_group3())));
  EXPECT_TRUE(is_chevalley(sweedler()));
  const HopfData h = sweedler();
  const auto rep = hopf_ideal_report(h, {h.unit()});
  EXPECT_FALSE(rep.counit_vanishes);
  EXPECT_FALSE(rep.ok());
  EXPECT_EQ(rep.witness, 0);
}

TEST(Chevalley, AntipodeInstabilityDetected) {
  // S(x) = -gx leaves span{x}.
  const HopfData h = sweedler();
  const auto rep = hopf_ideal_report(h, {basis_vector(4, 1)});
  EXPECT_TRUE(rep.counit_vanishes);
  EXPECT_FALSE(rep.antipode_stable);
}

TEST(AntipodeOrder, Examples) {
  EXPECT_EQ(antipode_order(group_algebra(cyclic_group(2))), 1);
  EXPECT_EQ(antipode_order(group_algebra(cyclic_group(3))), 2);
  EXPECT_EQ(antipode_order(sweedler()), 4);
  EXPECT_THROW(antipode_order(sweedler(), 3), OrderNotFound);
}

TEST(HopfProperty, CatalogPassesAxiomsAndDualInvolution) {
  for (const auto& h : small_catalog()) {
    EXPECT_TRUE(verify_hopf(h).all());
    EXPECT_EQ(dual_hopf(dual_hopf(h)), h);
    EXPECT_TRUE(verify_hopf(dual_hopf(h)).all());
  }
}

TEST(HopfProperty, RadicalIsNilpotentIdeal) {
  for (const auto& h : small_catalog()) {
    const auto rad = jacobson_radical(h);
    EXPECT_TRUE(oracle::is_two_sided_ideal(h, rad));
    EXPECT_TRUE(oracle::is_nilpotent(h, rad));
    EXPECT_TRUE(oracle::quotient_is_semisimple(h, rad));
  }
}

TEST(HopfProperty, HandBuiltSweedlerMatches) { EXPECT_EQ(sweedler(), oracle::sweedler_h4()); }
