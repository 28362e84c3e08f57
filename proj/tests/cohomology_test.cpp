#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "solvcoh/cohomology.hpp"
#include "support.hpp"

namespace solvcoh {
namespace {

using testing::expr;

TEST(Cohomology, TorusDimensionsAreBinomial) {
  const auto m = ManifoldModel::create(torus(3));
  for (Theory t : {Theory::dolbeault, Theory::bott_chern, Theory::aeppli}) {
    for (int p = 0; p <= 3; ++p) {
      for (int q = 0; q <= 3; ++q) {
        EXPECT_EQ(cohomology(m, t, {Character()}, p, q).dimension(), binomial(3, p) * binomial(3, q));
      }
    }
  }
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(de_rham_cohomology(m, {Character()}, k).dimension(), binomial(6, k));
  EXPECT_TRUE(ddbar_lemma_check(m, {Character()}).holds);
}

class DenseOracle : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(DenseOracle, BigalkeRollenskeDimensions) {
  const auto [p, q] = GetParam();
  const auto m = testing::br_model(2);
  const oracle::RealModel o = oracle::bigalke_rollenske(2);
  EXPECT_EQ(cohomology(m, Theory::bott_chern, {Character()}, p, q).dimension(), oracle::bott_chern(o, p, q));
  EXPECT_EQ(cohomology(m, Theory::aeppli, {Character()}, p, q).dimension(), oracle::aeppli(o, p, q));
  EXPECT_EQ(cohomology(m, Theory::dolbeault, {Character()}, p, q).dimension(), oracle::dolbeault(o, p, q));
}

INSTANTIATE_TEST_SUITE_P(LowBidegrees, DenseOracle,
                         ::testing::Values(std::pair{0, 0}, std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1},
                                           std::pair{2, 0}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}));

TEST(Cohomology, RepresentativesAreCocyclesAndIndependent) {
  const auto m = testing::nakamura_model({1, -1});
  const auto s = m.default_character_set();
  for (Theory t : {Theory::bott_chern, Theory::aeppli, Theory::dolbeault}) {
    const CohomologyBasis b = cohomology(m, t, s, 1, 1);
    const auto reps = b.representatives();
    EXPECT_EQ(testing::span_rank(reps), b.dimension());
    for (const auto& r : reps) {
      if (t == Theory::bott_chern) EXPECT_TRUE(m.d(r).is_zero());
      if (t == Theory::aeppli) EXPECT_TRUE(m.ddbar(r).is_zero());
      if (t == Theory::dolbeault) EXPECT_TRUE(m.delbar(r).is_zero());
    }
  }
}

TEST(Cohomology, BottChernRepresentativesAvoidCoboundaries) {
  const auto m = testing::br_model(2);
  const auto reps = cohomology(m, Theory::bott_chern, {Character()}, 2, 2).representatives();
  SpanSpec exact{{{OpKind::ddbar, {1, 1}}}, {}, {Character()}};
  for (const auto& r : reps) EXPECT_FALSE(solve_membership(m, r, exact).member) << m.format(r);
}

TEST(Membership, WitnessForMembers) {
  const auto m = testing::br_model(2);
  const Element target = expr(m, "phi2^phi4^phibar2^phibar4");
  const SpanSpec space{{{OpKind::ddbar, {1, 1}}}, {}, {Character()}};
  const MembershipResult r = solve_membership(m, target, space);
  ASSERT_TRUE(r.member);
  EXPECT_TRUE(verify_witness(m, space, r.witness));
  ASSERT_EQ(r.witness.preimages.size(), 1u);
  EXPECT_EQ(m.ddbar(r.witness.preimages[0].preimage), target);
}

TEST(Membership, FunctionalForNonMembers) {
  const auto m = testing::br_model(2);
  const Element target = expr(m, "phi1^phibar1 + phi5^phibar5");
  const SpanSpec space{{{OpKind::del, {0, 1}}, {OpKind::delbar, {1, 0}}}, {expr(m, "phi1^phibar2")}, {Character()}};
  const MembershipResult r = solve_membership(m, target, space);
  ASSERT_FALSE(r.member);
  EXPECT_FALSE(r.target_value.is_zero());
  EXPECT_EQ(evaluate_functional(r.functional, target), r.target_value);
  EXPECT_TRUE(verify_functional(m, target, space, r.functional));
  EXPECT_FALSE(verify_functional(m, target, space, m.zero()));
}

TEST(Membership, FixedCombinationsAcrossCharacters) {
  const auto m = testing::nakamura_model({1, -1});
  const Element g1 = expr(m, "f*phi0^phibar1");
  const Element g2 = expr(m, "f{-1}*phi1^phibar0");
  const Element target = 3 * g1 - Scalar::i() * g2;
  const SpanSpec space{{}, {g1, g2}, {}};
  const MembershipResult r = solve_membership(m, target, space);
  ASSERT_TRUE(r.member);
  EXPECT_EQ(r.witness.fixed_coefficients, (std::vector<Scalar>{3, -Scalar::i()}));
  EXPECT_TRUE(verify_witness(m, space, r.witness));
}

TEST(Membership, RejectsBadRequests) {
  const auto m = testing::br_model(2);
  const Element target = expr(m, "phi1^phibar1");
  EXPECT_THROW(solve_membership(m, target, {{{OpKind::d, {1, 0}}}, {}, {}}), std::invalid_argument);
  EXPECT_THROW(solve_membership(m, target, {{{OpKind::del, {1, 1}}}, {}, {}}), std::invalid_argument);
  EXPECT_THROW(solve_membership(m, target + expr(m, "phi1"), {{}, {}, {}}), std::invalid_argument);
  EXPECT_THROW(solve_membership(m, target, {{}, {expr(m, "phi1")}, {}}), std::invalid_argument);
}

TEST(DdbarLemma, NilmanifoldFails) {
  const auto m = testing::br_model(2);
  const DdbarReport r = ddbar_lemma_check(m, {Character()});
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.rows.size(), 49u);
}

TEST(Cohomology, TheoryNamesAndTable) {
  EXPECT_EQ(parse_theory("bc"), Theory::bott_chern);
  EXPECT_EQ(parse_theory("derham"), Theory::de_rham);
  EXPECT_EQ(parse_theory("nope"), std::nullopt);
  EXPECT_EQ(to_string(Theory::aeppli), "aeppli");
  const auto m = ManifoldModel::create(torus(1));
  const std::string table = format_cohomology_table(m, {cohomology(m, Theory::bott_chern, {Character()}, 1, 1)});
  EXPECT_NE(table.find("bott_chern"), std::string::npos);
  EXPECT_NE(table.find("(1,1)"), std::string::npos);
}

}  // namespace
}  // namespace solvcoh
