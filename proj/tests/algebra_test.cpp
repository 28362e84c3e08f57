#include <gtest/gtest.h>

#include "solvcoh/element.hpp"
#include "solvcoh/linalg.hpp"
#include "support.hpp"

namespace solvcoh {
namespace {

TEST(Scalar, ParsesAndPrints) {
  EXPECT_EQ(parse_rational(" 2 / 4 "), Rational(1, 2));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_EQ(Scalar(Rational(3, 2)).str(), "3/2");
  EXPECT_EQ((-Scalar::i()).str(), "-i");
  EXPECT_EQ(Scalar(Rational(1, 2), Rational(-3)).str(), "1/2-3i");
  for (const Scalar& s : {Scalar(0), Scalar(Rational(-7, 3)), Scalar::i(), Scalar(Rational(1, 2), Rational(-3, 5))}) {
    EXPECT_EQ(parse_scalar(s.str()), s) << s.str();
  }
}

TEST(Scalar, FieldOperations) {
  const Scalar a(Rational(1, 2), Rational(2));
  const Scalar b(Rational(-3), Rational(1, 3));
  EXPECT_EQ(a * a.inverse(), Scalar(1));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(a * a.conj(), Scalar(a.norm2()));
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
  EXPECT_THROW(Scalar().inverse(), std::domain_error);
}

TEST(Character, GroupLaw) {
  const Character a({1, -2});
  const Character b({0, 2});
  EXPECT_EQ(a * b, Character::basis(0));
  EXPECT_TRUE((a * a.inverse()).is_trivial());
  EXPECT_EQ(a.pow(3), Character({3, -6}));
  EXPECT_EQ(a.depth(), 2);
  EXPECT_EQ(Character({0, 0}), Character());
  EXPECT_LT(Character({-1}), Character());
  EXPECT_EQ(Character().str(), "1");
}

TEST(Monomial, WedgeSigns) {
  const auto e = [](std::vector<int> h, std::vector<int> a) { return FormMonomial::from_indices(h, a); };
  EXPECT_EQ(wedge(e({2}, {}), e({1}, {})).sign, -1);
  EXPECT_EQ(wedge(e({1}, {}), e({2}, {})).sign, 1);
  EXPECT_EQ(wedge(e({1}, {}), e({1}, {})).sign, 0);
  // phibar1 ^ phi2 = -phi2 ^ phibar1
  const SignedMonomial s = wedge(e({}, {1}), e({2}, {}));
  EXPECT_EQ(s.sign, -1);
  EXPECT_EQ(s.mono, e({2}, {1}));
  // conj(phi1 ^ phibar2) = phibar1 ^ phi2 = -phi2 ^ phibar1
  const SignedMonomial c = conjugate(e({1}, {2}));
  EXPECT_EQ(c.sign, -1);
  EXPECT_EQ(c.mono, e({2}, {1}));
  EXPECT_THROW(e({2, 1}, {}), std::invalid_argument);
  EXPECT_THROW(e({0}, {}), std::out_of_range);
}

TEST(Monomial, BasisOrderAndLookup) {
  const MonomialBasis b(4, 2, 1);
  EXPECT_EQ(b.size(), 6 * 4);
  for (int i = 0; i + 1 < b.size(); ++i) EXPECT_TRUE(monomial_less(b[i], b[i + 1]));
  for (int i = 0; i < b.size(); ++i) EXPECT_EQ(b.index_of(b[i]), i);
  EXPECT_EQ(b.index_of(FormMonomial::from_indices(std::vector<int>{1}, std::vector<int>{1})), -1);
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(subsets_lex(3, 2), (std::vector<Mask>{0b011, 0b101, 0b110}));
}

TEST(Monomial, LabelsInsertBar) {
  const std::vector<std::string> labels{"phi0", "phi1", "psi"};
  EXPECT_EQ(FormMonomial::from_indices(std::vector<int>{1}, std::vector<int>{2, 3}).str(labels), "phi0^phibar1^psibar");
  EXPECT_EQ(FormMonomial{}.str(labels), "1");
}

TEST(Element, ArithmeticAndCancellation) {
  const auto m = testing::br_model(2);
  const Element a = testing::expr(m, "phi1 + 2*phi2");
  const Element b = testing::expr(m, "phi1");
  EXPECT_EQ(a - a, m.zero());
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(wedge(a, b), testing::expr(m, "-2*phi1^phi2"));
  EXPECT_EQ(wedge(b, b), m.zero());
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a.bidegree(), (std::pair<int, int>{1, 0}));
  EXPECT_EQ((a + conjugate(a)).bidegree(), std::nullopt);
  EXPECT_EQ((a + conjugate(a)).degree(), 1);
  EXPECT_THROW(wedge(a, Element(3)), std::invalid_argument);
}

TEST(Element, ConjugationIsInvolutiveAndInvertsCharacters) {
  const auto m = testing::nakamura_model({1, -1});
  const Element a = testing::expr(m, "(1/2 + i)*f^phi0^phibar1 + f{-2}*phi2");
  EXPECT_EQ(conjugate(conjugate(a)), a);
  const Element c = conjugate(a);
  EXPECT_EQ(c.characters(), (std::set<Character>{Character({-1}), Character({2})}));
  EXPECT_EQ(m.format(testing::expr(m, "f{-1}*phi0^phibar2")), "f{-1}*phi0^phibar2");
  EXPECT_EQ(m.format(testing::expr(m, "-phi1 + phi2")), "-phi1 + phi2");
}

TEST(Element, Projections) {
  const auto m = testing::br_model(2);
  const Element a = testing::expr(m, "phi1^phibar2 + phi3^phi4 + 5");
  EXPECT_EQ(project_bidegree(a, 1, 1), testing::expr(m, "phi1^phibar2"));
  EXPECT_EQ(project_degree(a, 2), testing::expr(m, "phi1^phibar2 + phi3^phi4"));
  EXPECT_EQ(project_degree(a, 0), Element::constant(m.n(), 5));
}

TEST(Linalg, SparseVectorNormalises) {
  const SparseVector v = SparseVector::from_entries({{3, 1}, {1, 2}, {3, -1}, {5, 0}});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.leading_index(), 1);
  EXPECT_EQ(v.at(1), Scalar(2));
  EXPECT_EQ(v.at(3), Scalar());
  SparseVector w = SparseVector::unit(1, 3);
  w.axpy(Scalar(-3, 0) / Scalar(2), v);
  EXPECT_TRUE(w.empty());
}

SparseMatrix from_dense(const std::vector<std::vector<int>>& rows) {
  SparseMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int c = 0; c < m.cols; ++c) {
    std::vector<SparseVector::Entry> e;
    for (int r = 0; r < m.rows; ++r) e.emplace_back(r, rows[r][c]);
    m.columns[c] = SparseVector::from_entries(e);
  }
  return m;
}

TEST(Linalg, RankKernelSolve) {
  const SparseMatrix a = from_dense({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  EXPECT_EQ(rank(a), 2);
  const auto ker = kernel_basis(a);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_TRUE(a.apply(ker[0]).empty());
  const SparseVector b = SparseVector::from_entries({{0, 1}, {1, 2}, {2, 1}});
  const auto x = solve(a, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a.apply(*x), b);
  EXPECT_FALSE(solve(a, SparseVector::unit(0)).has_value());
  EXPECT_EQ(multiply(a, a).at(0, 0), Scalar(5));
  EXPECT_EQ(a.transpose().at(0, 1), Scalar(2));
}

TEST(Linalg, JointKernelAndAdjoint) {
  const SparseMatrix a = from_dense({{1, 1, 0}});
  const SparseMatrix b = from_dense({{0, 1, -1}});
  const auto k = joint_kernel({&a, &b});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(a.apply(k[0]).empty());
  EXPECT_TRUE(b.apply(k[0]).empty());
  // <A x, y>_T = <x, A* y>_S with diagonal Gram matrices.
  const std::vector<Rational> gs{1, 2, 3}, gt{5};
  const SparseMatrix adj = adjoint(a, gs, gt);
  EXPECT_EQ(adj.at(1, 0), Scalar(Rational(5, 2)));
}

TEST(Linalg, EchelonAnnihilator) {
  Echelon e;
  EXPECT_TRUE(e.insert(SparseVector::from_entries({{0, 1}, {1, 1}})));
  EXPECT_TRUE(e.insert(SparseVector::from_entries({{1, 1}, {2, 1}})));
  EXPECT_FALSE(e.insert(SparseVector::from_entries({{0, 1}, {2, -1}})));
  const SparseVector target = SparseVector::unit(2);
  const SparseVector rem = e.reduce(target);
  ASSERT_FALSE(rem.empty());
  const SparseVector y = e.annihilator(rem);
  for (const auto& row : e.rows()) EXPECT_TRUE(dot(y, row.vec).is_zero());
  EXPECT_FALSE(dot(y, target).is_zero());
}

TEST(Linalg, EchelonTracksCombinations) {
  Echelon e;
  const SparseVector g0 = SparseVector::from_entries({{0, 2}, {1, 1}});
  const SparseVector g1 = SparseVector::from_entries({{0, 1}, {2, 1}});
  e.insert(g0, SparseVector::unit(0));
  e.insert(g1, SparseVector::unit(1));
  SparseVector combo;
  SparseVector v = g0;
  v.axpy(3, g1);
  const SparseVector rem = e.reduce(v, &combo);
  EXPECT_TRUE(rem.empty());
  // v = -combo applied to the generators.
  SparseVector rebuilt;
  rebuilt.axpy(-combo.at(0), g0);
  rebuilt.axpy(-combo.at(1), g1);
  EXPECT_EQ(rebuilt, v);
}

}  // namespace
}  // namespace solvcoh
