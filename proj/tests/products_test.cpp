#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qmock {
namespace {

using testing::agree_through;

QMonomial mq(long c, Exp e) { return QMonomial(FieldElement(c), e); }

TEST(Pochhammer, EmptyProductIsOne) {
  const Series s = pochhammer(PochhammerSpec::finite(mq(7, 3), 1, 0), 1, 20);
  EXPECT_TRUE(s.is_exact());
  EXPECT_EQ(s.to_text(), "1");
}

TEST(Pochhammer, FinitePositiveCountIsAPolynomial) {
  // (q;q)_2 = (1 - q)(1 - q^2)
  const Series s = pochhammer(PochhammerSpec::finite(mq(1, 1), 1, 2), 1, 20);
  EXPECT_TRUE(s.is_exact());
  EXPECT_EQ(s.to_text(), "1 - q - q^2 + q^3");
}

TEST(Pochhammer, NegativeCount) {
  // (-q;q)_{-2} = 1/((1 + 1)(1 + q^-1)) = q / (2 (1 + q))
  const Series s = pochhammer(PochhammerSpec::finite(mq(-1, 1), 1, -2), 1, 6);
  EXPECT_EQ(s.to_text(), "(1/2)q - (1/2)q^2 + (1/2)q^3 - (1/2)q^4 + (1/2)q^5 - (1/2)q^6");
}

TEST(Pochhammer, VanishingReciprocalFactorIsDegenerate) {
  // (q^2;q)_{-2} contains 1/(1 - q^0).
  try {
    (void)pochhammer(PochhammerSpec::finite(mq(1, 2), 1, -2), 1, 10);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degenerate_specialization);
  }
}

TEST(Pochhammer, VanishingNumeratorGivesZero) {
  // (q^-1;q)_3 contains 1 - q^0.
  EXPECT_TRUE(pochhammer(PochhammerSpec::finite(mq(1, -1), 1, 3), 1, 10).is_zero());
}

TEST(Eta, J1IsThePentagonalSeries) {
  const Series j1 = eta_J(1, 1, 30);
  EXPECT_EQ(j1.to_text(), "1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + q^22 + q^26");
}

TEST(Eta, J2IsJ1Dilated) { EXPECT_TRUE(agree_through(eta_J(2, 1, 40), eta_J(1, 1, 20).dilated(2), 40)); }

TEST(Eta, JacobiCube) {
  // J1^3 = sum (-1)^n (2n + 1) q^{n(n+1)/2}
  const Series cube = power(eta_J(1, 1, 30), 3, 30);
  EXPECT_EQ(cube.to_text(), "1 - 3q + 5q^3 - 7q^6 + 9q^10 - 11q^15 + 13q^21 - 15q^28");
}

TEST(Eta, MatchesInfinitePochhammer) {
  EXPECT_TRUE(agree_through(eta_J(3, 1, 30), pochhammer(PochhammerSpec::infinite(mq(1, 3), 3), 1, 30), 30));
}

TEST(Theta, AtMinusOne) {
  // j(-1;q) = sum q^{n(n-1)/2} counts each triangular number twice.
  const Series s = theta_j(mq(-1, 0), 1, 1, 15);
  EXPECT_EQ(s.to_text(), "2 + 2q + 2q^3 + 2q^6 + 2q^10 + 2q^15");
}

TEST(Theta, VanishesOnBasePowers) {
  EXPECT_TRUE(theta_j(mq(1, 0), 1, 1, 10).is_zero());
  EXPECT_TRUE(theta_j(mq(1, 4), 2, 1, 10).is_zero());
  EXPECT_FALSE(theta_j(mq(1, 1), 2, 1, 10).is_zero());
}

TEST(Theta, Symmetries) {
  testing::Gen g(0x5eed0010);
  int checked = 0;
  while (checked < 30) {
    const Exp M = g.integer(1, 3);
    const QMonomial z(g.nonzero_element(g.pick(std::vector<int>{1, 3, 4})), g.integer(-4, 4));
    if (theta_vanishes(z, M)) continue;
    const Exp T = 30;
    const Series base = theta_j(z, M, 1, T + 20);
    // j(q^M / z) = j(z)
    EXPECT_TRUE(agree_through(theta_j(QMonomial(FieldElement(1), M) / z, M, 1, T), base, T));
    // j(z q^M) = -z^{-1} j(z)
    const Series shifted = theta_j(z * QMonomial(FieldElement(1), M), M, 1, T);
    EXPECT_TRUE(agree_through(shifted, base.times_monomial(QMonomial(-z.coeff.inverse(), -z.exp)), T));
    // j(1/z) = -z^{-1} j(z)
    EXPECT_TRUE(agree_through(theta_j(z.inverse(), M, 1, T), base.times_monomial(QMonomial(-z.coeff.inverse(), -z.exp)), T));
    ++checked;
  }
}

TEST(ProductsProperty, PochhammerRecurrenceAndInversion) {
  const auto r = testing::pochhammer_laws(0x5eed0011, 50);
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_EQ(r.cases, 50 * 30);
}

TEST(ProductsProperty, ThetaProductMatchesSum) {
  const auto r = testing::theta_routes(0x5eed0012, 30);
  EXPECT_TRUE(r.ok) << r.detail;
}

}  // namespace
}  // namespace qmock
