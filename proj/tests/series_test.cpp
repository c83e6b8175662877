#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qmock {
namespace {

using testing::agree;

Series poly(std::vector<long> coeffs, int scale = 1) {
  std::vector<Series::Term> t;
  for (std::size_t k = 0; k < coeffs.size(); ++k) t.emplace_back(static_cast<Exp>(k) * scale, FieldElement(coeffs[k]));
  return Series::from_terms(scale, kExact, t);
}

TEST(Series, GeometricSumTelescopes) {
  const Series one_minus_q = poly({1, -1});
  const Series geo = poly(std::vector<long>(10, 1));
  const Series prod = one_minus_q * geo;
  EXPECT_TRUE(prod.is_exact());
  EXPECT_EQ(prod.to_text(), "1 - q^10");
}

TEST(Series, HalfPowersMultiply) {
  const Series h = Series::monomial(2, QMonomial(FieldElement(1), 1));
  EXPECT_EQ((h * h).to_text(), "q");
  EXPECT_EQ(h.to_text(), "q^(1/2)");
}

TEST(Series, InverseOfOneMinusQ) {
  const Series inv = invert(poly({1, -1}), 10);
  EXPECT_EQ(inv.prec(), 10);
  for (Exp k = 0; k <= 10; ++k) EXPECT_EQ(inv.coeff(k), FieldElement(1)) << k;
}

TEST(Series, InverseWithPositiveValuation) {
  const Series a = poly({1, -1}).times_monomial(QMonomial(FieldElement(1), 2));
  const Series inv = invert(a, 10);
  EXPECT_EQ(*inv.valuation(), -2);
  EXPECT_EQ(inv.coeff(-2), FieldElement(1));
  EXPECT_EQ(inv.coeff(7), FieldElement(1));
  EXPECT_TRUE(agree(a * inv, Series::constant(1, 1)));
}

TEST(Series, InvertingZeroFails) {
  try {
    (void)invert(Series::zero(1), 10);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::zero_inversion);
  }
}

TEST(Series, PartitionNumbersFromReciprocalOfJ1) {
  const Series p = invert(eta_J(1, 1, 20), 20);
  const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
  for (Exp n = 0; n <= 20; ++n) EXPECT_EQ(p.coeff(n), FieldElement(expected[n])) << n;
}

TEST(Series, Valuation) {
  EXPECT_FALSE(Series::zero(1).valuation().has_value());
  EXPECT_EQ(*poly({0, 0, 3}).valuation(), 2);
}

TEST(Series, EqualToOrderFindsFirstMismatch) {
  const Series a = poly({1, 2, 3});
  const Series b = a + Series::monomial(1, QMonomial(FieldElement(5), 31));
  EXPECT_TRUE(equal_to_order(a, b, 30).equal);
  const auto c = equal_to_order(a, b, 31);
  EXPECT_FALSE(c.equal);
  EXPECT_EQ(c.first_mismatch, 31);
  EXPECT_EQ(c.lhs, FieldElement(0));
  EXPECT_EQ(c.rhs, FieldElement(5));
}

TEST(Series, ComparingBeyondGuaranteedOrderFails) {
  const Series a = poly({1, 1}).truncated(5);
  try {
    (void)equal_to_order(a, a, 6);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::order_exceeds_guarantee);
  }
}

TEST(Series, ScaleMismatchIsAnError) {
  try {
    (void)(poly({1}, 1) + poly({1}, 2));
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::scale_mismatch);
  }
}

TEST(Series, DilationAndRescaling) {
  const Series a = poly({1, 2});
  EXPECT_EQ(a.dilated(3).to_text(), "1 + 2q^3");
  EXPECT_EQ(a.rescaled(2).to_text(), "1 + 2q");
  EXPECT_EQ(a.rescaled(2).scale(), 2);
}

TEST(Series, SignFlip) { EXPECT_EQ(poly({1, 1, 1}).sign_flipped().to_text(), "1 - q + q^2"); }

TEST(Series, TruncationTracksPrecision) {
  const Series t = poly({1, 1, 1, 1}).truncated(2);
  EXPECT_EQ(t.prec(), 2);
  EXPECT_EQ((t * poly({0, 1})).prec(), 3);
}

TEST(SeriesProperty, RingAxioms) {
  const auto r = testing::series_ring_axioms(0x5eed0002, 200);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(SeriesProperty, InverseOfRandomUnits) {
  const auto r = testing::series_inversion(0x5eed0003, 200);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(SeriesProperty, DilationComposes) {
  const auto r = testing::series_dilation(0x5eed0004, 100);
  EXPECT_TRUE(r.ok) << r.detail;
}

TEST(SeriesProperty, OrderTrackingIsSound) {
  const auto r = testing::series_order_tracking(0x5eed0005, 200);
  EXPECT_TRUE(r.ok) << r.detail;
}

}  // namespace
}  // namespace qmock
