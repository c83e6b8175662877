#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qmock {
namespace {

using testing::agree_through;
using testing::eval_text;

// Closed forms and relations checked coefficient by coefficient.
void expect_identity(const std::string& lhs, const std::string& rhs, long order = 40, const Bindings& b = {}) {
  const Series a = eval_text(lhs, order, b), c = eval_text(rhs, order, b);
  const auto cmp = equal_to_order(a, c, order);
  EXPECT_TRUE(cmp.equal) << lhs << " vs " << rhs << " first differ at scaled exponent " << cmp.first_mismatch << ": "
                         << cmp.lhs << " vs " << cmp.rhs;
}

TEST(Catalog, ThirdOrderFStartsCorrectly) {
  // f(q) = sum q^{n^2}/(-q;q)_n^2
  EXPECT_EQ(eval_text("f(1)", 8).to_text(), "1 + q - 2q^2 + 3q^3 - 3q^4 + 3q^5 - 5q^6 + 7q^7 - 6q^8");
}

TEST(Catalog, EveryEntryEvaluates) {
  for (const auto& e : catalog()) {
    const std::string call = e.arity == Arity::two_param ? e.name + "(x, 1)" : e.name + "(1)";
    const Bindings b = e.arity == Arity::two_param ? Bindings{{"x", "2"}} : Bindings{};
    EXPECT_NO_THROW((void)eval_text(call, 15, b)) << call;
  }
}

TEST(Catalog, PhiCompletionClosedForm) { expect_identity("phi_c(1)", "J(2)^7/(J(1)^3*J(4)^3)"); }
TEST(Catalog, NuCompletionClosedForm) { expect_identity("nu_c(1)", "2*J(4)^3/J(2)^2"); }
TEST(Catalog, RankFunctionAtOne) { expect_identity("R(1, 1)", "1/J(1)"); }
TEST(Catalog, MuPlusR2IsTwo) { expect_identity("mu(1) + R2(1)", "2"); }
TEST(Catalog, OmegaCompletionSplitsIntoD5) { expect_identity("omega_c(1)", "omega(1) + J(1)^2/J(2)^2*D5(1)"); }
TEST(Catalog, MFromG3) { expect_identity("M(1)", "g3(-1, 1)"); }
TEST(Catalog, NFromG3) { expect_identity("N(1)", "q*g3(q, 6)"); }
TEST(Catalog, F0CompletionSplitsWithHalfPsi0) { expect_identity("f0_c(1)", "f0(1) + 2*psi0(1)"); }

TEST(Catalog, F0SplitStartingAtZeroFailsAtTheConstantTerm) {
  // Starting the negative-index sum at n = 0 adds 1/2 to the constant term.
  const Series a = eval_text("f0_c(1)", 20);
  const Series b = eval_text("f0(1) + sum(n>=0; poch(-q, 1, n - 1)*q^(n*(n + 1)/2))", 20);
  const auto cmp = equal_to_order(a, b, 20);
  EXPECT_FALSE(cmp.equal);
  EXPECT_EQ(cmp.first_mismatch, 0);
}

TEST(Catalog, PhiCapRelationNeedsItsThirdTerm) {
  const std::string lhs = "16*Phi_cap_c(2) - 4*q*J(2)^5/(J(1)^2*J(4)^3)*omega_c(1)";
  expect_identity(lhs, "2*J(4)^17/(J(2)^8*J(8)^8) - J(2)^20/(J(1)^8*J(4)^11) - J(2)^8/J(4)^7");
  const auto cmp = equal_to_order(eval_text(lhs, 20), eval_text("2*J(4)^17/(J(2)^8*J(8)^8) - J(2)^20/(J(1)^8*J(4)^11)", 20), 20);
  EXPECT_FALSE(cmp.equal);
  EXPECT_EQ(cmp.first_mismatch, 0);
}

TEST(Catalog, GammaHasNoCompletion) {
  try {
    (void)eval_text("gamma_c(1)", 10);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
  }
  ASSERT_NE(find_catalog_entry("gamma"), nullptr);
  EXPECT_TRUE(find_catalog_entry("gamma")->bilateral.empty());
}

TEST(Catalog, DilatedAndSignFlippedBases) {
  const Series f = eval_text("f(1)", 20);
  EXPECT_TRUE(agree_through(eval_text("f(2)", 40), f.dilated(2).truncated(40), 40));
  EXPECT_TRUE(agree_through(eval_text("f(-q)", 20), f.sign_flipped(), 20));
  EXPECT_TRUE(agree_through(eval_text("f(q^2)", 40), eval_text("f(2)", 40), 40));
  EXPECT_THROW((void)eval_text("f(-q^2)", 5), Error);
  EXPECT_THROW((void)eval_text("f(1/2)", 5), Error);
}

TEST(MockEntryPoints, NamedAndTwoParameter) {
  EXPECT_TRUE(agree_through(eval_named("f", Variant::unilateral, 1, 20), eval_text("f(1)", 20), 20));
  EXPECT_TRUE(agree_through(eval_two_param("R", QMonomial(FieldElement(1), 0), 1, Variant::unilateral, 20),
                            eval_text("1/J(1)", 20), 20));
  EXPECT_THROW((void)eval_named("R", Variant::unilateral, 1, 5), Error);
  EXPECT_THROW((void)eval_named("nosuch", Variant::unilateral, 1, 5), Error);
}

TEST(AppellLerch, ZShift) {
  const char* lhs = "alm(x, 1, z) - alm(x, 1, y)";
  const char* rhs = "y*J(1)^3*j(z/y; 1)*j(x*z*y; 1)/(j(y; 1)*j(z; 1)*j(x*y; 1)*j(x*z; 1))";
  expect_identity(lhs, rhs, 30, {{"x", "2"}, {"z", "-1"}, {"y", "5*q"}});
  expect_identity(lhs, rhs, 30, {{"x", "3/2"}, {"z", "i"}, {"y", "-q"}});
}

TEST(AppellLerch, XShift) {
  expect_identity("alm(q*x, 1, z)", "1 - x*alm(x, 1, z)", 30, {{"x", "2"}, {"z", "-1"}});
  expect_identity("alm(q*x, 1, z)", "1 - x*alm(x, 1, z)", 30, {{"x", "-5"}, {"z", "w"}});
}

TEST(AppellLerch, DegenerateArguments) {
  try {
    (void)appell_lerch(QMonomial(FieldElement(2), 0), QMonomial(FieldElement(1), 0), 1, 10);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::degenerate_specialization);
  }
}

TEST(Ranks, PartitionsOfFour) {
  const RankTable t = partition_rank_table(6);
  const std::map<int, long> four{{3, 1}, {1, 1}, {0, 1}, {-1, 1}, {-3, 1}};
  EXPECT_EQ(t[4], four);
  long total = 0;
  for (const auto& [m, c] : t[6]) total += c;
  EXPECT_EQ(total, 11);
}

TEST(Ranks, RankIsSymmetric) {
  const RankTable t = partition_rank_table(15);
  for (int n = 0; n <= 15; ++n)
    for (const auto& [m, c] : t[static_cast<std::size_t>(n)]) {
      auto it = t[static_cast<std::size_t>(n)].find(-m);
      ASSERT_NE(it, t[static_cast<std::size_t>(n)].end());
      EXPECT_EQ(it->second, c);
    }
}

TEST(Ranks, CrossCheckAgainstRankFunction) {
  const RankTable t = partition_rank_table(15);
  EXPECT_EQ(rank_cross_check(t, FieldElement(2)), -1);
  EXPECT_EQ(rank_cross_check(t, FieldElement(3)), -1);
  EXPECT_EQ(rank_cross_check(t, FieldElement(-1)), -1);
  EXPECT_EQ(rank_cross_check(t, FieldElement::generator(4)), -1);
}

TEST(Ranks, SizeLimits) {
  EXPECT_THROW((void)partition_rank_table(31), Error);
  EXPECT_THROW((void)partition_rank_table(-1), Error);
}

}  // namespace
}  // namespace qmock
