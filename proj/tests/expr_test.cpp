#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qmock {
namespace {

using testing::agree_through;
using testing::eval_text;

TEST(Parser, PrecedenceAndAssociativity) {
  EXPECT_EQ(format_expression(parse_expression("1+2*3")), "1 + 2*3");
  EXPECT_EQ(format_expression(parse_expression("(1+2)*3")), "(1 + 2)*3");
  EXPECT_EQ(format_expression(parse_expression("1-(2-3)")), "1 - (2 - 3)");
  EXPECT_EQ(format_expression(parse_expression("1 - 2 - 3")), "1 - 2 - 3");
  EXPECT_EQ(format_expression(parse_expression("a/(b*c)")), "a/(b*c)");
  EXPECT_EQ(format_expression(parse_expression("(-q)^2")), "(-q)^2");
}

TEST(Parser, UnaryMinusBindsLooserThanPower) {
  const NodePtr e = parse_expression("-q^2");
  ASSERT_EQ(e->kind, NodeKind::neg);
  EXPECT_EQ(e->args[0]->kind, NodeKind::pow);
}

TEST(Parser, ReservedNames) {
  EXPECT_EQ(parse_expression("q")->kind, NodeKind::q);
  EXPECT_EQ(parse_expression("i")->kind, NodeKind::imag_unit);
  EXPECT_EQ(parse_expression("w")->kind, NodeKind::cube_root);
  EXPECT_EQ(parse_expression("x")->kind, NodeKind::var);
}

TEST(Parser, CallsSumsAndExponents) {
  const NodePtr e = parse_expression("sum(n>=-2; q^(n^2)/poch(-q, 1, n)^2) + j(x*q; 2)");
  ASSERT_EQ(e->kind, NodeKind::add);
  const NodePtr s = e->args[0];
  ASSERT_EQ(s->kind, NodeKind::sum);
  EXPECT_EQ(s->name, "n");
  ASSERT_TRUE(s->lower.has_value());
  EXPECT_EQ(*s->lower, -2);
  const NodePtr j = e->args[1];
  ASSERT_EQ(j->kind, NodeKind::call);
  EXPECT_EQ(j->name, "j");
  EXPECT_EQ(j->args.size(), 2u);
  EXPECT_EQ(format_expression(e), "sum(n>=-2; q^(n^2)/poch(-q, 1, n)^2) + j(x*q; 2)");
  EXPECT_EQ(format_expression(parse_expression("q^-3")), "q^-3");
  EXPECT_FALSE(parse_expression("sum(n; q^(n^2))")->lower.has_value());
}

TEST(Parser, ErrorsReportLineAndColumn) {
  try {
    (void)parse_expression("1 +\n  * q");
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse_error);
    EXPECT_NE(std::string(e.what()).find("line 2, column 3"), std::string::npos) << e.what();
  }
  try {
    (void)parse_expression("J(1");
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("column 4"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("end of input"), std::string::npos) << e.what();
  }
  EXPECT_THROW((void)parse_expression("q q"), Error);
  EXPECT_THROW((void)parse_expression(""), Error);
}

TEST(ParserProperty, RandomTreesRoundTrip) {
  const auto r = testing::parser_round_trip(0x5eed0020, 200);
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_EQ(r.cases, 200);
}

TEST(Evaluator, ArithmeticIsCompositional) {
  const char* parts[] = {"J(1)", "J(2)^3", "j(-q; 2)", "poch(2*q, 1, inf)", "f(1)", "1 - q^(3)"};
  for (const char* a : parts) {
    for (const char* b : parts) {
      const std::string sa(a), sb(b);
      const Series ea = eval_text(sa, 30), eb = eval_text(sb, 30);
      EXPECT_TRUE(agree_through(eval_text("(" + sa + ")*(" + sb + ")", 30), (ea * eb).truncated(30), 30)) << a << " " << b;
      EXPECT_TRUE(agree_through(eval_text("(" + sa + ") - (" + sb + ")", 30), (ea - eb).truncated(30), 30)) << a << " " << b;
      EXPECT_TRUE(agree_through(eval_text("(" + sa + ")/(" + sb + ")", 30), divide(ea, eb, 30), 30)) << a << " " << b;
    }
  }
}

TEST(Evaluator, HalfIntegerExponentsRaiseTheScale) {
  EXPECT_EQ(required_scale(parse_expression("q^(1/2)")), 2);
  EXPECT_EQ(required_scale(parse_expression("sum(n>=0; q^(n^2/2))")), 2);
  EXPECT_EQ(eval_text("q^(1/2)*q^(1/2)", 5).to_text(), "q");
}

TEST(Evaluator, BindingsAndUnboundVariables) {
  EXPECT_EQ(eval_text("x + q", 5, {{"x", "3*q^2"}}).to_text(), "q + 3q^2");
  try {
    (void)eval_text("x + q", 5);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unbound_variable);
  }
}

TEST(Evaluator, UnknownFunction) {
  try {
    (void)eval_text("nosuch(1)", 5);
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unknown_name);
  }
}

TEST(Evaluator, VanishingThetaIsDegenerate) {
  try {
    (void)eval_text("j(x; 1)", 5, {{"x", "1"}});
    FAIL() << "expected an exception";
  } catch (const Error& e) {
    EXPECT_TRUE(e.is_degenerate());
  }
}

TEST(Evaluator, CyclotomicCoefficients) {
  EXPECT_EQ(eval_text("w^3", 3).to_text(), "1");
  EXPECT_EQ(eval_text("i^2*q", 3).to_text(), "-q");
  EXPECT_EQ(eval_text("(1 + w)*(1 + w^2)", 3).to_text(), "1");
}

}  // namespace
}  // namespace qmock
