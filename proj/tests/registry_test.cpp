#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

namespace qmock {
namespace {

std::size_t total_pairs(const std::vector<IdentityRecord>& recs) {
  std::size_t n = 0;
  for (const auto& r : recs) n += r.pair_count();
  return n;
}

// Everything in a report except its timing.
std::string key(const VerificationReport& r) {
  return r.id + "|" + r.specialization + "|" + std::to_string(r.order) + "|" + to_string(r.outcome) + "|" +
         r.first_mismatch + "|" + r.lhs_coeff + "|" + r.rhs_coeff + "|" + r.reason;
}

TEST(Registry, SizeAndRequiredIds) {
  const auto& reg = builtin_registry();
  EXPECT_GE(reg.size(), 45u);
  EXPECT_GE(total_pairs(reg), 90u);
  for (const char* id : {"thm2.1", "thm2.3", "thm2.6", "thm2.9.K-K1", "thm2.9.K-g2", "thm2.9.S2-g3", "appB.fc-2Mc",
                         "appB.mu-R2", "remark.theta-quotient"})
    EXPECT_NE(find_record(reg, id), nullptr) << id;
}

TEST(Registry, IdsAreUniqueAndExpressionsParse) {
  std::set<std::string> seen;
  for (const auto& r : builtin_registry()) {
    EXPECT_TRUE(seen.insert(r.id).second) << r.id;
    EXPECT_NO_THROW((void)parse_expression(r.lhs)) << r.id;
    EXPECT_NO_THROW((void)parse_expression(r.rhs)) << r.id;
    EXPECT_FALSE(r.anchor.empty()) << r.id;
    EXPECT_FALSE(r.tags.empty()) << r.id;
  }
}

TEST(Registry, ExportImportRoundTrip) {
  const auto& reg = builtin_registry();
  const auto back = parse_registry(export_registry(reg));
  ASSERT_EQ(back.size(), reg.size());
  for (std::size_t k = 0; k < reg.size(); ++k) {
    EXPECT_EQ(back[k].id, reg[k].id);
    EXPECT_EQ(back[k].aliases, reg[k].aliases);
    EXPECT_EQ(back[k].lhs, reg[k].lhs);
    EXPECT_EQ(back[k].rhs, reg[k].rhs);
    EXPECT_EQ(back[k].panel, reg[k].panel);
    EXPECT_EQ(back[k].min_order, reg[k].min_order);
    EXPECT_EQ(back[k].anchor, reg[k].anchor);
    EXPECT_EQ(back[k].tags, reg[k].tags);
  }
  EXPECT_EQ(export_registry(back), export_registry(reg));
}

TEST(Registry, MalformedLinesAreRejected) {
  EXPECT_THROW((void)parse_registry("only | three | fields"), Error);
  EXPECT_THROW((void)parse_registry("a | q | q + | - | 10 | anchor | tag"), Error);
  EXPECT_THROW((void)parse_registry("a | q | q | - | 10 | x | t\na | q | q | - | 10 | y | t"), Error);
  EXPECT_EQ(parse_registry("# comment only\n\n").size(), 0u);
}

TEST(Registry, ZippedPanels) {
  const auto recs = parse_registry("z | x + y | y + x | x=1,2;y=q,q^2 | 10 | commutativity | check");
  ASSERT_EQ(recs.size(), 1u);
  ASSERT_EQ(recs[0].panel.size(), 2u);
  EXPECT_EQ(bindings_label(recs[0].panel[1]), "x=2, y=q^2");
}

TEST(Verify, TheoremPanelPasses) {
  const auto reports = verify(*find_record(builtin_registry(), "thm2.1"), VerifyOptions{});
  ASSERT_EQ(reports.size(), 4u);
  for (const auto& r : reports) EXPECT_EQ(r.outcome, Outcome::pass) << report_line(r);
}

TEST(Verify, DegenerateProbeAtXEqualsOne) {
  VerifyOptions o;
  o.bindings = Bindings{{"x", "1"}};
  const auto reports = verify(*find_record(builtin_registry(), "thm2.3"), o);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].outcome, Outcome::degenerate);
  EXPECT_NE(reports[0].reason.find("degenerate"), std::string::npos) << reports[0].reason;
  EXPECT_EQ(exit_status(reports), 3);
}

TEST(Verify, FaultInjectionFailsAtSeven) {
  VerifyOptions o;
  o.fault_id = "appB.mu-R2";
  const auto reports = verify(*find_record(builtin_registry(), "appB.mu-R2"), o);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].outcome, Outcome::fail);
  EXPECT_EQ(reports[0].first_mismatch, "7");
  EXPECT_EQ(exit_status(reports), 1);
}

TEST(Verify, OrderBelowRecordMinimumIsRejected) {
  VerifyOptions o;
  o.order = 5;
  EXPECT_THROW((void)verify(*find_record(builtin_registry(), "thm2.1"), o), Error);
}

TEST(Verify, FixedRationalFieldRejectsCyclotomicPanelPoint) {
  VerifyOptions o;
  o.field = 1;
  o.bindings = Bindings{{"x", "i"}};
  const auto reports = verify(*find_record(builtin_registry(), "thm2.3"), o);
  EXPECT_EQ(reports[0].outcome, Outcome::error);
}

TEST(Verify, RationalTagRejectsCyclotomicCoefficients) {
  const auto recs = parse_registry("r | i*q | i*q | - | 5 | rational check | rational");
  const auto reports = verify(recs[0], VerifyOptions{});
  EXPECT_EQ(reports[0].outcome, Outcome::fail);
}

TEST(Verify, ExitStatusPrecedence) {
  VerificationReport p, f, e, d;
  p.outcome = Outcome::pass;
  f.outcome = Outcome::fail;
  e.outcome = Outcome::error;
  d.outcome = Outcome::degenerate;
  EXPECT_EQ(exit_status({p}), 0);
  EXPECT_EQ(exit_status({p, d}), 3);
  EXPECT_EQ(exit_status({d, e}), 2);
  EXPECT_EQ(exit_status({e, f, d}), 1);
}

TEST(Verify, SummaryJsonRoundTrip) {
  VerifyOptions o;
  o.fault_id = "rel.mu-R2";
  std::vector<IdentityRecord> recs{*find_record(builtin_registry(), "rel.mu-R2"),
                                   *find_record(builtin_registry(), "thm2.3.limit")};
  const VerificationSummary s = verify_all(recs, o, 2);
  const VerificationSummary back = load_summary(summary_to_json(s).dump());
  EXPECT_EQ(back.order, s.order);
  EXPECT_EQ(back.records, s.records);
  ASSERT_EQ(back.reports.size(), s.reports.size());
  for (std::size_t k = 0; k < s.reports.size(); ++k) {
    EXPECT_EQ(key(back.reports[k]), key(s.reports[k]));
    EXPECT_EQ(back.reports[k].seconds, s.reports[k].seconds);
  }
  EXPECT_EQ(s.count(Outcome::fail), 1u);
  EXPECT_THROW((void)load_summary("{}"), Error);
  EXPECT_THROW((void)load_summary("not json"), Error);
}

TEST(Verify, RenderersMentionEveryReport) {
  std::vector<IdentityRecord> recs{*find_record(builtin_registry(), "rel.mu-R2")};
  const VerificationSummary s = verify_all(recs, VerifyOptions{}, 1);
  EXPECT_NE(render_text(s).find("rel.mu-R2"), std::string::npos);
  EXPECT_NE(render_markdown(s).find("rel.mu-R2"), std::string::npos);
}

TEST(Verify, ResultsDoNotDependOnJobCount) {
  std::vector<IdentityRecord> recs;
  for (const auto& r : builtin_registry())
    if (r.id.rfind("hyper.", 0) == 0 || r.id.rfind("alm.", 0) == 0) recs.push_back(r);
  VerifyOptions o;
  o.order = 30;
  const VerificationSummary one = verify_all(recs, o, 1);
  const VerificationSummary many = verify_all(recs, o, 4);
  ASSERT_EQ(one.reports.size(), many.reports.size());
  for (std::size_t k = 0; k < one.reports.size(); ++k) {
    EXPECT_EQ(key(one.reports[k]), key(many.reports[k]));
    EXPECT_EQ(one.reports[k].outcome, Outcome::pass) << report_line(one.reports[k]);
  }
}

TEST(Verify, OracleModeAgrees) {
  VerifyOptions o;
  o.oracle = true;
  for (const char* id : {"appB.fc-2Mc", "cor.omega-pair", "thm2.6"}) {
    for (const auto& r : verify(*find_record(builtin_registry(), id), o)) EXPECT_EQ(r.outcome, Outcome::pass) << report_line(r);
  }
}

}  // namespace
}  // namespace qmock
