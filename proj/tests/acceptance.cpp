// Acceptance run: one PASS/FAIL line per criterion, exact coefficient
// equality throughout. Exit status is 0 only when every criterion passes.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "test_support.hpp"

namespace {

using namespace qmock;
using namespace qmock::testing;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

const IdentityRecord& record(const std::string& id) {
  const IdentityRecord* r = find_record(builtin_registry(), id);
  if (!r) fail(ErrorKind::unknown_name, "missing registry record " + id);
  return *r;
}

// 1. Full registry at order 40.
Verdict full_registry(VerificationSummary& out) {
  Verdict o;
  const auto t0 = std::chrono::steady_clock::now();
  VerifyOptions opt;
  opt.order = 40;
  out = verify_all(builtin_registry(), opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& r : out.reports) o.require(r.outcome == qmock::Outcome::pass, report_line(r));
  o.require(out.records >= 45, "only " + std::to_string(out.records) + " records");
  o.require(out.reports.size() >= 90, "only " + std::to_string(out.reports.size()) + " pairs");
  o.require(secs < 300, "took " + std::to_string(secs) + "s");
  if (o.ok)
    o.detail = std::to_string(out.records) + " records, " + std::to_string(out.reports.size()) + " pairs, " +
               std::to_string(static_cast<int>(secs + 0.5)) + "s";
  return o;
}

// 2. Closed forms evaluated directly, independent of the registry text.
Verdict closed_forms() {
  Verdict o;
  const std::pair<const char*, const char*> forms[] = {
      {"phi_c(1)", "J(2)^7/(J(1)^3*J(4)^3)"},
      {"nu_c(1)", "2*J(4)^3/J(2)^2"},
      {"R(1, 1)", "1/J(1)"},
      {"mu(1) + R2(1)", "2"},
      {"omega_c(1)", "omega(1) + J(1)^2/J(2)^2*D5(1)"},
  };
  for (const auto& [lhs, rhs] : forms) {
    const auto cmp = equal_to_order(eval_text(lhs, 40), eval_text(rhs, 40), 40);
    o.require(cmp.equal, std::string(lhs) + " = " + rhs + " fails at scaled exponent " + std::to_string(cmp.first_mismatch));
  }
  if (o.ok) o.detail = "5 closed forms to q^40";
  return o;
}

// 3. Generic-x theorems over their panels plus the x = 1 probe.
Verdict generic_panels() {
  Verdict o;
  std::size_t pairs = 0;
  bool saw_rational = false, saw_cyclotomic = false;
  for (const char* id : {"thm2.1", "thm2.3", "thm2.6", "thm2.9.K-K1", "thm2.9.K-g2", "thm2.9.S2-g3"}) {
    const IdentityRecord& rec = record(id);
    for (const std::string x : {"2", "3/2", "-5"}) {
      bool listed = false;
      for (const auto& b : rec.panel)
        for (const auto& [k, v] : b) listed |= k == "x" && v == x;
      o.require(listed, std::string(id) + " panel lacks x=" + x);
    }
    for (const auto& r : verify(rec, VerifyOptions{})) {
      ++pairs;
      o.require(r.outcome == qmock::Outcome::pass, report_line(r));
      const bool cyc = r.specialization.find('i') != std::string::npos || r.specialization.find('w') != std::string::npos;
      (cyc ? saw_cyclotomic : saw_rational) = true;
    }
  }
  o.require(saw_rational && saw_cyclotomic, "panels must cover both rational and cyclotomic points");
  VerifyOptions probe;
  probe.bindings = Bindings{{"x", "1"}};
  const auto deg = verify(record("thm2.3"), probe);
  o.require(deg.size() == 1 && deg[0].outcome == qmock::Outcome::degenerate,
            "thm2.3 at x=1: " + (deg.empty() ? std::string("no report") : report_line(deg[0])));
  if (o.ok) o.detail = std::to_string(pairs) + " panel pairs pass; x=1 probe is degenerate";
  return o;
}

// 4. Naive loop vs certified cutoff on every bilateral catalog family.
Verdict oracle_agreement() {
  Verdict o;
  std::size_t families = 0;
  for (const auto& c : bilateral_catalog_cases()) {
    const auto fams = capture_families(c.expression, c.bindings, 30);
    o.require(!fams.empty(), c.expression + " summed no family");
    for (const auto& fam : fams) {
      ++families;
      const OracleVerdict v = compare_with_oracle(fam, 30);
      const OracleVerdict want = c.expression == "psi_c(1)" ? OracleVerdict::both_not_convergent : OracleVerdict::agree;
      o.require(v == want, c.expression + ": " + to_string(v));
    }
  }
  if (o.ok) o.detail = std::to_string(families) + " families to q^30, cutoffs stable under 5 extra terms per tail";
  return o;
}

// 5. Partition ranks vs R(c, q).
Verdict rank_oracle() {
  Verdict o;
  const RankTable t = partition_rank_table(15);
  for (long c : {2L, 3L}) {
    const long bad = rank_cross_check(t, FieldElement(c));
    o.require(bad < 0, "c=" + std::to_string(c) + " differs at q^" + std::to_string(bad));
  }
  if (o.ok) o.detail = "n <= 15, c in {2, 3}";
  return o;
}

// 6. Appell-Lerch shifts at their panels, order 30.
Verdict appell_lerch_laws() {
  Verdict o;
  VerifyOptions opt;
  opt.order = 30;
  std::size_t pairs = 0;
  for (const char* id : {"alm.z-shift", "alm.x-shift"}) {
    const auto reports = verify(record(id), opt);
    o.require(reports.size() >= 2, std::string(id) + " has fewer than 2 specializations");
    for (const auto& r : reports) {
      ++pairs;
      o.require(r.outcome == qmock::Outcome::pass, report_line(r));
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " specializations to q^30";
  return o;
}

// 7. Property suites, re-run with fixed seeds.
Verdict properties() {
  Verdict o;
  const std::pair<const char*, PropertyResult> runs[] = {
      {"pochhammer", pochhammer_laws(0xacce0701, 50)},
      {"theta", theta_routes(0xacce0702, 30)},
      {"field", field_axioms(0xacce0703, 200)},
      {"series ring", series_ring_axioms(0xacce0704, 200)},
      {"series inverse", series_inversion(0xacce0705, 200)},
      {"parser", parser_round_trip(0xacce0706, 200)},
  };
  int cases = 0;
  for (const auto& [name, r] : runs) {
    cases += r.cases;
    o.require(r.ok, std::string(name) + ": " + r.detail);
  }
  if (o.ok) o.detail = std::to_string(cases) + " generated cases";
  return o;
}

// 8. +q^7 on each right-hand side in turn. With criterion 1 passing, every
// other pair is unaffected, so each perturbation yields exactly one failure.
Verdict fault_sensitivity(const VerificationSummary& clean) {
  Verdict o;
  o.require(clean.all_pass(), "needs a clean full run");
  std::size_t perturbed = 0;
  for (const auto& rec : builtin_registry()) {
    VerifyOptions opt;
    opt.order = std::max(40L, rec.min_order);
    for (const auto& b : specializations_of(rec, opt)) {
      const VerificationReport r = verify_pair(rec, b, opt, true);
      ++perturbed;
      o.require(r.outcome == qmock::Outcome::fail && r.first_mismatch == "7", "perturbed " + report_line(r));
    }
  }
  VerifyOptions whole;
  whole.fault_id = "appB.mu-R2";
  const VerificationSummary one = verify_all(builtin_registry(), whole);
  o.require(one.count(qmock::Outcome::fail) == 1 && one.count(qmock::Outcome::pass) == one.reports.size() - 1,
            "full run with one perturbed record has " + std::to_string(one.count(qmock::Outcome::fail)) + " failures");
  if (o.ok) o.detail = std::to_string(perturbed) + " perturbations, each failing at q^7";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int n, const char* what, const Verdict& o) {
    std::cout << "criterion " << n << " " << (o.ok ? "PASS" : "FAIL") << ": " << what << " (" << o.detail << ")"
              << std::endl;
    if (!o.ok) ++failures;
  };
  auto guarded = [](auto&& fn) {
    try {
      return fn();
    } catch (const std::exception& e) {
      Verdict o;
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
      return o;
    }
  };
  VerificationSummary clean;
  report(1, "full registry at order 40", guarded([&] { return full_registry(clean); }));
  report(2, "closed forms", guarded(closed_forms));
  report(3, "generic-x panels and the x=1 probe", guarded(generic_panels));
  report(4, "naive oracle and cutoff soundness", guarded(oracle_agreement));
  report(5, "partition rank oracle", guarded(rank_oracle));
  report(6, "Appell-Lerch shifts", guarded(appell_lerch_laws));
  report(7, "property suites", guarded(properties));
  report(8, "fault sensitivity", guarded([&] { return fault_sensitivity(clean); }));
  return failures == 0 ? 0 : 1;
}
