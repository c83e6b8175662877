#pragma once

// Verification harness: evaluates both sides of a registry record at each
// specialization with independent evaluators and compares coefficients
// exactly up to the requested order.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "qmock/eval.hpp"
#include "qmock/oracles.hpp"
#include "qmock/registry.hpp"

namespace qmock {

enum class Outcome { pass, fail, degenerate, error };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::degenerate: return "degenerate";
    case Outcome::error: return "error";
  }
  return "error";
}

inline Outcome outcome_from_string(const std::string& s) {
  if (s == "pass") return Outcome::pass;
  if (s == "fail") return Outcome::fail;
  if (s == "degenerate") return Outcome::degenerate;
  if (s == "error") return Outcome::error;
  fail(ErrorKind::parse_error, "unknown outcome '" + s + "'");
}

struct VerificationReport {
  std::string id;
  std::string specialization;  // "x=2, z=-1" or "-"
  long order = 0;
  Outcome outcome = Outcome::error;
  std::string first_mismatch;  // exponent text, fail only
  std::string lhs_coeff;
  std::string rhs_coeff;
  std::string reason;  // degenerate, error or fail detail
  double seconds = 0;
};

struct VerifyOptions {
  long order = 40;
  int field = 0;  // 0 = auto, else a fixed conductor 1, 3 or 4
  bool oracle = false;
  // Adds q^7 to the right-hand side of the matching pair, to show a check is not vacuous.
  std::string fault_id;
  long fault_index = -1;  // -1: every specialization of fault_id
  std::optional<Bindings> bindings;  // replaces the record's panel
};

namespace detail {

inline bool uses_scalar(const NodePtr& n, NodeKind k) {
  if (!n) return false;
  if (n->kind == k) return true;
  for (const auto& c : n->args)
    if (uses_scalar(c, k)) return true;
  return false;
}

inline int literal_conductor(const NodePtr& n) {
  int c = 1;
  if (uses_scalar(n, NodeKind::imag_unit)) c = 4;
  if (uses_scalar(n, NodeKind::cube_root)) c = (c == 4) ? -1 : 3;
  return c;
}

inline int join_conductor(int a, int b) {
  if (a < 0 || b < 0) return -1;
  if (a == 1) return b;
  if (b == 1 || a == b) return a;
  return -1;
}

// Engine sum cross-checked against plain loop summation over the certified
// range widened by five terms on each tail.
inline Series oracle_summer(const SeriesFamily& fam, Exp target) {
  Series engine = sum_family(fam, target);
  const CutoffCertificate cert = certify(fam, target);
  const long R = std::max(cert.n_hi, -cert.n_lo) + 5;
  Series naive = naive_bilateral(fam, R, target);
  const auto cmp = equal_to_order_scaled(engine, naive, target);
  if (!cmp.equal)
    fail(ErrorKind::invalid_argument, "oracle disagreement at q^" + exponent_text(cmp.first_mismatch, fam.scale));
  return engine;
}

}  // namespace detail

// Exponent scale and variable values for evaluating `exprs` under `bindings`.
struct Specialization {
  int scale = 1;
  int conductor = 1;
  Env env;
};

inline Specialization specialize(const std::vector<NodePtr>& exprs, const Bindings& bindings, int field = 0) {
  long scale = 1;
  int conductor = 1;
  for (const auto& e : exprs) {
    scale = std::lcm(scale, static_cast<long>(required_scale(e)));
    conductor = detail::join_conductor(conductor, detail::literal_conductor(e));
  }
  std::vector<std::pair<std::string, NodePtr>> parsed;
  for (const auto& [name, text] : bindings) {
    NodePtr e = parse_expression(text);
    scale = std::lcm(scale, static_cast<long>(required_scale(e)));
    conductor = detail::join_conductor(conductor, detail::literal_conductor(e));
    parsed.emplace_back(name, e);
  }
  if (conductor < 0) fail(ErrorKind::incompatible_conductors, "expression mixes i and w");
  if (field != 0 && conductor != 1 && conductor != field)
    fail(ErrorKind::incompatible_conductors,
         "needs conductor " + std::to_string(conductor) + " but the field is fixed to " + std::to_string(field));
  Specialization sp;
  sp.scale = static_cast<int>(scale);
  sp.conductor = conductor;
  Evaluator binder(sp.scale);
  for (const auto& [name, e] : parsed) sp.env[name] = binder.monomial(e);
  return sp;
}

// Evaluates one expression text to order N under the given bindings.
inline Series evaluate_text(const std::string& text, const Bindings& bindings, long order, int field = 0,
                            bool oracle = false) {
  const NodePtr e = parse_expression(text);
  const Specialization sp = specialize({e}, bindings, field);
  Evaluator::Summer summer;
  if (oracle) summer = detail::oracle_summer;
  Evaluator ev(sp.scale, sp.env, summer);
  return ev.evaluate_to_order(e, order);
}

inline VerificationReport verify_pair(const IdentityRecord& rec, const Bindings& bindings, const VerifyOptions& opt,
                                      bool inject_fault = false) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  VerificationReport rep;
  rep.id = rec.id;
  rep.specialization = bindings_label(bindings);
  rep.order = opt.order;
  std::string side;
  try {
    const NodePtr lhs = parse_expression(rec.lhs);
    const NodePtr rhs = parse_expression(rec.rhs);
    const Specialization sp = specialize({lhs, rhs}, bindings, opt.field);
    const long scale = sp.scale;
    const Env& env = sp.env;
    Evaluator::Summer summer;
    if (opt.oracle) summer = detail::oracle_summer;
    Evaluator left(static_cast<int>(scale), env, summer);
    Evaluator right(static_cast<int>(scale), env, summer);
    side = "lhs: ";
    Series a = left.evaluate_to_order(lhs, opt.order);
    side = "rhs: ";
    Series b = right.evaluate_to_order(rhs, opt.order);
    side.clear();
    if (inject_fault)
      b = (b + Series::monomial(static_cast<int>(scale), QMonomial(FieldElement(1), 7 * scale)))
              .truncated(static_cast<Exp>(opt.order) * scale);
    const auto cmp = equal_to_order(a, b, opt.order);
    if (!cmp.equal) {
      rep.outcome = Outcome::fail;
      rep.first_mismatch = exponent_text(cmp.first_mismatch, static_cast<int>(scale));
      rep.lhs_coeff = cmp.lhs.to_string();
      rep.rhs_coeff = cmp.rhs.to_string();
      rep.reason = "coefficients of q^" + rep.first_mismatch + " differ";
    } else if (rec.has_tag("rational") && (a.conductor() != 1 || b.conductor() != 1)) {
      rep.outcome = Outcome::fail;
      rep.reason = "coefficients are not rational";
    } else {
      rep.outcome = Outcome::pass;
    }
  } catch (const Error& e) {
    rep.outcome = e.is_degenerate() ? Outcome::degenerate : Outcome::error;
    rep.reason = side + e.what();
  } catch (const std::exception& e) {
    rep.outcome = Outcome::error;
    rep.reason = side + e.what();
  }
  rep.seconds = std::chrono::duration<double>(clock::now() - t0).count();
  return rep;
}

inline std::vector<Bindings> specializations_of(const IdentityRecord& rec, const VerifyOptions& opt) {
  if (opt.bindings) return {*opt.bindings};
  if (rec.panel.empty()) return {Bindings{}};
  return rec.panel;
}

inline std::vector<VerificationReport> verify(const IdentityRecord& rec, const VerifyOptions& opt) {
  if (opt.order < rec.min_order)
    fail(ErrorKind::invalid_argument, rec.id + " needs order >= " + std::to_string(rec.min_order));
  std::vector<VerificationReport> out;
  const auto specs = specializations_of(rec, opt);
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const bool fault = rec.matches(opt.fault_id) && (opt.fault_index < 0 || opt.fault_index == static_cast<long>(k));
    out.push_back(verify_pair(rec, specs[k], opt, fault));
  }
  return out;
}

struct VerificationSummary {
  long order = 0;
  std::size_t records = 0;
  std::vector<VerificationReport> reports;  // registry order, then panel order
  double seconds = 0;

  std::size_t count(Outcome o) const {
    return static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [&](const auto& r) { return r.outcome == o; }));
  }
  bool all_pass() const { return count(Outcome::pass) == reports.size(); }
};

// Fans (record, specialization) pairs out to a pool; results land in fixed
// slots so the merged report does not depend on scheduling.
inline VerificationSummary verify_all(const std::vector<IdentityRecord>& records, const VerifyOptions& opt,
                                      unsigned jobs = 0) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  struct Task {
    const IdentityRecord* rec;
    Bindings bindings;
    bool fault;
  };
  std::vector<Task> tasks;
  VerifyOptions local = opt;
  local.bindings.reset();
  for (const auto& r : records) {
    const auto specs = specializations_of(r, local);
    for (std::size_t k = 0; k < specs.size(); ++k) {
      const bool fault = r.matches(opt.fault_id) && (opt.fault_index < 0 || opt.fault_index == static_cast<long>(k));
      tasks.push_back({&r, specs[k], fault});
    }
  }
  VerificationSummary summary;
  summary.order = opt.order;
  summary.records = records.size();
  summary.reports.resize(tasks.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      const Task& t = tasks[k];
      VerifyOptions o = local;
      o.order = std::max(opt.order, t.rec->min_order);
      summary.reports[k] = verify_pair(*t.rec, t.bindings, o, t.fault);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  summary.seconds = std::chrono::duration<double>(clock::now() - t0).count();
  return summary;
}

// Exit status contract: 0 all pass, 1 any mismatch, 2 evaluation or usage
// error, 3 degenerate specialization.
inline int exit_status(const std::vector<VerificationReport>& reports) {
  bool any_fail = false, any_error = false, any_degenerate = false;
  for (const auto& r : reports) {
    any_fail |= r.outcome == Outcome::fail;
    any_error |= r.outcome == Outcome::error;
    any_degenerate |= r.outcome == Outcome::degenerate;
  }
  if (any_fail) return 1;
  if (any_error) return 2;
  if (any_degenerate) return 3;
  return 0;
}

// ------------------------------------------------------------- rendering

inline std::string report_line(const VerificationReport& r) {
  std::ostringstream os;
  os << r.id << " [" << r.specialization << "] order " << r.order << ": ";
  switch (r.outcome) {
    case Outcome::pass: os << "PASS"; break;
    case Outcome::fail:
      os << "FAIL";
      if (!r.first_mismatch.empty())
        os << " at q^" << r.first_mismatch << " (lhs " << r.lhs_coeff << ", rhs " << r.rhs_coeff << ")";
      else
        os << " (" << r.reason << ")";
      break;
    case Outcome::degenerate: os << "DEGENERATE (" << r.reason << ")"; break;
    case Outcome::error: os << "ERROR (" << r.reason << ")"; break;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, " %.3fs", r.seconds);
  os << buf;
  return os.str();
}

inline std::string render_text(const VerificationSummary& s) {
  std::ostringstream os;
  for (const auto& r : s.reports) os << report_line(r) << "\n";
  os << "records: " << s.records << ", pairs: " << s.reports.size() << ", pass: " << s.count(Outcome::pass)
     << ", fail: " << s.count(Outcome::fail) << ", degenerate: " << s.count(Outcome::degenerate)
     << ", error: " << s.count(Outcome::error) << ", order: " << s.order << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "wall time: %.2fs\n", s.seconds);
  os << buf;
  os << "panel results are evidence at the listed specializations, not a symbolic proof in x\n";
  return os.str();
}

inline std::string render_markdown(const VerificationSummary& s) {
  auto cell = [](std::string v) {
    std::string out;
    for (char c : v) out += (c == '|') ? std::string("\\|") : std::string(1, c);
    return out;
  };
  std::ostringstream os;
  os << "| id | specialization | order | outcome | detail | seconds |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& r : s.reports) {
    std::string detail = r.outcome == Outcome::fail && !r.first_mismatch.empty()
                             ? "q^" + r.first_mismatch + ": " + r.lhs_coeff + " vs " + r.rhs_coeff
                             : r.reason;
    char sec[32];
    std::snprintf(sec, sizeof sec, "%.3f", r.seconds);
    os << "| " << cell(r.id) << " | " << cell(r.specialization) << " | " << r.order << " | "
       << to_string(r.outcome) << " | " << cell(detail) << " | " << sec << " |\n";
  }
  os << "\n**" << s.count(Outcome::pass) << "/" << s.reports.size() << " pairs pass** over " << s.records
     << " records at order " << s.order << ".\n";
  return os.str();
}

inline constexpr int kReportSchemaVersion = 1;

inline nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json j = {{"id", r.id},       {"specialization", r.specialization}, {"order", r.order},
                      {"outcome", to_string(r.outcome)}, {"seconds", r.seconds}};
  if (r.outcome == Outcome::fail && !r.first_mismatch.empty())
    j["mismatch"] = {{"exponent", r.first_mismatch}, {"lhs", r.lhs_coeff}, {"rhs", r.rhs_coeff}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.id = j.at("id").get<std::string>();
  r.specialization = j.at("specialization").get<std::string>();
  r.order = j.at("order").get<long>();
  r.outcome = outcome_from_string(j.at("outcome").get<std::string>());
  r.seconds = j.at("seconds").get<double>();
  if (j.contains("mismatch")) {
    r.first_mismatch = j["mismatch"].at("exponent").get<std::string>();
    r.lhs_coeff = j["mismatch"].at("lhs").get<std::string>();
    r.rhs_coeff = j["mismatch"].at("rhs").get<std::string>();
  }
  if (j.contains("reason")) r.reason = j["reason"].get<std::string>();
  return r;
}

inline nlohmann::json summary_to_json(const VerificationSummary& s) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : s.reports) reports.push_back(report_to_json(r));
  return {{"schema", "qmock-report"},
          {"version", kReportSchemaVersion},
          {"order", s.order},
          {"records", s.records},
          {"pairs", s.reports.size()},
          {"pass", s.count(Outcome::pass)},
          {"seconds", s.seconds},
          {"reports", reports}};
}

inline VerificationSummary load_summary(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse_error, std::string("report is not JSON: ") + e.what());
  }
  if (j.value("schema", "") != "qmock-report") fail(ErrorKind::parse_error, "not a qmock report");
  if (j.value("version", 0) != kReportSchemaVersion)
    fail(ErrorKind::parse_error, "unsupported report version " + std::to_string(j.value("version", 0)));
  VerificationSummary s;
  s.order = j.at("order").get<long>();
  s.records = j.at("records").get<std::size_t>();
  s.seconds = j.at("seconds").get<double>();
  for (const auto& r : j.at("reports")) s.reports.push_back(report_from_json(r));
  return s;
}

}  // namespace qmock
