// qmock command-line front end: expand expressions, verify registry
// identities, list the catalog and print partition rank tables.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmock/qmock.hpp"

namespace {

using namespace qmock;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

struct CliConfig {
  long order = 40;
  std::string field = "auto";
  std::string format = "text";
  unsigned jobs = 0;
  bool oracle = false;
  std::string registry_path;
  std::vector<std::string> binds;
  std::string inject_fault;
};

int field_conductor(const std::string& f) {
  if (f == "auto") return 0;
  if (f == "1") return 1;
  if (f == "3") return 3;
  if (f == "4") return 4;
  fail(ErrorKind::invalid_argument, "--field must be auto, 1, 3 or 4");
}

Bindings parse_bindings(const std::vector<std::string>& binds) {
  Bindings out;
  for (const auto& b : binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos) {
      out.emplace_back("x", detail::trim(b));  // bare value binds x
      continue;
    }
    if (eq == 0) fail(ErrorKind::invalid_argument, "binding '" + b + "' must look like var=monomial");
    out.emplace_back(detail::trim(b.substr(0, eq)), detail::trim(b.substr(eq + 1)));
  }
  return out;
}

std::vector<IdentityRecord> load_registry(const CliConfig& cfg) {
  if (cfg.registry_path.empty()) return builtin_registry();
  std::ifstream in(cfg.registry_path);
  if (!in) fail(ErrorKind::invalid_argument, "cannot read registry file '" + cfg.registry_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_registry(buf.str());
}

VerifyOptions verify_options(const CliConfig& cfg) {
  VerifyOptions o;
  o.order = cfg.order;
  o.field = field_conductor(cfg.field);
  o.oracle = cfg.oracle;
  if (!cfg.inject_fault.empty()) {
    const auto colon = cfg.inject_fault.find(':');
    o.fault_id = cfg.inject_fault.substr(0, colon);
    if (colon != std::string::npos) o.fault_index = std::stol(cfg.inject_fault.substr(colon + 1));
  }
  return o;
}

int exit_for_error(const Error& e) { return e.is_degenerate() ? kExitDegenerate : kExitUsage; }

void print_summary(const VerificationSummary& s, const std::string& format) {
  if (format == "json")
    std::cout << summary_to_json(s).dump(2) << "\n";
  else if (format == "md")
    std::cout << render_markdown(s);
  else
    std::cout << render_text(s);
}

int cmd_expand(const CliConfig& cfg, const std::string& text) {
  const Series s = evaluate_text(text, parse_bindings(cfg.binds), cfg.order, field_conductor(cfg.field), cfg.oracle);
  if (cfg.format == "json") {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back({{"exponent", exponent_text(e, s.scale())}, {"coeff", c.to_string()}});
    std::cout << nlohmann::json{{"expression", text}, {"order", cfg.order}, {"series", s.to_text()}, {"terms", terms}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << s.to_text() << "\n";
  }
  return kExitPass;
}

int cmd_verify(const CliConfig& cfg, const std::string& id, const std::string& lhs, const std::string& rhs) {
  VerifyOptions opt = verify_options(cfg);
  const auto records = load_registry(cfg);
  IdentityRecord adhoc;
  const IdentityRecord* rec = nullptr;
  if (!id.empty()) {
    if (!lhs.empty() || !rhs.empty()) fail(ErrorKind::invalid_argument, "give either an id or --lhs/--rhs, not both");
    rec = find_record(records, id);
    if (!rec) fail(ErrorKind::unknown_name, "no registry record '" + id + "'");
  } else {
    if (lhs.empty() || rhs.empty()) fail(ErrorKind::invalid_argument, "verify needs an id or both --lhs and --rhs");
    adhoc.id = "adhoc";
    adhoc.lhs = lhs;
    adhoc.rhs = rhs;
    adhoc.min_order = 1;
    rec = &adhoc;
    if (!cfg.inject_fault.empty()) opt.fault_id = "adhoc";
  }
  if (!cfg.binds.empty()) opt.bindings = parse_bindings(cfg.binds);
  VerificationSummary s;
  s.order = opt.order;
  s.records = 1;
  s.reports = verify(*rec, opt);
  for (const auto& r : s.reports) s.seconds += r.seconds;
  print_summary(s, cfg.format);
  return exit_status(s.reports);
}

int cmd_verify_all(const CliConfig& cfg) {
  const auto records = load_registry(cfg);
  const VerificationSummary s = verify_all(records, verify_options(cfg), cfg.jobs);
  print_summary(s, cfg.format);
  return exit_status(s.reports);
}

std::string arity_text(const CatalogEntry& e) { return e.arity == Arity::two_param ? "(x, base)" : "(base)"; }

int cmd_list(const CliConfig& cfg) {
  const auto records = load_registry(cfg);
  if (cfg.format == "json") {
    nlohmann::json cat = nlohmann::json::array();
    for (const auto& e : catalog())
      cat.push_back({{"name", e.name},
                     {"order", e.order},
                     {"arity", e.arity == Arity::two_param ? "x,base" : "base"},
                     {"bilateral", !e.bilateral.empty()},
                     {"note", e.note}});
    nlohmann::json reg = nlohmann::json::array();
    for (const auto& r : records)
      reg.push_back({{"id", r.id}, {"aliases", r.aliases}, {"pairs", r.pair_count()}, {"tags", r.tags}, {"anchor", r.anchor}});
    std::cout << nlohmann::json{{"catalog", cat}, {"registry", reg}}.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "catalog:\n";
  for (const auto& e : catalog()) {
    std::cout << "  " << e.name << arity_text(e) << "  order " << e.order << "\n";
    if (!e.bilateral.empty())
      std::cout << "  " << e.name << "_c" << (e.note.empty() ? "" : " (" + e.note + ")") << "\n";
    else if (!e.note.empty())
      std::cout << "  " << e.name << "_c unavailable (" << e.note << ")\n";
  }
  std::cout << "  alm(x, base, z)  Appell-Lerch sum\n";
  std::size_t pairs = 0;
  for (const auto& r : records) pairs += r.pair_count();
  std::cout << "registry: " << records.size() << " records, " << pairs << " specializations\n";
  for (const auto& r : records) {
    std::string tags;
    for (const auto& t : r.tags) tags += (tags.empty() ? "" : ",") + t;
    std::cout << "  " << r.id << "  [" << tags << "] x" << r.pair_count() << "  " << r.anchor << "\n";
  }
  return kExitPass;
}

int cmd_rank_table(const CliConfig& cfg, int n_max, const std::vector<std::string>& cs) {
  const RankTable table = partition_rank_table(n_max);
  if (cfg.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n <= n_max; ++n) {
      nlohmann::json row = nlohmann::json::object();
      for (const auto& [m, count] : table[static_cast<std::size_t>(n)]) row[std::to_string(m)] = count;
      rows.push_back({{"n", n}, {"ranks", row}});
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    for (int n = 0; n <= n_max; ++n) {
      long total = 0;
      std::cout << "n=" << n << ":";
      for (const auto& [m, count] : table[static_cast<std::size_t>(n)]) {
        std::cout << " N(" << m << ")=" << count;
        total += count;
      }
      std::cout << "  total " << total << "\n";
    }
  }
  int status = kExitPass;
  for (const auto& c : cs) {
    Evaluator ev(1);
    const QMonomial v = ev.monomial(parse_expression(c));
    if (v.exp != 0) fail(ErrorKind::invalid_argument, "rank cross-check needs a constant, got '" + c + "'");
    const long bad = rank_cross_check(table, v.coeff);
    std::ostream& os = cfg.format == "json" ? std::cerr : std::cout;
    if (bad < 0) {
      os << "R(" << c << ",q) cross-check: OK\n";
    } else {
      os << "R(" << c << ",q) cross-check: MISMATCH at q^" << bad << "\n";
      status = kExitFail;
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series expansion and identity verification for mock theta functions"};
  app.require_subcommand(1);
  app.fallthrough();
  CliConfig cfg;
  app.add_option("--order", cfg.order, "truncation order N")
      ->envname("QMOCK_ORDER")
      ->check(CLI::PositiveNumber);
  app.add_option("--field", cfg.field, "coefficient field conductor")->check(CLI::IsMember({"auto", "1", "3", "4"}));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "md"}));
  app.add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
  app.add_flag("--oracle", cfg.oracle, "cross-check every summation against the naive oracle");
  app.add_option("--registry", cfg.registry_path, "registry file replacing the built-in one");
  app.add_option("-x,--bind", cfg.binds, "binding var=monomial, or a bare value for x (repeatable)");
  app.add_option("--inject-fault", cfg.inject_fault, "add q^7 to the RHS of id[:index]");

  std::string expr_text;
  auto* expand = app.add_subcommand("expand", "print the truncated series of an expression");
  expand->add_option("expr", expr_text, "expression")->required();

  std::string verify_id, lhs, rhs;
  auto* verify_cmd = app.add_subcommand("verify", "verify one registry record or an ad hoc pair");
  verify_cmd->add_option("id", verify_id, "registry id or alias");
  verify_cmd->add_option("--lhs", lhs, "left-hand side expression");
  verify_cmd->add_option("--rhs", rhs, "right-hand side expression");

  auto* verify_all_cmd = app.add_subcommand("verify-all", "verify every registry record over its panel");
  auto* list = app.add_subcommand("list", "list the catalog and the registry");
  auto* export_cmd = app.add_subcommand("export-registry", "print the registry in its text format");

  int n_max = 10;
  std::vector<std::string> cs{"2", "3"};
  auto* rank = app.add_subcommand("rank-table", "partition rank counts N(m,n) and the R(c,q) cross-check");
  rank->add_option("n_max", n_max, "largest n (at most 30)");
  rank->add_option("-c,--check", cs, "values c for the cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*expand) return cmd_expand(cfg, expr_text);
    if (*verify_cmd) return cmd_verify(cfg, verify_id, lhs, rhs);
    if (*verify_all_cmd) return cmd_verify_all(cfg);
    if (*list) return cmd_list(cfg);
    if (*export_cmd) {
      std::cout << export_registry(load_registry(cfg));
      return kExitPass;
    }
    if (*rank) return cmd_rank_table(cfg, n_max, cs);
  } catch (const Error& e) {
    std::cerr << "qmock: " << e.what() << "\n";
    return exit_for_error(e);
  } catch (const std::exception& e) {
    std::cerr << "qmock: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
