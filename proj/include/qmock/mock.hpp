#pragma once

// Entry points for the named catalog: mock theta functions by name, the
// two-parameter functions at a chosen x, Appell-Lerch sums and the Dyson
// rank table.

#include <map>
#include <string>

#include "qmock/catalog.hpp"
#include "qmock/eval.hpp"
#include "qmock/oracles.hpp"

namespace qmock {

enum class Variant { unilateral, bilateral };

inline std::string variant_name(const std::string& name, Variant v) {
  return v == Variant::bilateral ? name + "_c" : name;
}

// name(q^dilation) to order N.
inline Series eval_named(const std::string& name, Variant v, long dilation, long order) {
  const CatalogEntry* e = find_catalog_entry(name);
  if (!e) fail(ErrorKind::unknown_name, "unknown function '" + name + "'");
  if (e->arity != Arity::base_only) fail(ErrorKind::invalid_argument, name + " takes a parameter x");
  Evaluator ev(1);
  return ev.evaluate_to_order(ast::call(variant_name(name, v), {ast::number(dilation)}), order);
}

// name(x, q^dilation) to order N; x lives on the exponent grid 1/scale.
inline Series eval_two_param(const std::string& name, const QMonomial& x, long dilation, Variant v, long order,
                             int scale = 1) {
  const CatalogEntry* e = find_catalog_entry(name);
  if (!e) fail(ErrorKind::unknown_name, "unknown function '" + name + "'");
  if (e->arity != Arity::two_param) fail(ErrorKind::invalid_argument, name + " takes no parameter");
  Evaluator ev(scale, Env{{"x", x}});
  return ev.evaluate_to_order(ast::call(variant_name(name, v), {ast::var("x"), ast::number(dilation)}), order);
}

// m(x, q^dilation, z) to order N.
inline Series appell_lerch(const QMonomial& x, const QMonomial& z, long dilation, long order, int scale = 1) {
  const Exp T = static_cast<Exp>(order) * scale;
  return appell_lerch_m(x, z, static_cast<Exp>(dilation) * scale, scale, T).truncated(T);
}

inline RankTable partition_rank_table(int n_max) {
  if (n_max < 0 || n_max > 30) fail(ErrorKind::invalid_argument, "rank table size must be in [0, 30]");
  return enumerate_partitions(n_max);
}

// Compares sum_m N(m,n) c^m with the q^n coefficient of R(c, q) for n <= n_max.
// Returns the first n that disagrees, or -1.
inline long rank_cross_check(const RankTable& table, const FieldElement& c) {
  const long n_max = static_cast<long>(table.size()) - 1;
  Series r = eval_two_param("R", QMonomial(c, 0), 1, Variant::unilateral, n_max);
  for (long n = 0; n <= n_max; ++n) {
    FieldElement acc(0);
    for (const auto& [m, count] : table[static_cast<std::size_t>(n)]) acc += FieldElement(count) * c.pow(m);
    if (!(acc == r.coeff(n))) return n;
  }
  return -1;
}

}  // namespace qmock
