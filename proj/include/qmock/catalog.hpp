#pragma once

// Named mock theta functions, universal two-parameter functions and their
// bilateral completions. Each definition is expression-language text in the
// function's own base q; two-parameter bodies refer to their first argument
// as `x`. A bilateral completion sums the same summand over all integers.

#include <string>
#include <string_view>
#include <vector>

#include "qmock/error.hpp"

namespace qmock {

enum class Arity { base_only, two_param };

struct CatalogEntry {
  std::string name;
  std::string order;  // "2", "3", "5", "6", "8", "universal", "other"
  Arity arity = Arity::base_only;
  std::string unilateral;
  std::string bilateral;  // empty when the completion is undefined
  std::string note;
};

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    auto add = [&](std::string name, std::string order, std::string body, std::string lower, bool bilateral,
                   std::string note = "") {
      CatalogEntry e;
      e.name = std::move(name);
      e.order = std::move(order);
      e.unilateral = "sum(n>=" + lower + "; " + body + ")";
      if (bilateral) e.bilateral = "sum(n; " + body + ")";
      e.note = std::move(note);
      v.push_back(std::move(e));
    };
    // third order
    add("f", "3", "q^(n^2)/poch(-q, 1, n)^2", "0", true);
    add("phi", "3", "q^(n^2)/poch(-q^2, 2, n)", "0", true);
    add("psi", "3", "q^(n^2)/poch(q, 2, n)", "1", true);
    add("chi", "3", "poch(-q, 1, n)*q^(n^2)/poch(-q^3, 3, n)", "0", true);
    add("omega", "3", "q^(2*n^2 + 2*n)/poch(q, 2, n + 1)^2", "0", true);
    add("nu", "3", "q^(n^2 + n)/poch(-q, 2, n + 1)", "0", true);
    add("rho", "3", "poch(q, 2, n + 1)*q^(2*n^2 + 2*n)/poch(q^3, 6, n + 1)", "0", true);
    {
      CatalogEntry e;
      e.name = "xi";
      e.order = "3";
      const std::string body = "q^(6*n^2 - 6*n + 1)/(poch(q, 6, n)*poch(q^5, 6, n))";
      e.unilateral = "1 + 2*sum(n>=1; " + body + ")";
      e.bilateral = "1 + 2*sum(n; " + body + ")";
      e.note = "no relations; expansion only";
      v.push_back(std::move(e));
    }
    add("sigma", "3", "q^(3*n^2 - 3*n)/(poch(-q, 3, n)*poch(-q^2, 3, n))", "1", true);
    // sixth order
    add("gamma", "6", "poch(q, 1, n)*q^(n^2)/poch(q^3, 3, n)", "0", false,
        "completion undefined: (q;q)_n has a pole for every n < 0");
    add("phi_minus", "6", "poch(-q, 1, 2*n - 1)*q^n/poch(q, 2, n)", "1", true);
    add("beta", "6", "q^(3*n^2 + 3*n + 1)/(poch(q, 3, n + 1)*poch(q^2, 3, n + 1))", "0", true);
    add("Phi_cap", "6", "poch(-q, 1, 2*n)*q^(n + 1)/poch(q, 2, n + 1)^2", "0", true);
    // eighth order
    add("U0", "8", "poch(-q, 2, n)*q^(n^2)/poch(-q^4, 4, n)", "0", true);
    add("U1", "8", "poch(-q, 2, n)*q^((n + 1)^2)/poch(-q^2, 4, n + 1)", "0", true);
    add("V1", "8", "poch(-q^4, 4, n)*q^(2*n^2 + 2*n + 1)/poch(q, 2, 2*n + 2)", "0", true);
    // second order
    add("A", "2", "poch(-q, 2, n)*q^((n + 1)^2)/poch(q, 2, n + 1)^2", "0", true);
    add("B", "2", "poch(-q^2, 2, n)*q^(n^2 + n)/poch(q, 2, n + 1)^2", "0", true);
    add("mu", "2", "(-1)^n*poch(q, 2, n)*q^(n^2)/poch(-q^2, 2, n)^2", "0", true);
    add("R2", "2", "(-1)^n*poch(q, 2, n)*(1 + q)*q^(n^2 + 2*n)/(poch(-q^2, 2, n)*poch(-q^2, 2, n + 1))", "0", true);
    // other
    add("M", "other", "q^(n^2 + n)/(poch(-1, 1, n + 1)*poch(-q, 1, n + 1))", "0", true);
    add("N", "other", "q^(6*n^2 + 6*n + 1)/(poch(q, 6, n + 1)*poch(q^5, 6, n + 1))", "0", true);
    // fifth order
    add("f0", "5", "q^(n^2)/poch(-q, 1, n)", "0", true);
    add("psi0", "5", "q^((n + 1)*(n + 2)/2)*poch(-q, 1, n)", "0", false,
        "half of the negative-index part of f0_c");
    {
      CatalogEntry e;
      e.name = "D5";
      e.order = "other";
      e.unilateral = "sum(n>=0; poch(q, 2, n)^2*q^(2*n))/poch(q, 2, inf)^2";
      v.push_back(std::move(e));
    }
    // universal two-parameter functions
    auto add2 = [&](std::string name, std::string body, std::string prefix = "") {
      CatalogEntry e;
      e.name = std::move(name);
      e.order = "universal";
      e.arity = Arity::two_param;
      e.unilateral = prefix + "sum(n>=0; " + body + ")";
      e.bilateral = prefix + "sum(n; " + body + ")";
      v.push_back(std::move(e));
    };
    add2("g3", "q^(n^2 + n)/(poch(x, 1, n + 1)*poch(q/x, 1, n + 1))");
    add2("g2", "poch(-q, 1, n)*q^(n*(n + 1)/2)/(poch(x, 1, n + 1)*poch(q/x, 1, n + 1))");
    add2("R", "q^(n^2)/(poch(x*q, 1, n)*poch(q/x, 1, n))");
    add2("K", "(-1)^n*poch(q, 2, n)*q^(n^2)/(poch(x*q^2, 2, n)*poch(q^2/x, 2, n))");
    add2("K1", "(-1)^n*poch(q, 2, n)*q^((n + 1)^2)/(poch(x*q, 2, n + 1)*poch(q/x, 2, n + 1))");
    add2("S2", "poch(-q, 1, 2*n)*q^(n + 1)/(poch(x*q, 2, n + 1)*poch(q/x, 2, n + 1))", "(1 + 1/x)*");
    return v;
  }();
  return entries;
}

inline const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

// Splits "omega_c" into ("omega", true).
inline std::pair<std::string, bool> split_variant(const std::string& name) {
  if (name.size() > 2 && name.compare(name.size() - 2, 2, "_c") == 0) return {name.substr(0, name.size() - 2), true};
  return {name, false};
}

}  // namespace qmock
