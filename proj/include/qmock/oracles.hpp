#pragma once

// Brute-force baselines for differential testing: plain bilateral loop
// summation built only from series ring operations, and exhaustive
// partition enumeration for rank statistics.

#include <functional>
#include <map>
#include <vector>

#include "qmock/hypergeom.hpp"
#include "qmock/series.hpp"

namespace qmock {

namespace detail {

// One summand as a product of two-term series, with working precision w.
// Each factor 1 - c q^e is split into its leading monomial and a unit, and
// units are multiplied out only as far as the final term needs.
inline Series naive_term(const SeriesFamily& fam, long n, Exp w) {
  const int s = fam.scale;
  QMonomial lead(fam.scalar * fam.u.coeff.pow(n), quad_exponent(fam, n) + fam.u.exp * n);
  struct Unit {
    Exp e;
    FieldElement c;  // unit 1 - c q^e with e > 0
    int power;
  };
  std::vector<Unit> units;
  struct Tail {
    Exp first, step;
    FieldElement c;
    int power;
  };
  std::vector<Tail> tails;  // positive-exponent factors of infinite products
  for (const PochAtom& atom : fam.atoms) {
    const PochhammerSpec spec = atom.spec_at(n);
    const Exp a = spec.arg.exp, m = spec.modulus;
    std::vector<Exp> exps;
    bool reciprocal = false;
    const bool divide_atom = (atom.multiplicity < 0) != !atom.numerator;
    if (!spec.count) {
      Exp j = 0;
      for (; a + j * m <= 0; ++j) exps.push_back(a + j * m);
      tails.push_back({a + j * m, m, spec.arg.coeff, (divide_atom ? -1 : 1) * std::abs(atom.multiplicity)});
    } else if (*spec.count >= 0) {
      for (long j = 0; j < *spec.count; ++j) exps.push_back(a + j * m);
    } else {
      for (long j = *spec.count; j <= -1; ++j) exps.push_back(a + j * m);
      reciprocal = true;
    }
    const bool divide = reciprocal != divide_atom;
    const int power = (divide ? -1 : 1) * std::abs(atom.multiplicity);
    const FieldElement& c = spec.arg.coeff;
    for (Exp e : exps) {
      if (e > 0) {
        units.push_back({e, c, power});
      } else if (e < 0) {
        lead = QMonomial(lead.coeff * (-c).pow(power), lead.exp + e * power);
        units.push_back({-e, c.inverse(), power});
      } else {
        const FieldElement v = FieldElement(1) - c;
        if (v.is_zero()) {
          if (power < 0) fail(ErrorKind::pole_in_term, "vanishing factor at n=" + std::to_string(n));
          return Series::zero(s);
        }
        lead = QMonomial(lead.coeff * v.pow(power), lead.exp);
      }
    }
  }
  const Exp rel = w - lead.exp;
  for (const Tail& t : tails)
    for (Exp e = t.first; e <= rel; e += t.step) units.push_back({e, t.c, t.power});
  Series body = Series::constant(s, FieldElement(1));
  if (rel >= 0) {
    for (const Unit& u : units) {
      if (u.e > rel) continue;
      const Series f = Series::from_terms(s, kExact, {{0, FieldElement(1)}, {u.e, -u.c}});
      const Series g = u.power < 0 ? invert(f, rel) : f;
      for (int k = 0; k < std::abs(u.power); ++k) body = (body * g).truncated(rel);
    }
    body = body.truncated(rel);
  } else {
    body = Series::zero(s, rel);
  }
  return body.times_monomial(lead);
}

inline Series naive_term_to(const SeriesFamily& fam, long n, Exp target) {
  Exp w = target + 4 * fam.scale;
  for (int round = 0; round < 12; ++round) {
    Series t = naive_term(fam, n, w);
    if (t.prec() >= target) return t.is_exact() ? t : t.truncated(target);
    w += (w - target) + 8 * fam.scale + (target - t.prec());
  }
  fail(ErrorKind::order_exceeds_guarantee, "naive term did not reach the requested order at n=" + std::to_string(n));
}

}  // namespace detail

// Sums n = -R..R (or lower..R for unilateral families) term by term. The
// terms just outside the window must already be invisible at the target.
inline Series naive_bilateral(const SeriesFamily& fam, long R, Exp target) {
  const long lo = fam.bilateral ? -R : fam.lower;
  Series total = Series::zero(fam.scale, target);
  for (long n = lo; n <= R; ++n) total += detail::naive_term_to(fam, n, target);
  std::vector<long> edges{R + 1};
  if (fam.bilateral) edges.push_back(-R - 1);
  for (long n : edges) {
    Series t = detail::naive_term_to(fam, n, target);
    if (!t.is_zero())
      fail(ErrorKind::not_convergent, "term at n=" + std::to_string(n) + " is still visible at the target order");
  }
  return total;
}

struct Partition {
  std::vector<int> parts;  // non-increasing
  int rank() const { return parts.empty() ? 0 : parts.front() - static_cast<int>(parts.size()); }
};

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back({cur});
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// table[n][m] = number of partitions of n with rank m.
using RankTable = std::vector<std::map<int, long>>;

inline RankTable enumerate_partitions(int n_max) {
  if (n_max < 0 || n_max > 60) fail(ErrorKind::invalid_argument, "n_max must be in [0, 60]");
  RankTable table(static_cast<std::size_t>(n_max + 1));
  for (int n = 0; n <= n_max; ++n)
    for (const auto& p : partitions_of(n)) ++table[static_cast<std::size_t>(n)][p.rank()];
  return table;
}

}  // namespace qmock
