#pragma once

// q-shifted factorials for every count in Z u {inf}, Jacobi theta functions
// j(z;q^M) by product and by bilateral sum, and the eta products J_m.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmock/series.hpp"

namespace qmock {

// Accumulates c * q^e * prod (1 - c_k q^{e_k})^{+-1} with every e_k > 0 and
// expands it with dense in-place kernels. Factors (1 - c q^e) with e <= 0
// are normalised on insertion: e == 0 becomes the scalar 1 - c, e < 0 is
// rewritten as (-c q^e)(1 - c^{-1} q^{-e}).
class FactorProduct {
 public:
  explicit FactorProduct(int scale) : scale_(scale) {}

  // Returns false if the factor is exactly zero (only possible when
  // multiplying); dividing by a zero factor throws pole_in_term.
  bool multiply_factor(const FieldElement& c, Exp e) { return add_factor(c, e, false); }
  void divide_factor(const FieldElement& c, Exp e) { add_factor(c, e, true); }

  void multiply_monomial(const QMonomial& m) {
    lead_ *= m.coeff;
    lead_exp_ += m.exp;
  }

  bool is_zero() const noexcept { return zero_; }
  Exp leading_exponent() const noexcept { return lead_exp_; }
  const FieldElement& leading_coeff() const noexcept { return lead_; }
  bool has_unit_factors() const noexcept { return !factors_.empty(); }

  // Exact when no unit factors remain, otherwise accurate to target.
  Series expand(Exp target) const {
    if (zero_) return Series::zero(scale_);
    if (factors_.empty()) return Series::monomial(scale_, QMonomial(lead_, lead_exp_));
    const Exp len = target - lead_exp_;
    if (len < 0) return Series::zero(scale_, target);
    std::vector<FieldElement> buf(static_cast<std::size_t>(len + 1));
    buf[0] = lead_;
    for (const auto& f : factors_) {
      if (f.exp > len) continue;
      const auto e = static_cast<std::size_t>(f.exp);
      const auto n = static_cast<std::size_t>(len);
      if (f.divide) {
        for (std::size_t k = e; k <= n; ++k)
          if (!buf[k - e].is_zero()) buf[k] += f.coeff * buf[k - e];
      } else {
        for (std::size_t k = n; k >= e; --k) {
          if (!buf[k - e].is_zero()) buf[k] -= f.coeff * buf[k - e];
          if (k == e) break;
        }
      }
    }
    return Series::from_dense(scale_, target, lead_exp_, buf);
  }

 private:
  struct Factor {
    FieldElement coeff;
    Exp exp;
    bool divide;
  };

  bool add_factor(const FieldElement& c, Exp e, bool divide) {
    if (e == 0) {
      FieldElement v = FieldElement(1) - c;
      if (v.is_zero()) {
        if (divide) fail(ErrorKind::pole_in_term, "division by a vanishing factor (1 - q^0)");
        zero_ = true;
        return false;
      }
      lead_ = divide ? lead_ / v : lead_ * v;
      return true;
    }
    FieldElement cc = c;
    Exp ee = e;
    if (e < 0) {
      QMonomial m(-c, e);
      if (divide) m = m.inverse();
      multiply_monomial(m);
      cc = c.inverse();
      ee = -e;
    }
    factors_.push_back({std::move(cc), ee, divide});
    return true;
  }

  int scale_;
  FieldElement lead_{1};
  Exp lead_exp_ = 0;
  bool zero_ = false;
  std::vector<Factor> factors_;
};

// (arg; q^modulus)_count with count in Z, or infinite when count is empty.
struct PochhammerSpec {
  QMonomial arg;
  Exp modulus = 1;  // scaled
  std::optional<long> count;

  static PochhammerSpec infinite(QMonomial a, Exp m) { return {std::move(a), m, std::nullopt}; }
  static PochhammerSpec finite(QMonomial a, Exp m, long n) { return {std::move(a), m, n}; }
};

// Exponent of the monomial that the non-positive factors of the spec
// contribute to the leading term (negated when the spec is divided out).
inline Exp pochhammer_lead_exponent(const PochhammerSpec& spec, bool invert) {
  const Exp a = spec.arg.exp, m = spec.modulus;
  Exp total = 0;
  if (!spec.count) {
    for (Exp j = 0; a + j * m < 0; ++j) total += a + j * m;
  } else if (*spec.count >= 0) {
    for (long j = 0; j < *spec.count; ++j) total += std::min<Exp>(0, a + j * m);
  } else {
    for (long j = *spec.count; j <= -1; ++j) total -= std::min<Exp>(0, a + j * m);
  }
  return invert ? -total : total;
}

// Adds the factors of the spec to an accumulator. Infinite products only
// take factors whose exponent is at most `window`; the caller sizes it as
// target minus the final leading exponent. Returns false when the product
// is exactly zero.
inline bool accumulate_pochhammer(FactorProduct& acc, const PochhammerSpec& spec, bool invert, Exp window) {
  if (spec.modulus <= 0) fail(ErrorKind::invalid_argument, "pochhammer modulus must be positive");
  const FieldElement& c = spec.arg.coeff;
  const Exp a = spec.arg.exp;
  const Exp m = spec.modulus;
  auto put = [&](Exp e, bool div) -> bool {
    if (div) {
      acc.divide_factor(c, e);
      return true;
    }
    return acc.multiply_factor(c, e);
  };
  if (!spec.count) {
    for (Exp j = 0; a + j * m <= std::max<Exp>(window, 0); ++j)
      if (!put(a + j * m, invert)) return false;
    return true;
  }
  const long n = *spec.count;
  if (n >= 0) {
    for (long j = 0; j < n; ++j)
      if (!put(a + j * m, invert)) return false;
  } else {
    for (long j = n; j <= -1; ++j)
      if (!put(a + j * m, !invert)) return false;
  }
  return true;
}

inline Series pochhammer(const PochhammerSpec& spec, int scale, Exp target) {
  FactorProduct acc(scale);
  try {
    const Exp window = target - pochhammer_lead_exponent(spec, false);
    if (!accumulate_pochhammer(acc, spec, false, window)) return Series::zero(scale);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::pole_in_term)
      fail(ErrorKind::degenerate_specialization,
           "pochhammer symbol has a vanishing factor in its reciprocal product (" + monomial_text(spec.arg, scale) +
               ")");
    throw;
  }
  // Finite products with only multiplied factors are polynomials; expand
  // them completely so the result is exact.
  if (spec.count && *spec.count >= 0 && acc.has_unit_factors()) {
    Exp top = 0;  // highest exponent of the expanded polynomial
    for (long j = 0; j < *spec.count; ++j) top += std::max<Exp>(0, spec.arg.exp + j * spec.modulus);
    if (top - acc.leading_exponent() <= 100000) return Series::from_terms(scale, kExact, acc.expand(top).terms());
  }
  return acc.expand(target);
}

// j(z; q^M) is identically zero exactly when z is an integral power of q^M.
inline bool theta_vanishes(const QMonomial& z, Exp modulus) { return z.is_power_of(modulus); }

enum class ThetaRoute { sum, product };

// j(z; q^M) = sum_n (-1)^n q^{M n(n-1)/2} z^n = (z, q^M/z, q^M; q^M)_inf.
inline Series theta_j(const QMonomial& z, Exp modulus, int scale, Exp target, ThetaRoute route = ThetaRoute::sum) {
  if (modulus <= 0) fail(ErrorKind::invalid_argument, "theta modulus must be positive");
  if (theta_vanishes(z, modulus)) return Series::zero(scale);
  if (route == ThetaRoute::product) {
    FactorProduct acc(scale);
    const QMonomial qm(FieldElement(1), modulus);
    const PochhammerSpec parts[] = {PochhammerSpec::infinite(z, modulus), PochhammerSpec::infinite(qm / z, modulus),
                                    PochhammerSpec::infinite(qm, modulus)};
    Exp lead = 0;
    for (const auto& p : parts) lead += pochhammer_lead_exponent(p, false);
    for (const auto& p : parts) accumulate_pochhammer(acc, p, false, target - lead);
    return acc.expand(target);
  }
  // exponent(n) = M n(n-1)/2 + e n is convex in n; walk outwards from the
  // minimiser until both sides exceed the target.
  const Exp e = z.exp;
  auto expo = [&](Exp n) { return modulus * (n * (n - 1) / 2) + e * n; };
  Exp center = floor_div(modulus - 2 * e, 2 * modulus);
  std::vector<Series::Term> terms;
  auto add = [&](Exp n) {
    FieldElement c = z.coeff.pow(static_cast<long>(n));
    if (n % 2 != 0) c = -c;
    terms.emplace_back(expo(n), std::move(c));
  };
  for (Exp n = center; expo(n) <= target || n <= center + 1; ++n)
    if (expo(n) <= target) add(n);
  for (Exp n = center - 1; expo(n) <= target; --n) add(n);
  return Series::from_terms(scale, target, std::move(terms));
}

// J_m = (q^m; q^m)_inf via the pentagonal number theorem.
inline Series eta_J(Exp m, int scale, Exp target) {
  if (m <= 0) fail(ErrorKind::invalid_argument, "J index must be positive");
  return theta_j(QMonomial(FieldElement(1), m), 3 * m, scale, target);
}

}  // namespace qmock
