#pragma once

// Truncated Laurent series in q over FieldElement.
//
// Exponents are stored as integers k meaning q^(k/s) for a global scale s
// fixed per computation. A series carries its guaranteed order `prec`
// (scaled): every coefficient of q^(k/s) with k <= prec is exact, nothing
// beyond it is stored. kExact marks series known exactly (monomials,
// constants, exact zero).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qmock/error.hpp"
#include "qmock/field.hpp"

namespace qmock {

using Exp = std::int64_t;

inline constexpr Exp kExact = Exp{1} << 40;

inline bool is_exact_prec(Exp p) { return p >= kExact / 2; }

// Saturating add for precision bookkeeping.
inline Exp prec_add(Exp a, Exp b) {
  if (is_exact_prec(a) || is_exact_prec(b)) return kExact;
  return a + b;
}

inline Exp floor_div(Exp a, Exp b) {
  Exp q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Exp ceil_div(Exp a, Exp b) { return -floor_div(-a, b); }

// c * q^(exp/s).
struct QMonomial {
  FieldElement coeff{1};
  Exp exp = 0;

  QMonomial() = default;
  QMonomial(FieldElement c, Exp e) : coeff(std::move(c)), exp(e) {
    if (coeff.is_zero()) fail(ErrorKind::invalid_argument, "monomial coefficient must be nonzero");
  }

  QMonomial inverse() const { return {coeff.inverse(), -exp}; }
  QMonomial pow(long k) const { return {coeff.pow(k), exp * k}; }

  friend QMonomial operator*(const QMonomial& a, const QMonomial& b) { return {a.coeff * b.coeff, a.exp + b.exp}; }
  friend QMonomial operator/(const QMonomial& a, const QMonomial& b) { return a * b.inverse(); }
  friend bool operator==(const QMonomial& a, const QMonomial& b) { return a.exp == b.exp && a.coeff == b.coeff; }

  // True when this monomial equals q^(k*modulus) for some integer k.
  bool is_power_of(Exp modulus) const { return coeff.is_one() && exp % modulus == 0; }
};

inline std::string exponent_text(Exp k, int scale) {
  Rational r(static_cast<long>(k), scale);
  r.canonicalize();
  return r.get_str();
}

inline std::string monomial_text(const QMonomial& m, int scale) {
  std::string c = m.coeff.to_string();
  if (m.exp == 0) return c;
  std::string qpart = "q";
  if (m.exp != scale) {
    Rational r(static_cast<long>(m.exp), scale);
    r.canonicalize();
    if (r.get_den() == 1 && r > 0)
      qpart += "^" + r.get_str();
    else
      qpart += "^(" + r.get_str() + ")";
  }
  if (m.coeff.is_one()) return qpart;
  if (m.coeff.is_minus_one()) return "-" + qpart;
  if (m.coeff.conductor() != 1) c = "(" + c + ")";
  return c + "*" + qpart;
}

class Series {
 public:
  using Term = std::pair<Exp, FieldElement>;

  explicit Series(int scale = 1) : scale_(scale) { check_scale(scale); }

  static Series zero(int scale, Exp prec = kExact) {
    Series s(scale);
    s.prec_ = normalise_prec(prec);
    return s;
  }

  static Series constant(int scale, const FieldElement& c) {
    Series s(scale);
    if (!c.is_zero()) s.terms_.emplace_back(0, c);
    return s;
  }

  static Series monomial(int scale, const QMonomial& m) {
    Series s(scale);
    s.terms_.emplace_back(m.exp, m.coeff);
    return s;
  }

  // Builds a series from arbitrary terms: merges duplicates, drops zeros and
  // anything above prec.
  static Series from_terms(int scale, Exp prec, std::vector<Term> terms) {
    Series s(scale);
    s.prec_ = normalise_prec(prec);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
      if (t.first > s.prec_) break;
      if (!s.terms_.empty() && s.terms_.back().first == t.first)
        s.terms_.back().second += t.second;
      else
        s.terms_.push_back(std::move(t));
    }
    s.drop_zeros();
    return s;
  }

  // Dense coefficients for exponents first, first+1, ...
  static Series from_dense(int scale, Exp prec, Exp first, const std::vector<FieldElement>& coeffs) {
    Series s(scale);
    s.prec_ = normalise_prec(prec);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Exp k = first + static_cast<Exp>(i);
      if (k > s.prec_) break;
      if (!coeffs[i].is_zero()) s.terms_.emplace_back(k, coeffs[i]);
    }
    return s;
  }

  int scale() const noexcept { return scale_; }
  Exp prec() const noexcept { return prec_; }
  bool is_exact() const noexcept { return is_exact_prec(prec_); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  // Zero inside the truncation window.
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_exact_zero() const noexcept { return terms_.empty() && is_exact(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  std::optional<Exp> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first;
  }

  // Valuation, or the first exponent beyond the window for a zero series.
  Exp valuation_bound() const {
    if (terms_.empty()) return is_exact() ? kExact : prec_ + 1;
    return terms_.front().first;
  }

  FieldElement coeff(Exp k) const {
    if (k > prec_) fail(ErrorKind::order_exceeds_guarantee, "coefficient requested beyond guaranteed order");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, Exp e) { return t.first < e; });
    if (it != terms_.end() && it->first == k) return it->second;
    return FieldElement(0);
  }

  int conductor() const {
    int c = 1;
    for (const auto& [e, v] : terms_)
      if (v.conductor() != 1) c = v.conductor();
    return c;
  }

  Series truncated(Exp p) const {
    if (p >= prec_) return *this;
    Series s(scale_);
    s.prec_ = p;
    for (const auto& t : terms_) {
      if (t.first > p) break;
      s.terms_.push_back(t);
    }
    return s;
  }

  Series operator-() const {
    Series s = *this;
    for (auto& t : s.terms_) t.second = -t.second;
    return s;
  }

  Series& operator+=(const Series& o) { return *this = add(*this, o, false); }
  Series& operator-=(const Series& o) { return *this = add(*this, o, true); }
  Series& operator*=(const Series& o) { return *this = multiply(*this, o); }

  friend Series operator+(const Series& a, const Series& b) { return add(a, b, false); }
  friend Series operator-(const Series& a, const Series& b) { return add(a, b, true); }
  friend Series operator*(const Series& a, const Series& b) { return multiply(a, b); }

  Series scaled_by(const FieldElement& c) const {
    if (c.is_zero()) return zero(scale_, prec_);
    Series s = *this;
    for (auto& t : s.terms_) t.second *= c;
    return s;
  }

  Series times_monomial(const QMonomial& m) const {
    Series s = *this;
    for (auto& t : s.terms_) {
      t.first += m.exp;
      t.second *= m.coeff;
    }
    s.prec_ = prec_add(prec_, m.exp);
    return s;
  }

  // Lift to a finer scale (s -> s*factor); exponents are unchanged as rationals.
  Series rescaled(int new_scale) const {
    if (new_scale % scale_ != 0) fail(ErrorKind::scale_mismatch, "target scale must be a multiple of the current scale");
    const Exp f = new_scale / scale_;
    Series s(new_scale);
    s.prec_ = is_exact() ? kExact : prec_ * f + (f - 1);
    for (const auto& [e, c] : terms_) s.terms_.emplace_back(e * f, c);
    return s;
  }

  // q -> q^k. Exponents strictly between multiples of k are known zeros, so
  // the guaranteed order becomes k*(prec+1) - 1.
  Series dilated(long k) const {
    if (k <= 0) fail(ErrorKind::invalid_argument, "dilation factor must be positive");
    Series s(scale_);
    s.prec_ = is_exact() ? kExact : k * (prec_ + 1) - 1;
    for (const auto& [e, c] : terms_) s.terms_.emplace_back(e * k, c);
    return s;
  }

  // q -> -q. Needs integral q-exponents.
  Series sign_flipped() const {
    Series s = *this;
    for (auto& [e, c] : s.terms_) {
      if (e % scale_ != 0) fail(ErrorKind::invalid_argument, "q -> -q needs integral exponents");
      if ((e / scale_) % 2 != 0) c = -c;
    }
    return s;
  }

  // Canonical text, increasing exponents: "1 + q - 2q^2 + (1/2)q^(5/2)".
  std::string to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      FieldElement coef = c;
      bool negative = c.is_rational() && sgn(c.c0()) < 0;
      if (negative) coef = -c;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      std::string q;
      if (e != 0) {
        q = "q";
        if (e != scale_) {
          Rational r(static_cast<long>(e), scale_);
          r.canonicalize();
          if (r.get_den() == 1 && r > 0)
            q += "^" + r.get_str();
          else
            q += "^(" + r.get_str() + ")";
        }
      }
      std::string cs;
      if (!coef.is_one() || e == 0) {
        cs = coef.to_string();
        bool plain_int = coef.is_rational() && coef.c0().get_den() == 1;
        if (!plain_int && e != 0) cs = "(" + cs + ")";
      }
      os << cs << q;
    }
    return os.str();
  }

 private:
  static void check_scale(int s) {
    if (s <= 0) fail(ErrorKind::invalid_argument, "scale must be positive");
  }

  static Exp normalise_prec(Exp p) { return is_exact_prec(p) ? kExact : p; }

  void drop_zeros() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_zero(); }),
                 terms_.end());
  }

  static void same_scale(const Series& a, const Series& b) {
    if (a.scale_ != b.scale_)
      fail(ErrorKind::scale_mismatch, "series scales differ (" + std::to_string(a.scale_) + " vs " +
                                          std::to_string(b.scale_) + "); rescale explicitly");
  }

  static Series add(const Series& a, const Series& b, bool subtract) {
    same_scale(a, b);
    Series s(a.scale_);
    s.prec_ = std::min(a.prec_, b.prec_);
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      Exp ea = ia != a.terms_.end() ? ia->first : kExact;
      Exp eb = ib != b.terms_.end() ? ib->first : kExact;
      Exp e = std::min(ea, eb);
      if (e > s.prec_) break;
      FieldElement c(0);
      if (ea == e) c += (ia++)->second;
      if (eb == e) {
        if (subtract)
          c -= ib->second;
        else
          c += ib->second;
        ++ib;
      }
      if (!c.is_zero()) s.terms_.emplace_back(e, std::move(c));
    }
    return s;
  }

  static Series multiply(const Series& a, const Series& b) {
    same_scale(a, b);
    const Exp va = a.valuation_bound();
    const Exp vb = b.valuation_bound();
    Exp p = std::min(prec_add(a.prec_, vb), prec_add(b.prec_, va));
    if (is_exact_prec(p)) p = kExact;
    if (a.terms_.empty() || b.terms_.empty()) return zero(a.scale_, p);
    const Exp lo = va + vb;
    Exp hi = a.terms_.back().first + b.terms_.back().first;
    if (!is_exact_prec(p)) hi = std::min(hi, p);
    if (hi < lo) return zero(a.scale_, p);
    std::vector<FieldElement> acc(static_cast<std::size_t>(hi - lo + 1));
    std::vector<bool> touched(acc.size(), false);
    for (const auto& [ea, ca] : a.terms_) {
      if (ea + vb > hi) break;
      for (const auto& [eb, cb] : b.terms_) {
        Exp e = ea + eb;
        if (e > hi) break;
        auto idx = static_cast<std::size_t>(e - lo);
        if (cb.is_one())
          acc[idx] += ca;
        else if (cb.is_minus_one())
          acc[idx] -= ca;
        else
          acc[idx] += ca * cb;
        touched[idx] = true;
      }
    }
    Series s(a.scale_);
    s.prec_ = p;
    for (std::size_t i = 0; i < acc.size(); ++i)
      if (touched[i] && !acc[i].is_zero()) s.terms_.emplace_back(lo + static_cast<Exp>(i), std::move(acc[i]));
    return s;
  }

  int scale_ = 1;
  Exp prec_ = kExact;
  std::vector<Term> terms_;
};

inline Series scalar_series(int scale, long v) { return Series::constant(scale, FieldElement(v)); }

// Inverse of a series whose leading coefficient is known. The result is
// accurate to min(prec - 2v, cap); monomials invert exactly.
inline Series invert(const Series& a, Exp cap) {
  if (a.is_zero()) {
    fail(ErrorKind::zero_inversion,
         a.is_exact() ? "inverting an identically zero series" : "inverting a series that vanishes to its order");
  }
  const Exp v = *a.valuation();
  if (a.is_monomial() && a.is_exact()) {
    const auto& [e, c] = a.terms().front();
    return Series::monomial(a.scale(), QMonomial(c.inverse(), -e));
  }
  Exp p = std::min(prec_add(a.prec(), -2 * v), cap);
  if (is_exact_prec(p)) fail(ErrorKind::invalid_argument, "inverse of a non-monomial needs a finite cap");
  const Exp len = p + v;  // relative indices 0..len
  if (len < 0) return Series::zero(a.scale(), p);
  std::vector<std::pair<Exp, FieldElement>> unit;  // relative exponent, coefficient
  for (const auto& [e, c] : a.terms()) {
    if (e - v > len) break;
    unit.emplace_back(e - v, c);
  }
  const FieldElement inv0 = unit.front().second.inverse();
  std::vector<FieldElement> b(static_cast<std::size_t>(len + 1));
  b[0] = inv0;
  for (Exp k = 1; k <= len; ++k) {
    FieldElement acc(0);
    for (std::size_t i = 1; i < unit.size(); ++i) {
      Exp r = unit[i].first;
      if (r > k) break;
      const FieldElement& bk = b[static_cast<std::size_t>(k - r)];
      if (!bk.is_zero()) acc += unit[i].second * bk;
    }
    if (!acc.is_zero()) b[static_cast<std::size_t>(k)] = -(acc * inv0);
  }
  return Series::from_dense(a.scale(), p, -v, b);
}

// a / b accurate to at most cap.
inline Series divide(const Series& a, const Series& b, Exp cap) {
  const Exp va = a.valuation_bound();
  Exp inv_cap = is_exact_prec(cap) ? cap : cap - std::min<Exp>(va, kExact / 4);
  Series r = a * invert(b, inv_cap);
  return r.truncated(cap);
}

inline Series power(const Series& a, long k, Exp cap = kExact) {
  if (k < 0) return power(invert(a, cap), -k, cap);
  Series result = Series::constant(a.scale(), FieldElement(1));
  Series base = a;
  while (k > 0) {
    if (k & 1) result = (result * base).truncated(cap);
    k >>= 1;
    if (k > 0) base = (base * base).truncated(cap);
  }
  return result;
}

struct OrderComparison {
  bool equal = true;
  Exp first_mismatch = 0;  // scaled exponent
  FieldElement lhs{0};
  FieldElement rhs{0};
};

// Coefficient-wise comparison of every q^(k/s) with k <= order_scaled.
inline OrderComparison equal_to_order_scaled(const Series& a, const Series& b, Exp order_scaled) {
  if (a.scale() != b.scale()) fail(ErrorKind::scale_mismatch, "cannot compare series of different scales");
  if (order_scaled > a.prec() || order_scaled > b.prec())
    fail(ErrorKind::order_exceeds_guarantee, "requested order " + exponent_text(order_scaled, a.scale()) +
                                                 " exceeds guaranteed order " +
                                                 exponent_text(std::min(a.prec(), b.prec()), a.scale()));
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    Exp ea = ia != a.terms().end() ? ia->first : kExact;
    Exp eb = ib != b.terms().end() ? ib->first : kExact;
    Exp e = std::min(ea, eb);
    if (e > order_scaled) return {};
    FieldElement ca = ea == e ? ia->second : FieldElement(0);
    FieldElement cb = eb == e ? ib->second : FieldElement(0);
    if (ca != cb) return {false, e, ca, cb};
    if (ea == e) ++ia;
    if (eb == e) ++ib;
  }
  return {};
}

// Order given in whole powers of q.
inline OrderComparison equal_to_order(const Series& a, const Series& b, long order) {
  return equal_to_order_scaled(a, b, static_cast<Exp>(order) * a.scale());
}

}  // namespace qmock
