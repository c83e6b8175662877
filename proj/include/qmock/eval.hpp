#pragma once

// Exact evaluation of expressions to truncated Laurent series.
//
// Every evaluation request carries a scaled target T and returns a series
// accurate to at least T. Products and quotients re-request their operands
// at whatever order the operand valuations demand, so callers never reason
// about precision loss.

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmock/catalog.hpp"
#include "qmock/expr.hpp"
#include "qmock/hypergeom.hpp"
#include "qmock/products.hpp"
#include "qmock/series.hpp"

namespace qmock {

using Env = std::map<std::string, QMonomial>;

// Polynomial of degree <= 2 in one index variable.
struct IndexPoly {
  Rational c[3] = {Rational(0), Rational(0), Rational(0)};
  int degree() const {
    for (int d = 2; d > 0; --d)
      if (sgn(c[d]) != 0) return d;
    return 0;
  }
};

namespace detail {

inline bool depends_on(const NodePtr& n, const std::string& var) {
  if (var.empty()) return false;
  if (n->kind == NodeKind::var) return n->name == var;
  if (n->kind == NodeKind::sum && n->name == var) return false;
  for (const auto& a : n->args)
    if (depends_on(a, var)) return true;
  return false;
}

inline std::optional<IndexPoly> index_poly(const NodePtr& n, const std::string& index) {
  IndexPoly p;
  switch (n->kind) {
    case NodeKind::number: p.c[0] = Rational(n->number); return p;
    case NodeKind::var:
      if (index.empty() || n->name != index) return std::nullopt;
      p.c[1] = 1;
      return p;
    case NodeKind::neg: {
      auto a = index_poly(n->args[0], index);
      if (!a) return std::nullopt;
      for (auto& c : a->c) c = -c;
      return a;
    }
    case NodeKind::add:
    case NodeKind::sub: {
      auto a = index_poly(n->args[0], index), b = index_poly(n->args[1], index);
      if (!a || !b) return std::nullopt;
      for (int d = 0; d < 3; ++d) p.c[d] = n->kind == NodeKind::add ? Rational(a->c[d] + b->c[d]) : Rational(a->c[d] - b->c[d]);
      return p;
    }
    case NodeKind::mul: {
      auto a = index_poly(n->args[0], index), b = index_poly(n->args[1], index);
      if (!a || !b || a->degree() + b->degree() > 2) return std::nullopt;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; i + j < 3; ++j) p.c[i + j] += a->c[i] * b->c[j];
      return p;
    }
    case NodeKind::div: {
      auto a = index_poly(n->args[0], index), b = index_poly(n->args[1], index);
      if (!a || !b || b->degree() != 0 || sgn(b->c[0]) == 0) return std::nullopt;
      for (int d = 0; d < 3; ++d) p.c[d] = a->c[d] / b->c[0];
      return p;
    }
    case NodeKind::pow: {
      auto a = index_poly(n->args[0], index), e = index_poly(n->args[1], "");
      if (!a || !e || e->c[0].get_den() != 1 || e->c[0] < 0 || e->c[0] > 2) return std::nullopt;
      long k = e->c[0].get_num().get_si();
      if (a->degree() * k > 2) return std::nullopt;
      p.c[0] = 1;
      for (long i = 0; i < k; ++i) {
        IndexPoly r;
        for (int x = 0; x < 3; ++x)
          for (int y = 0; x + y < 3; ++y) r.c[x + y] += p.c[x] * a->c[y];
        p = r;
      }
      return p;
    }
    default: return std::nullopt;
  }
}

inline std::optional<Rational> constant_value(const NodePtr& n) {
  auto p = index_poly(n, "");
  if (!p) return std::nullopt;
  return p->c[0];
}

inline long lcm_den(long acc, const Rational& r) { return std::lcm(acc, r.get_den().get_si()); }

inline long scale_of(const NodePtr& n, const std::string& index) {
  long s = 1;
  if (n->kind == NodeKind::pow) {
    if (auto p = index_poly(n->args[1], index)) {
      // s * (a n^2 + b n + c) is integral for all n iff s*2a, s*(a+b), s*c are.
      s = lcm_den(s, 2 * p->c[2]);
      s = lcm_den(s, p->c[2] + p->c[1]);
      s = lcm_den(s, p->c[0]);
    }
  }
  const std::string& inner = n->kind == NodeKind::sum ? n->name : index;
  for (const auto& a : n->args) s = std::lcm(s, scale_of(a, inner));
  return s;
}

inline Exp to_scaled(const Rational& r, long factor, const char* what) {
  Rational v = r * factor;
  v.canonicalize();
  if (v.get_den() != 1)
    fail(ErrorKind::scale_mismatch, std::string(what) + " is not a multiple of the exponent grid 1/" +
                                        std::to_string(factor));
  return v.get_num().get_si();
}

// Multiplies two lazily evaluated factors to the requested order.
inline Series mul_refine(const std::function<Series(Exp)>& fa, const std::function<Series(Exp)>& fb, Exp T) {
  Series A = fa(T);
  if (A.is_exact_zero()) return A;
  Series B = fb(T);
  if (B.is_exact_zero()) return B;
  for (int it = 0; it < 8; ++it) {
    const Exp need_a = T - B.valuation_bound();
    const Exp need_b = T - A.valuation_bound();
    bool settled = true;
    if (A.prec() < need_a) {
      A = fa(need_a);
      settled = false;
    }
    if (B.prec() < need_b) {
      B = fb(need_b);
      settled = false;
    }
    if (settled) break;
  }
  Series r = A * B;
  if (r.is_exact()) return r;
  return r.truncated(T);
}

// Divides lazily evaluated numerator by denominator to the requested order.
inline Series div_refine(const std::function<Series(Exp)>& fa, const std::function<Series(Exp)>& fb, Exp T,
                         const std::string& denominator_text, int scale) {
  Series B = fb(T);
  for (int tries = 0; B.is_zero(); ++tries) {
    if (B.is_exact())
      fail(ErrorKind::degenerate_specialization, "denominator " + denominator_text + " is identically zero");
    if (tries >= 8)
      fail(ErrorKind::degenerate_specialization, "denominator " + denominator_text + " vanishes through order " +
                                                     exponent_text(B.prec(), scale));
    B = fb(B.prec() + 8 * scale + (B.prec() - T));
  }
  const Exp vb = *B.valuation();
  Series A = fa(T + vb);
  if (A.is_exact_zero()) return A;
  if (A.is_zero()) return Series::zero(scale, A.prec() - vb);
  const Exp va = *A.valuation();
  const Exp need_b = T - va + 2 * vb;
  if (!B.is_exact() && B.prec() < need_b) B = fb(need_b);
  Series r = A * invert(B, T - va);
  if (r.is_exact()) return r;
  return r.truncated(T);
}

}  // namespace detail

// Smallest exponent grid 1/s on which every q-power in the expression lives.
inline int required_scale(const NodePtr& n) { return static_cast<int>(detail::scale_of(n, "")); }

// Appell-Lerch sum m(x, q^M, z) = (-z / j(z; q^M)) sum_r (-1)^r q^{M r(r+1)/2} z^r / (1 - x z q^{M r}).
inline SeriesFamily appell_lerch_family(const QMonomial& x, const QMonomial& z, Exp modulus, int scale) {
  SeriesFamily fam;
  fam.scale = scale;
  fam.bilateral = true;
  fam.alpha = Rational(static_cast<long>(modulus), 2);
  fam.beta = Rational(static_cast<long>(modulus), 2);
  fam.u = QMonomial(-z.coeff, z.exp);
  PochAtom atom;
  atom.arg = x * z;
  atom.slope = modulus;
  atom.modulus = modulus;
  atom.count_offset = 1;
  atom.numerator = false;
  fam.atoms.push_back(atom);
  fam.label = "Appell-Lerch sum";
  return fam;
}

inline Series appell_lerch_m(const QMonomial& x, const QMonomial& z, Exp modulus, int scale, Exp target) {
  if (z.is_power_of(modulus))
    fail(ErrorKind::degenerate_specialization, "Appell-Lerch sum needs z off the base powers (z = " +
                                                   monomial_text(z, scale) + ")");
  if ((x * z).is_power_of(modulus))
    fail(ErrorKind::degenerate_specialization, "Appell-Lerch sum needs x*z off the base powers (x*z = " +
                                                   monomial_text(x * z, scale) + ")");
  const SeriesFamily fam = appell_lerch_family(x, z, modulus, scale);
  const QMonomial minus_z(-z.coeff, z.exp);
  auto numer = [&](Exp t) { return sum_family(fam, t - z.exp).times_monomial(minus_z); };
  auto denom = [&](Exp t) { return theta_j(z, modulus, scale, t); };
  return detail::div_refine(numer, denom, target, "j(z; q^M)", scale);
}

class Evaluator {
 public:
  // Sums a family to a scaled target; replaceable to route sums through an oracle.
  using Summer = std::function<Series(const SeriesFamily&, Exp)>;

  explicit Evaluator(int scale, Env env = {}, Summer summer = {})
      : scale_(scale), env_(std::move(env)), summer_(std::move(summer)) {
    if (scale <= 0) fail(ErrorKind::invalid_argument, "scale must be positive");
    if (!summer_) summer_ = [](const SeriesFamily& f, Exp t) { return sum_family(f, t); };
  }

  int scale() const noexcept { return scale_; }
  const Env& env() const noexcept { return env_; }

  // Accurate to at least the scaled target.
  Series evaluate(const NodePtr& e, Exp target) { return eval(e, target, Frame{1, &env_}); }

  // Exactly truncated at q^order (whole powers of q).
  Series evaluate_to_order(const NodePtr& e, long order) {
    const Exp T = static_cast<Exp>(order) * scale_;
    Series s = evaluate(e, T);
    return s.truncated(T);
  }

  QMonomial monomial(const NodePtr& e) { return require_monomial(e, Frame{1, &env_}); }

 private:
  struct Frame {
    long dil = 1;
    const Env* env = nullptr;
  };

  using Lazy = std::function<Series(Exp)>;

  // ------------------------------------------------------------ monomials

  std::optional<QMonomial> try_monomial(const NodePtr& n, const Frame& f) {
    switch (n->kind) {
      case NodeKind::number:
        if (n->number == 0) return std::nullopt;
        return QMonomial(FieldElement(Rational(n->number)), 0);
      case NodeKind::imag_unit: return QMonomial(FieldElement::generator(4), 0);
      case NodeKind::cube_root: return QMonomial(FieldElement::generator(3), 0);
      case NodeKind::q: return QMonomial(FieldElement(1), static_cast<Exp>(scale_) * f.dil);
      case NodeKind::var: return lookup(n->name, f);
      case NodeKind::neg: {
        auto a = try_monomial(n->args[0], f);
        if (!a) return std::nullopt;
        return QMonomial(-a->coeff, a->exp);
      }
      case NodeKind::mul:
      case NodeKind::div: {
        auto a = try_monomial(n->args[0], f);
        if (!a) return std::nullopt;
        auto b = try_monomial(n->args[1], f);
        if (!b) return std::nullopt;
        return n->kind == NodeKind::mul ? *a * *b : *a / *b;
      }
      case NodeKind::pow: {
        auto e = detail::constant_value(n->args[1]);
        if (!e) return std::nullopt;
        auto a = try_monomial(n->args[0], f);
        if (!a) return std::nullopt;
        if (e->get_den() == 1) return a->pow(e->get_num().get_si());
        if (!a->coeff.is_one())
          fail(ErrorKind::invalid_argument, "fractional power of a non-unit coefficient in " + format_expression(n));
        return QMonomial(FieldElement(1), detail::to_scaled(Rational(static_cast<long>(a->exp)) * *e, 1,
                                                            "fractional q-power"));
      }
      default: return std::nullopt;
    }
  }

  QMonomial require_monomial(const NodePtr& n, const Frame& f) {
    auto m = try_monomial(n, f);
    if (!m) fail(ErrorKind::invalid_argument, "expected a monomial c*q^e, got " + format_expression(n));
    return *m;
  }

  QMonomial lookup(const std::string& name, const Frame& f) {
    if (f.env) {
      auto it = f.env->find(name);
      if (it != f.env->end()) return it->second;
    }
    fail(ErrorKind::unbound_variable, "variable '" + name + "' is not bound");
  }

  Rational require_constant(const NodePtr& n, const char* what) {
    auto v = detail::constant_value(n);
    if (!v) fail(ErrorKind::invalid_argument, std::string(what) + " must be a rational constant, got " +
                                                  format_expression(n));
    return *v;
  }

  Exp require_modulus(const NodePtr& n, const Frame& f, const char* what) {
    Rational m = require_constant(n, what);
    if (sgn(m) <= 0) fail(ErrorKind::invalid_argument, std::string(what) + " must be positive");
    return detail::to_scaled(m, static_cast<long>(scale_) * f.dil, what);
  }

  // --------------------------------------------------------------- series

  Series eval(const NodePtr& n, Exp T, const Frame& f) {
    if (n->kind == NodeKind::number && n->number == 0) return Series::zero(scale_);
    if (auto m = try_monomial(n, f)) return Series::monomial(scale_, *m);
    switch (n->kind) {
      case NodeKind::add: return eval(n->args[0], T, f) + eval(n->args[1], T, f);
      case NodeKind::sub: return eval(n->args[0], T, f) - eval(n->args[1], T, f);
      case NodeKind::neg: return -eval(n->args[0], T, f);
      case NodeKind::mul:
        return detail::mul_refine(lazy(n->args[0], f), lazy(n->args[1], f), T);
      case NodeKind::div:
        return detail::div_refine(lazy(n->args[0], f), lazy(n->args[1], f), T, format_expression(n->args[1]),
                                  scale_);
      case NodeKind::pow: return eval_pow(n, T, f);
      case NodeKind::call: return eval_call(n, T, f);
      case NodeKind::sum: return eval_sum(n, T, f);
      case NodeKind::var: return Series::monomial(scale_, lookup(n->name, f));
      default: fail(ErrorKind::invalid_argument, "cannot evaluate " + format_expression(n));
    }
  }

  Lazy lazy(const NodePtr& n, const Frame& f) {
    return [this, n, f](Exp t) { return eval(n, t, f); };
  }

  Series eval_pow(const NodePtr& n, Exp T, const Frame& f) {
    auto e = detail::constant_value(n->args[1]);
    if (!e || e->get_den() != 1)
      fail(ErrorKind::invalid_argument, "exponent of a non-monomial must be an integer constant: " +
                                            format_expression(n));
    const long k = e->get_num().get_si();
    if (k == 0) return Series::constant(scale_, FieldElement(1));
    const NodePtr base = n->args[0];
    auto positive = [this, base, f, k](Exp t) -> Series {
      const long kk = std::abs(k);
      Series A = eval(base, t, f);
      if (A.is_exact_zero()) return A;
      const Exp va = A.valuation_bound();
      const Exp need = va < 0 ? t - (kk - 1) * va : t;
      if (A.prec() < need) A = eval(base, need, f);
      return power(A, kk);
    };
    if (k > 0) return positive(T);
    auto one = [this](Exp) { return Series::constant(scale_, FieldElement(1)); };
    return detail::div_refine(one, positive, T, format_expression(n->args[0]) + "^" + std::to_string(-k), scale_);
  }

  // --------------------------------------------------------------- calls

  Series cached(const std::string& key, Exp T, const Lazy& compute) {
    auto it = cache_.find(key);
    if (it != cache_.end() && it->second.prec() >= T) return it->second;
    Series s = compute(T);
    cache_[key] = s;
    return s;
  }

  static void expect_args(const NodePtr& n, std::size_t count) {
    if (n->args.size() != count)
      fail(ErrorKind::invalid_argument, n->name + " expects " + std::to_string(count) + " argument(s), got " +
                                            std::to_string(n->args.size()));
  }

  Series eval_call(const NodePtr& n, Exp T, const Frame& f) {
    const std::string& name = n->name;
    if (name == "J") {
      expect_args(n, 1);
      const Exp m = require_modulus(n->args[0], f, "J index");
      return cached("J|" + std::to_string(m), T, [this, m](Exp t) { return eta_J(m, scale_, t); });
    }
    if (name == "j") {
      expect_args(n, 2);
      const QMonomial z = require_monomial(n->args[0], f);
      const Exp m = require_modulus(n->args[1], f, "theta base");
      if (theta_vanishes(z, m))
        fail(ErrorKind::degenerate_specialization,
             format_expression(n) + " is identically zero: " + monomial_text(z, scale_) + " is a power of the base");
      return cached("j|" + monomial_text(z, scale_) + "|" + std::to_string(m), T,
                    [this, z, m](Exp t) { return theta_j(z, m, scale_, t); });
    }
    if (name == "poch") {
      expect_args(n, 3);
      const QMonomial a = require_monomial(n->args[0], f);
      const Exp m = require_modulus(n->args[1], f, "pochhammer base");
      PochhammerSpec spec = PochhammerSpec::infinite(a, m);
      if (!(n->args[2]->kind == NodeKind::var && n->args[2]->name == "inf")) {
        Rational c = require_constant(n->args[2], "pochhammer count");
        if (c.get_den() != 1) fail(ErrorKind::invalid_argument, "pochhammer count must be an integer");
        spec.count = c.get_num().get_si();
      }
      const std::string key = "poch|" + monomial_text(a, scale_) + "|" + std::to_string(m) + "|" +
                              (spec.count ? std::to_string(*spec.count) : "inf");
      return cached(key, T, [this, spec](Exp t) { return pochhammer(spec, scale_, t); });
    }
    if (name == "alm") {
      expect_args(n, 3);
      const QMonomial x = require_monomial(n->args[0], f);
      const Exp m = require_modulus(n->args[1], f, "Appell-Lerch base");
      const QMonomial z = require_monomial(n->args[2], f);
      const std::string key = "alm|" + monomial_text(x, scale_) + "|" + std::to_string(m) + "|" +
                              monomial_text(z, scale_);
      return cached(key, T, [this, x, z, m](Exp t) { return appell_lerch_m(x, z, m, scale_, t); });
    }
    auto [base_name, bilateral] = split_variant(name);
    const CatalogEntry* entry = find_catalog_entry(base_name);
    if (!entry) fail(ErrorKind::unknown_name, "unknown function '" + name + "'");
    return eval_catalog(*entry, bilateral, n, T, f);
  }

  // Base argument: positive integer k (q -> q^k) or +-q^k.
  std::pair<long, bool> resolve_base(const NodePtr& arg, const Frame& f) {
    if (auto c = detail::constant_value(arg)) {
      if (c->get_den() != 1 || sgn(*c) <= 0)
        fail(ErrorKind::invalid_argument, "base dilation must be a positive integer");
      return {c->get_num().get_si() * f.dil, false};
    }
    QMonomial m = require_monomial(arg, f);
    if (!(m.coeff.is_one() || m.coeff.is_minus_one()) || m.exp <= 0 || m.exp % scale_ != 0)
      fail(ErrorKind::invalid_argument, "base must be q^k or -q^k with k a positive integer, got " +
                                            format_expression(arg));
    const long k = static_cast<long>(m.exp / scale_);
    const bool flip = m.coeff.is_minus_one();
    if (flip && k % 2 == 0) fail(ErrorKind::invalid_argument, "base -q^k needs odd k");
    return {k, flip};
  }

  Series eval_catalog(const CatalogEntry& entry, bool bilateral, const NodePtr& n, Exp T, const Frame& f) {
    const bool two = entry.arity == Arity::two_param;
    expect_args(n, two ? 2 : 1);
    const std::string& text = bilateral ? entry.bilateral : entry.unilateral;
    if (text.empty())
      fail(ErrorKind::invalid_argument, entry.name + " has no bilateral completion" +
                                            (entry.note.empty() ? "" : " (" + entry.note + ")"));
    auto [dil, flip] = resolve_base(n->args[two ? 1 : 0], f);
    if (flip && two) fail(ErrorKind::invalid_argument, "sign-flipped base is only supported for one-argument functions");
    Env inner;
    std::string key = n->name + "|" + std::to_string(dil) + "|" + (flip ? "-" : "+");
    if (two) {
      QMonomial x = require_monomial(n->args[0], f);
      key += "|" + monomial_text(x, scale_);
      inner.emplace("x", x);
    }
    auto it = bodies_.find(text);
    if (it == bodies_.end()) it = bodies_.emplace(text, parse_expression(text)).first;
    const NodePtr body = it->second;
    auto compute = [this, body, inner, dil, flip](Exp t) {
      Frame g{dil, &inner};
      Series s = eval(body, t, g);
      return flip ? s.sign_flipped() : s;
    };
    return cached(key, T, compute);
  }

  // ----------------------------------------------------------------- sums

  struct Flat {
    SeriesFamily fam;
    std::vector<std::pair<NodePtr, long>> prefactors;
  };

  void flatten(const NodePtr& n, long power, const std::string& idx, const Frame& f, Flat& out) {
    if (power == 0) return;
    if (!detail::depends_on(n, idx)) {
      if (auto m = try_monomial(n, f)) {
        QMonomial p = m->pow(power);
        out.fam.scalar *= p.coeff;
        out.fam.gamma += Rational(static_cast<long>(p.exp));
      } else {
        out.prefactors.emplace_back(n, power);
      }
      return;
    }
    switch (n->kind) {
      case NodeKind::mul:
        flatten(n->args[0], power, idx, f, out);
        flatten(n->args[1], power, idx, f, out);
        return;
      case NodeKind::div:
        flatten(n->args[0], power, idx, f, out);
        flatten(n->args[1], -power, idx, f, out);
        return;
      case NodeKind::neg:
        if (power % 2 != 0) out.fam.scalar = -out.fam.scalar;
        flatten(n->args[0], power, idx, f, out);
        return;
      case NodeKind::pow: {
        const NodePtr& base = n->args[0];
        const NodePtr& ex = n->args[1];
        if (!detail::depends_on(ex, idx)) {
          Rational k = require_constant(ex, "exponent");
          if (k.get_den() != 1) fail(ErrorKind::invalid_argument, "non-integer power in summand");
          flatten(base, power * k.get_num().get_si(), idx, f, out);
          return;
        }
        auto p = detail::index_poly(ex, idx);
        if (!p) fail(ErrorKind::invalid_argument, "exponent must be a polynomial of degree <= 2 in " + idx);
        if (detail::depends_on(base, idx))
          fail(ErrorKind::invalid_argument, "index-dependent base under an index-dependent exponent");
        const long grid = static_cast<long>(scale_) * f.dil;
        if (base->kind == NodeKind::q) {
          out.fam.alpha += p->c[2] * grid * power;
          out.fam.beta += p->c[1] * grid * power;
          out.fam.gamma += p->c[0] * grid * power;
          return;
        }
        if (p->degree() > 1 || p->c[1].get_den() != 1 || p->c[0].get_den() != 1)
          fail(ErrorKind::invalid_argument, "power of a non-q monomial must be linear with integer coefficients");
        QMonomial m = require_monomial(base, f);
        out.fam.u = out.fam.u * m.pow(p->c[1].get_num().get_si() * power);
        QMonomial c = m.pow(p->c[0].get_num().get_si() * power);
        out.fam.scalar *= c.coeff;
        out.fam.gamma += Rational(static_cast<long>(c.exp));
        return;
      }
      case NodeKind::call:
        if (n->name == "poch") {
          out.fam.atoms.push_back(make_atom(n, power, idx, f));
          return;
        }
        break;
      default: break;
    }
    fail(ErrorKind::invalid_argument, "summand factor " + format_expression(n) +
                                          " must be a product of q-powers, monomial powers and pochhammer symbols");
  }

  // c*q^{e0 + slope*n} from an argument linear in the index.
  std::pair<QMonomial, Exp> linear_monomial(const NodePtr& n, const std::string& idx, const Frame& f) {
    if (!detail::depends_on(n, idx)) return {require_monomial(n, f), 0};
    switch (n->kind) {
      case NodeKind::mul:
      case NodeKind::div: {
        auto [a, sa] = linear_monomial(n->args[0], idx, f);
        auto [b, sb] = linear_monomial(n->args[1], idx, f);
        if (n->kind == NodeKind::mul) return {a * b, sa + sb};
        return {a / b, sa - sb};
      }
      case NodeKind::neg: {
        auto [a, sa] = linear_monomial(n->args[0], idx, f);
        return {QMonomial(-a.coeff, a.exp), sa};
      }
      case NodeKind::pow: {
        if (!detail::depends_on(n->args[1], idx)) {
          Rational k = require_constant(n->args[1], "exponent");
          if (k.get_den() != 1) break;
          auto [a, sa] = linear_monomial(n->args[0], idx, f);
          long kk = k.get_num().get_si();
          return {a.pow(kk), sa * kk};
        }
        if (n->args[0]->kind != NodeKind::q) break;
        auto p = detail::index_poly(n->args[1], idx);
        if (!p || p->degree() > 1) break;
        const long grid = static_cast<long>(scale_) * f.dil;
        return {QMonomial(FieldElement(1), detail::to_scaled(p->c[0], grid, "pochhammer argument")),
                detail::to_scaled(p->c[1], grid, "pochhammer argument slope")};
      }
      default: break;
    }
    fail(ErrorKind::invalid_argument, "pochhammer argument must be c*q^(a*n+b): " + format_expression(n));
  }

  PochAtom make_atom(const NodePtr& n, long power, const std::string& idx, const Frame& f) {
    expect_args(n, 3);
    PochAtom atom;
    auto [arg, slope] = linear_monomial(n->args[0], idx, f);
    atom.arg = arg;
    atom.slope = slope;
    atom.modulus = require_modulus(n->args[1], f, "pochhammer base");
    const NodePtr& cnt = n->args[2];
    if (cnt->kind == NodeKind::var && cnt->name == "inf") {
      atom.infinite = true;
    } else {
      auto p = detail::index_poly(cnt, idx);
      if (!p || p->degree() > 1 || p->c[0].get_den() != 1 || p->c[1].get_den() != 1)
        fail(ErrorKind::invalid_argument, "pochhammer count must be p*n + r with integers p, r: " +
                                              format_expression(cnt));
      atom.count_slope = p->c[1].get_num().get_si();
      atom.count_offset = p->c[0].get_num().get_si();
    }
    atom.numerator = power > 0;
    atom.multiplicity = static_cast<int>(std::abs(power));
    return atom;
  }

  Series eval_sum(const NodePtr& n, Exp T, const Frame& f) {
    Flat flat;
    flat.fam.scale = scale_;
    flat.fam.bilateral = !n->lower;
    flat.fam.lower = n->lower.value_or(0);
    flat.fam.label = format_expression(n);
    flatten(n->args[0], 1, n->name, f, flat);
    auto sum = [this, fam = flat.fam](Exp t) { return summer_(fam, t); };
    if (flat.prefactors.empty()) return sum(T);
    NodePtr pre;
    for (const auto& [node, p] : flat.prefactors) {
      NodePtr factor = p == 1 ? node : ast::pow(node, p > 0 ? ast::number(p) : ast::neg(ast::number(-p)));
      pre = pre ? ast::mul(pre, factor) : factor;
    }
    return detail::mul_refine(lazy(pre, f), sum, T);
  }

  int scale_;
  Env env_;
  Summer summer_;
  std::map<std::string, Series> cache_;
  std::map<std::string, NodePtr> bodies_;
};

}  // namespace qmock
