#pragma once

// Unilateral and bilateral q-hypergeometric summation with certified
// truncation.
//
// A family describes the summand at index n as
//   q^{alpha n^2 + beta n + gamma} * u^n * prod_atoms (arg * q^{slope n}; q^M)_{p n + r}^{+-mult}
// times a constant scalar (exponents scaled). The certificate bounds the exact term valuation from
// below by a quadratic in |n| on each tail; every index outside the summed
// range has valuation above the target, so omitting it changes nothing.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qmock/products.hpp"
#include "qmock/series.hpp"

namespace qmock {

struct PochAtom {
  QMonomial arg;         // argument at n = 0
  Exp slope = 0;         // argument exponent grows by slope per unit of n
  Exp modulus = 1;       // scaled base exponent
  bool infinite = false;
  long count_slope = 0;  // count(n) = count_slope * n + count_offset
  long count_offset = 0;
  bool numerator = true;
  int multiplicity = 1;

  Exp arg_exp(long n) const { return arg.exp + slope * n; }
  long count(long n) const { return count_slope * n + count_offset; }
  PochhammerSpec spec_at(long n) const {
    QMonomial a(arg.coeff, arg_exp(n));
    if (infinite) return PochhammerSpec::infinite(a, modulus);
    return PochhammerSpec::finite(a, modulus, count(n));
  }
};

struct SeriesFamily {
  int scale = 1;
  bool bilateral = false;
  long lower = 0;  // first index of a unilateral sum
  Rational alpha{0}, beta{0}, gamma{0};
  QMonomial u;  // contributes u^n
  FieldElement scalar{1};  // multiplies every term
  std::vector<PochAtom> atoms;
  std::string label;
};

enum class TermKind { regular, zero, pole };

struct TermInfo {
  TermKind kind = TermKind::regular;
  Exp valuation = 0;
  std::string detail;
};

inline Exp quad_exponent(const SeriesFamily& fam, long n) {
  Rational nn(n);
  Rational v = fam.alpha * nn * nn + fam.beta * nn + fam.gamma;
  v.canonicalize();
  if (v.get_den() != 1)
    fail(ErrorKind::invalid_argument, "summand exponent is not a multiple of 1/" + std::to_string(fam.scale) +
                                          " at n=" + std::to_string(n));
  return v.get_num().get_si();
}

// Exact valuation of the summand, or the reason it is zero or undefined.
inline TermInfo inspect_term(const SeriesFamily& fam, long n) {
  TermInfo info;
  Exp v = quad_exponent(fam, n) + n * fam.u.exp;
  bool zero = false;
  for (std::size_t idx = 0; idx < fam.atoms.size(); ++idx) {
    const PochAtom& atom = fam.atoms[idx];
    const PochhammerSpec spec = atom.spec_at(n);
    const int mult = std::abs(atom.multiplicity);
    const bool flip = (atom.multiplicity < 0) != !atom.numerator;
    const bool unit_coeff = spec.arg.coeff.is_one();
    auto visit = [&](Exp e, bool divide) {
      if (e == 0 && unit_coeff) {
        if (divide) {
          if (info.kind != TermKind::pole) {
            info.kind = TermKind::pole;
            info.detail = "factor (1 - " + monomial_text(QMonomial(spec.arg.coeff, e), fam.scale) + ") of atom " +
                          std::to_string(idx) + " vanishes at n=" + std::to_string(n);
          }
        } else {
          zero = true;
        }
      }
      Exp c = std::min<Exp>(0, e) * mult;
      v += divide ? -c : c;
    };
    const Exp a = spec.arg.exp, m = spec.modulus;
    if (!spec.count) {
      for (Exp j = 0; a + j * m <= 0; ++j) visit(a + j * m, flip);
    } else if (*spec.count >= 0) {
      for (long j = 0; j < *spec.count; ++j) visit(a + j * m, flip);
    } else {
      for (long j = *spec.count; j <= -1; ++j) visit(a + j * m, !flip);
    }
  }
  if (info.kind == TermKind::pole) return info;
  if (zero) info.kind = TermKind::zero;
  info.valuation = v;
  return info;
}

// The summand at index n, accurate to target.
inline Series term_at(const SeriesFamily& fam, long n, Exp target) {
  TermInfo info = inspect_term(fam, n);
  if (info.kind == TermKind::pole) fail(ErrorKind::pole_in_term, info.detail);
  if (info.kind == TermKind::zero) return Series::zero(fam.scale);
  FactorProduct acc(fam.scale);
  acc.multiply_monomial(QMonomial(fam.scalar, quad_exponent(fam, n)));
  acc.multiply_monomial(QMonomial(fam.u.coeff.pow(n), fam.u.exp * n));
  const Exp window = target - info.valuation;
  for (const PochAtom& atom : fam.atoms) {
    const PochhammerSpec spec = atom.spec_at(n);
    const bool invert = (atom.multiplicity < 0) != !atom.numerator;
    for (int k = 0; k < std::abs(atom.multiplicity); ++k) accumulate_pochhammer(acc, spec, invert, window);
  }
  return acc.expand(target);
}

// Quadratic a m^2 + b m + c.
struct QuadBound {
  Rational a{0}, b{0}, c{0};
  Rational at(long m) const {
    Rational mm(m);
    return a * mm * mm + b * mm + c;
  }
};

struct TailCertificate {
  int direction = 1;     // n = direction * m
  long start = 0;        // first m on this tail
  long stable_from = 0;  // regimes of every atom are fixed for m >= stable_from
  long first_omitted = 0;  // all m >= first_omitted have valuation > target
  QuadBound bound;       // valuation(direction * m) >= bound(m) for m >= stable_from
};

struct CutoffCertificate {
  long n_lo = 0;  // inclusive summation range
  long n_hi = 0;
  Exp target = 0;
  std::vector<TailCertificate> tails;
};

namespace detail {

// First m >= 0 from which c0 + c1 m has its eventual sign.
inline long sign_threshold(const Rational& c0, const Rational& c1) {
  if (sgn(c1) == 0) return 0;
  Rational root = -c0 / c1;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), root.get_num_mpz_t(), root.get_den_mpz_t());
  long t = f.get_si() + 1;
  return std::max(0L, t);
}

// Eventual sign of c0 + c1 m as m -> infinity.
inline int eventual_sign(const Rational& c0, const Rational& c1) {
  if (sgn(c1) != 0) return sgn(c1);
  return sgn(c0);
}

struct Linear {
  Rational c0{0}, c1{0};
};

inline QuadBound square(const Linear& l) { return {l.c1 * l.c1, 2 * l.c0 * l.c1, l.c0 * l.c0}; }

inline QuadBound times(const Linear& x, const Linear& y) {
  return {x.c1 * y.c1, x.c0 * y.c1 + x.c1 * y.c0, x.c0 * y.c0};
}

inline void add_scaled(QuadBound& acc, const QuadBound& q, const Rational& f) {
  acc.a += f * q.a;
  acc.b += f * q.b;
  acc.c += f * q.c;
}

inline void add_linear(QuadBound& acc, const Linear& l, const Rational& f) {
  acc.b += f * l.c1;
  acc.c += f * l.c0;
}

}  // namespace detail

// Builds the lower bound for one tail and the index from which it holds.
inline TailCertificate certify_tail(const SeriesFamily& fam, int dir, long start, Exp target) {
  using detail::Linear;
  TailCertificate cert;
  cert.direction = dir;
  cert.start = start;
  QuadBound& L = cert.bound;
  const Rational sd(dir);
  L.a = fam.alpha;
  L.b = fam.beta * sd + Rational(static_cast<long>(fam.u.exp)) * sd;
  L.c = fam.gamma;
  long m0 = start;
  for (const PochAtom& atom : fam.atoms) {
    const Rational M(static_cast<long>(atom.modulus));
    Linear A{Rational(static_cast<long>(atom.arg.exp)), Rational(static_cast<long>(atom.slope)) * sd};
    Rational eps(atom.numerator ? atom.multiplicity : -atom.multiplicity);
    std::optional<Linear> K;
    if (!atom.infinite) {
      Linear k{Rational(atom.count_offset), Rational(atom.count_slope) * sd};
      m0 = std::max(m0, detail::sign_threshold(k.c0, k.c1));
      if (detail::eventual_sign(k.c0, k.c1) < 0) {
        // (a;q^M)_k with k < 0 has valuation -S(a q^{kM}, M, -k).
        A = Linear{A.c0 + M * k.c0, A.c1 + M * k.c1};
        k = Linear{-k.c0, -k.c1};
        eps = -eps;
      }
      K = k;
    }
    m0 = std::max(m0, detail::sign_threshold(A.c0, A.c1));
    if (detail::eventual_sign(A.c0, A.c1) >= 0) continue;  // no negative-exponent factors
    if (K) {
      Linear last{A.c0 + M * (K->c0 - 1), A.c1 + M * K->c1};  // exponent of the final factor
      m0 = std::max(m0, detail::sign_threshold(last.c0, last.c1));
      if (detail::eventual_sign(last.c0, last.c1) <= 0) {
        // Every factor has non-positive exponent: S = k A + M k (k-1) / 2.
        QuadBound f = detail::times(*K, A);
        QuadBound kk = detail::times(*K, Linear{K->c0 - 1, K->c1});
        detail::add_scaled(f, kk, M / 2);
        detail::add_scaled(L, f, eps);
        continue;
      }
    }
    // Interior: -A^2/(2M) + A/2 - M/8 <= S <= -A^2/(2M) + A/2.
    QuadBound s = detail::square(A);
    QuadBound core;
    detail::add_scaled(core, s, Rational(-1) / (2 * M));
    detail::add_linear(core, A, Rational(1, 2));
    if (sgn(eps) > 0) core.c -= M / 8;
    detail::add_scaled(L, core, eps);
  }
  if (sgn(L.a) < 0 || (sgn(L.a) == 0 && sgn(L.b) <= 0)) {
    std::string tail = dir > 0 ? "n -> +inf" : "n -> -inf";
    fail(ErrorKind::not_convergent, "term valuations do not grow on the tail " + tail + " (bound " +
                                        L.a.get_str() + " m^2 + " + L.b.get_str() + " m + " + L.c.get_str() +
                                        ")" + (fam.label.empty() ? "" : " in " + fam.label));
  }
  cert.stable_from = m0;
  long m = m0;
  if (sgn(L.a) > 0) {
    Rational vertex = -L.b / (2 * L.a);
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), vertex.get_num_mpz_t(), vertex.get_den_mpz_t());
    m = std::max(m, c.get_si());
  }
  const Rational T(static_cast<long>(target));
  while (L.at(m) <= T) ++m;
  cert.first_omitted = m;
  return cert;
}

inline CutoffCertificate certify(const SeriesFamily& fam, Exp target) {
  CutoffCertificate cert;
  cert.target = target;
  if (fam.bilateral) {
    cert.tails.push_back(certify_tail(fam, 1, 0, target));
    cert.tails.push_back(certify_tail(fam, -1, 1, target));
    cert.n_hi = cert.tails[0].first_omitted - 1;
    cert.n_lo = -(cert.tails[1].first_omitted - 1);
  } else {
    cert.tails.push_back(certify_tail(fam, 1, fam.lower, target));
    cert.n_lo = fam.lower;
    cert.n_hi = cert.tails[0].first_omitted - 1;
  }
  // A vanishing denominator factor recurring on a tail makes the series
  // undefined even past the cutoff; the pattern repeats with period dividing
  // the largest modulus once regimes are fixed, so one period suffices.
  Exp period = 1;
  for (const auto& a : fam.atoms) period = std::max(period, a.modulus);
  for (const auto& t : cert.tails) {
    const long from = std::max(t.stable_from, t.first_omitted);
    for (long m = from; m < from + period; ++m) {
      TermInfo info = inspect_term(fam, t.direction * m);
      if (info.kind == TermKind::pole) fail(ErrorKind::pole_in_term, info.detail);
    }
  }
  return cert;
}

// Sums the family over an explicit index range, skipping zero terms and
// terms whose valuation exceeds the target.
inline Series sum_range(const SeriesFamily& fam, long n_lo, long n_hi, Exp target) {
  Series total = Series::zero(fam.scale, target);
  for (long n = n_lo; n <= n_hi; ++n) {
    TermInfo info = inspect_term(fam, n);
    if (info.kind == TermKind::pole) fail(ErrorKind::pole_in_term, info.detail);
    if (info.kind == TermKind::zero || info.valuation > target) continue;
    total += term_at(fam, n, target);
  }
  return total;
}

inline Series sum_family(const SeriesFamily& fam, Exp target) {
  CutoffCertificate cert = certify(fam, target);
  return sum_range(fam, cert.n_lo, cert.n_hi, target);
}

inline Series sum_bilateral(const SeriesFamily& fam, Exp target) {
  if (!fam.bilateral) fail(ErrorKind::invalid_argument, "family is unilateral");
  return sum_family(fam, target);
}

inline Series sum_unilateral(const SeriesFamily& fam, Exp target) {
  if (fam.bilateral) fail(ErrorKind::invalid_argument, "family is bilateral");
  return sum_family(fam, target);
}

// r psi s [a_1..a_r; b_1..b_s; q^M, z]: sum over Z of
// (a;q^M)_n / (b;q^M)_n [(-1)^n q^{M n(n-1)/2}]^{s-r} z^n.
inline SeriesFamily bilateral_psi(const std::vector<QMonomial>& numer, const std::vector<QMonomial>& denom,
                                  const QMonomial& z, Exp modulus, int scale) {
  SeriesFamily fam;
  fam.scale = scale;
  fam.bilateral = true;
  const long d = static_cast<long>(denom.size()) - static_cast<long>(numer.size());
  const Rational half = Rational(static_cast<long>(modulus)) * d / 2;
  fam.alpha = half;
  fam.beta = -half;
  fam.u = QMonomial(d % 2 == 0 ? z.coeff : -z.coeff, z.exp);
  for (const auto& a : numer) {
    PochAtom atom;
    atom.arg = a;
    atom.modulus = modulus;
    atom.count_slope = 1;
    fam.atoms.push_back(atom);
  }
  for (const auto& b : denom) {
    PochAtom atom;
    atom.arg = b;
    atom.modulus = modulus;
    atom.count_slope = 1;
    atom.numerator = false;
    fam.atoms.push_back(atom);
  }
  fam.label = std::to_string(numer.size()) + "psi" + std::to_string(denom.size());
  return fam;
}

}  // namespace qmock
