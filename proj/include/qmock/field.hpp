#pragma once

// Exact scalars: Q and the two small cyclotomic fields Q(i), Q(w).
//
// A FieldElement is c0 + c1*z where z is the primitive root of unity of the
// element's conductor (z^2 + z + 1 = 0 for conductor 3, z^2 + 1 = 0 for
// conductor 4). Values whose z-coordinate vanishes are normalised to
// conductor 1, so a rational intermediate of an i- or w-computation mixes
// freely with either field.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "qmock/error.hpp"

namespace qmock {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long v) : c0_(v) {}  // NOLINT(google-explicit-constructor)
  FieldElement(Rational v) : c0_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static FieldElement from_coords(int conductor, Rational c0, Rational c1) {
    check_conductor(conductor);
    FieldElement e;
    e.c0_ = std::move(c0);
    e.c1_ = std::move(c1);
    e.conductor_ = conductor;
    e.normalise();
    return e;
  }

  // The generator z of Q(z): w (conductor 3) or i (conductor 4).
  static FieldElement generator(int conductor) {
    check_conductor(conductor);
    if (conductor == 1) return FieldElement(1);
    return from_coords(conductor, 0, 1);
  }

  int conductor() const noexcept { return conductor_; }
  const Rational& c0() const noexcept { return c0_; }
  const Rational& c1() const noexcept { return c1_; }
  std::array<Rational, 2> coords() const { return {c0_, c1_}; }

  bool is_zero() const noexcept { return sgn(c0_) == 0 && sgn(c1_) == 0; }
  bool is_one() const noexcept { return sgn(c1_) == 0 && c0_ == 1; }
  bool is_minus_one() const noexcept { return sgn(c1_) == 0 && c0_ == -1; }
  bool is_rational() const noexcept { return sgn(c1_) == 0; }

  FieldElement operator-() const {
    FieldElement r = *this;
    r.c0_ = -r.c0_;
    r.c1_ = -r.c1_;
    return r;
  }

  FieldElement& operator+=(const FieldElement& o) {
    conductor_ = join(conductor_, o.conductor_);
    c0_ += o.c0_;
    c1_ += o.c1_;
    normalise();
    return *this;
  }

  FieldElement& operator-=(const FieldElement& o) {
    conductor_ = join(conductor_, o.conductor_);
    c0_ -= o.c0_;
    c1_ -= o.c1_;
    normalise();
    return *this;
  }

  FieldElement& operator*=(const FieldElement& o) {
    if (conductor_ == 1 && o.conductor_ == 1) {
      c0_ *= o.c0_;
      return *this;
    }
    const int k = join(conductor_, o.conductor_);
    // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2
    Rational ac = c0_ * o.c0_;
    Rational bd = c1_ * o.c1_;
    Rational mid = c0_ * o.c1_ + c1_ * o.c0_;
    if (k == 4) {  // z^2 = -1
      c0_ = ac - bd;
      c1_ = mid;
    } else {  // z^2 = -z - 1
      c0_ = ac - bd;
      c1_ = mid - bd;
    }
    conductor_ = k;
    normalise();
    return *this;
  }

  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  // Complex conjugation, the automorphism z -> z^{-1}.
  FieldElement conj() const {
    if (conductor_ == 1) return *this;
    if (conductor_ == 4) return from_coords(4, c0_, -c1_);
    // conj(a + b w) = a + b w^2 = (a - b) - b w
    return from_coords(3, c0_ - c1_, -c1_);
  }

  // a * conj(a); always rational.
  Rational norm() const {
    if (conductor_ == 1) return c0_ * c0_;
    if (conductor_ == 4) return c0_ * c0_ + c1_ * c1_;
    return c0_ * c0_ - c0_ * c1_ + c1_ * c1_;
  }

  FieldElement inverse() const {
    if (is_zero()) fail(ErrorKind::division_by_zero, "inverse of zero field element");
    if (conductor_ == 1) return FieldElement(Rational(1) / c0_);
    Rational n = norm();
    FieldElement c = conj();
    c.c0_ /= n;
    c.c1_ /= n;
    return c;
  }

  FieldElement pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    FieldElement result(1), base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k > 0) base *= base;
    }
    return result;
  }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.conductor_ == b.conductor_ && a.c0_ == b.c0_ && a.c1_ == b.c1_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  // Parseable text: "3/2", "w", "-1/2 - 3*i".
  std::string to_string() const {
    if (conductor_ == 1) return c0_.get_str();
    const char* g = conductor_ == 3 ? "w" : "i";
    std::string out;
    if (sgn(c0_) != 0) out = c0_.get_str();
    Rational b = c1_;
    if (!out.empty()) {
      out += sgn(b) < 0 ? " - " : " + ";
      b = abs(b);
    } else if (sgn(b) < 0) {
      out = "-";
      b = -b;
    }
    if (b != 1) out += b.get_str() + "*";
    out += g;
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.to_string(); }

 private:
  static void check_conductor(int k) {
    if (k != 1 && k != 3 && k != 4) fail(ErrorKind::incompatible_conductors, "conductor must be 1, 3 or 4");
  }

  static int join(int a, int b) {
    if (a == 1) return b;
    if (b == 1 || a == b) return a;
    fail(ErrorKind::incompatible_conductors, "cannot combine Q(w) and Q(i) values");
  }

  void normalise() {
    if (sgn(c1_) == 0) conductor_ = 1;
  }

  Rational c0_{0};
  Rational c1_{0};
  int conductor_ = 1;
};

// Primitive n-th root of unity for n in {1, 2, 3, 4, 6}; n = 6 yields -w^2 = 1 + w.
inline FieldElement root_of_unity(int n) {
  switch (n) {
    case 1: return FieldElement(1);
    case 2: return FieldElement(-1);
    case 3: return FieldElement::generator(3);
    case 4: return FieldElement::generator(4);
    case 6: return FieldElement::from_coords(3, 1, 1);
    default: fail(ErrorKind::unsupported_order, "no root of unity of order " + std::to_string(n));
  }
}

inline bool compatible_conductors(int a, int b) { return a == 1 || b == 1 || a == b; }

}  // namespace qmock
