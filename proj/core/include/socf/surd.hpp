// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in real quadratic fields.  A SurdValue is
// (a + b*sqrt(d)) / c with integer a, b, c and non-negative integer d.
// Rationals embed with b == 0, d == 0.  All comparisons and floors are
// exact; nothing in this type ever rounds.
//
// Canonical form: c > 0; gcd(a, b, c) == 1; d == 0 iff b == 0; square
// factors of d are folded into b (certified by trial division up to 10^4
// plus a perfect-square test, which covers every radicand this library
// constructs; see normalize_radicand).

#pragma once

#include <string>
#include <utility>

#include "socf/bigint.hpp"
#include "socf/errors.hpp"
#include "socf/fraction.hpp"
#include "socf/interval.hpp"

namespace socf {

class SurdValue {
 public:
  /// Zero.
  SurdValue() : a_(0), b_(0), c_(1), d_(0) {}

  /// Rational embedding.
  SurdValue(const BigFraction& r) : a_(r.num()), b_(0), c_(r.den()), d_(0) {}
  SurdValue(const Int& n) : a_(n), b_(0), c_(1), d_(0) {}
  SurdValue(long n) : a_(n), b_(0), c_(1), d_(0) {}
  SurdValue(int n) : a_(n), b_(0), c_(1), d_(0) {}

  /// General constructor: (a + b*sqrt(d)) / c.
  SurdValue(Int a, Int b, Int c, Int d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (c_ == 0) throw DomainError("surd with zero denominator");
    if (d_ < 0) throw DomainError("negative radicand");
    normalize();
  }

  /// sqrt(n) for non-negative n.
  static SurdValue sqrt_int(const Int& n) { return SurdValue(0, 1, 1, n); }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// The exact rational value; only valid when is_rational().
  BigFraction to_fraction() const {
    if (!is_rational()) throw DomainError("surd is irrational");
    return BigFraction(a_, c_);
  }

  /// True when arithmetic between the two values stays inside one quadratic
  /// field (equal radicands, or at least one operand rational).
  friend bool compatible(const SurdValue& u, const SurdValue& v) {
    return u.b_ == 0 || v.b_ == 0 || u.d_ == v.d_;
  }

  /// Exact sign: -1, 0, or +1.  (c > 0 by canonical form, so the sign of
  /// the numerator a + b*sqrt(d) is the sign of the value.)
  int sign() const { return sign_numerator(); }

  friend SurdValue operator-(const SurdValue& u) {
    SurdValue r = u;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }

  friend SurdValue operator+(const SurdValue& u, const SurdValue& v) {
    Int d = joint_radicand(u, v);
    return SurdValue(u.a_ * v.c_ + v.a_ * u.c_, u.b_ * v.c_ + v.b_ * u.c_,
                     u.c_ * v.c_, d);
  }
  friend SurdValue operator-(const SurdValue& u, const SurdValue& v) {
    return u + (-v);
  }
  friend SurdValue operator*(const SurdValue& u, const SurdValue& v) {
    Int d = joint_radicand(u, v);
    return SurdValue(u.a_ * v.a_ + u.b_ * v.b_ * d,
                     u.a_ * v.b_ + u.b_ * v.a_, u.c_ * v.c_, d);
  }
  friend SurdValue operator/(const SurdValue& u, const SurdValue& v) {
    return u * v.reciprocal();
  }

  SurdValue& operator+=(const SurdValue& o) { return *this = *this + o; }
  SurdValue& operator-=(const SurdValue& o) { return *this = *this - o; }
  SurdValue& operator*=(const SurdValue& o) { return *this = *this * o; }
  SurdValue& operator/=(const SurdValue& o) { return *this = *this / o; }

  /// Multiply by the conjugate: 1/v = c*(a - b*sqrt(d)) / (a^2 - b^2 d).
  SurdValue reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of zero");
    if (is_rational()) return SurdValue(c_, Int(0), a_, Int(0));
    Int norm = a_ * a_ - b_ * b_ * d_;
    // norm == 0 would make sqrt(d) rational, impossible once d is
    // square-free; normalize() certifies that for every d we construct.
    if (norm == 0) throw Error("surd with non-square-free radicand");
    return SurdValue(c_ * a_, -c_ * b_, norm, d_);
  }

  friend bool operator==(const SurdValue& u, const SurdValue& v) {
    return u.a_ == v.a_ && u.b_ == v.b_ && u.c_ == v.c_ && u.d_ == v.d_;
  }

  /// Exact three-way comparison within one field.  Throws MixedRadicands
  /// when both operands are irrational with different radicands; callers
  /// that may mix fields should use compare_any().
  friend int surd_compare(const SurdValue& u, const SurdValue& v) {
    if (!compatible(u, v))
      throw MixedRadicands("comparing sqrt(" + u.d_.get_str() +
                           ") against sqrt(" + v.d_.get_str() + ")");
    return (u - v).sign();
  }

  friend bool operator<(const SurdValue& u, const SurdValue& v) {
    return surd_compare(u, v) < 0;
  }
  friend bool operator<=(const SurdValue& u, const SurdValue& v) {
    return surd_compare(u, v) <= 0;
  }
  friend bool operator>(const SurdValue& u, const SurdValue& v) {
    return surd_compare(u, v) > 0;
  }
  friend bool operator>=(const SurdValue& u, const SurdValue& v) {
    return surd_compare(u, v) >= 0;
  }

  /// Exact floor.
  Int floor() const {
    if (is_rational()) return floor_div(a_, c_);
    // Enclose sqrt(d) between dyadic rationals and tighten until the floor
    // of the whole expression is pinned down.  The value is irrational, so
    // it can never sit on an integer and the loop terminates quickly.
    for (unsigned long k = 8; k <= 1u << 14; k *= 2) {
      RatInterval e = enclosure(k);
      Int flo = e.lo().floor();
      Int fhi = e.hi().floor();
      if (flo == fhi) return flo;
      // Interval is open: if hi is exactly the integer fhi, the value is
      // strictly below it.
      if (fhi == flo + 1 && e.hi().is_integer()) return flo;
    }
    throw Error("floor of surd did not stabilise");  // unreachable
  }

  /// Strict rational enclosure lo < value < hi using k bits of sqrt(d);
  /// width is about |b| / (c * 2^k).  Requires an irrational value.
  RatInterval enclosure(unsigned long k) const {
    if (is_rational()) throw DomainError("enclosure of rational surd");
    Int scale = pow2(k);
    Int s = isqrt(d_ * scale * scale);  // floor(2^k * sqrt(d)), strict bounds
    BigFraction root_lo(s, scale), root_hi(s + 1, scale);
    BigFraction av(a_, c_), bv(b_, c_);
    if (socf::sign(b_) > 0)
      return RatInterval(av + bv * root_lo, av + bv * root_hi);
    return RatInterval(av + bv * root_hi, av + bv * root_lo);
  }

  /// Nearest double; for exact decisions use sign()/floor() instead.
  double to_double() const {
    double num = mpq_class(a_, c_).get_d() +
                 mpq_class(b_, c_).get_d() * std::sqrt(d_.get_d());
    return num;
  }

  /// Render readable text: "p/q" for rationals, otherwise
  /// "(a+b*sqrt(d))/c" with the obvious simplifications.
  std::string to_string() const;

 private:
  static Int joint_radicand(const SurdValue& u, const SurdValue& v) {
    if (!compatible(u, v))
      throw MixedRadicands("mixing sqrt(" + u.d_.get_str() + ") with sqrt(" +
                           v.d_.get_str() + ")");
    return u.b_ != 0 ? u.d_ : v.d_;
  }

  /// Sign of a + b*sqrt(d) with d square-free (so equality across the
  /// rational/irrational boundary cannot occur unless the value is zero).
  int sign_numerator() const {
    if (b_ == 0) return socf::sign(a_);
    if (a_ == 0) return socf::sign(b_);
    int sa = socf::sign(a_), sb = socf::sign(b_);
    if (sa > 0 && sb > 0) return 1;
    if (sa < 0 && sb < 0) return -1;
    int c = cmp(Int(a_ * a_), Int(b_ * b_ * d_));  // compares |a| vs |b|sqrt(d)
    if (c == 0) return 0;                          // only if sqrt(d) rational
    // sa > 0, sb < 0: positive iff |a| > |b| sqrt(d); mirrored otherwise.
    return sa > 0 ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
  }

  void normalize() {
    if (d_ == 0 || b_ == 0) {
      b_ = 0;
      d_ = 0;
    } else {
      normalize_radicand();
    }
    if (socf::sign(c_) < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
    }
    Int g = socf::gcd(socf::gcd(a_, b_), c_);
    if (g > 1) {
      a_ /= g;
      b_ /= g;
      c_ /= g;
    }
  }

  /// Pull square factors of d into b.  Trial division up to 10^4 followed
  /// by a perfect-square test certifies square-freeness for every radicand
  /// below 10^8 and for all larger ones whose square part is smooth —
  /// which covers everything this library builds (region parameters and
  /// user sqrt(D) expressions with modest D).
  void normalize_radicand() {
    Int d = d_;
    Int outer = 1;
    for (Int f = 2; f * f <= d && f <= 10000; ++f) {
      Int ff = f * f;
      while (d % ff == 0) {
        d /= ff;
        outer *= f;
      }
    }
    if (is_perfect_square(d)) {
      outer *= isqrt(d);
      d = 1;
    }
    b_ *= outer;
    d_ = d;
    if (d_ == 1) {
      a_ += b_;
      b_ = 0;
      d_ = 0;
    }
  }

  Int a_, b_, c_, d_;
};

/// Three-way comparison that tolerates mixed radicands by refining strict
/// rational enclosures until the values separate.  Two irrationals from
/// different quadratic fields can never be equal, so this terminates.
int compare_any(const SurdValue& u, const SurdValue& v);

/// Parse a surd expression: integers, fractions, sqrt(D), parentheses, and
/// the operators + - * / with the usual precedence.  Examples: "1/sqrt(5)",
/// "(sqrt(5)-1)/2", "2/5", "3 - sqrt(2)".
SurdValue parse_surd(std::string_view text);

}  // namespace socf
