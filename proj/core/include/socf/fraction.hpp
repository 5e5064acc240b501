// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact rational arithmetic.  BigFraction is the workhorse value type of the
// library: natural-extension second coordinates, interval endpoints, and
// generalised-continued-fraction digits are all exact rationals.

#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "socf/bigint.hpp"
#include "socf/errors.hpp"

namespace socf {

/// An exact rational in canonical form: den > 0, gcd(num, den) == 1,
/// zero represented as 0/1.
class BigFraction {
 public:
  BigFraction() : num_(0), den_(1) {}
  BigFraction(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT(runtime/explicit)
  BigFraction(long n) : num_(n), den_(1) {}            // NOLINT(runtime/explicit)
  BigFraction(int n) : num_(n), den_(1) {}             // NOLINT(runtime/explicit)

  BigFraction(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw DomainError("fraction with zero denominator");
    canonicalize();
  }

  /// Adopt num/den without reducing.  The caller must guarantee the pair is
  /// already canonical (den > 0, gcd(num, den) == 1): continuant pairs from a
  /// unimodular matrix, or a/b with gcd(a, b) known, qualify.  This skips the
  /// gcd that dominates per-step cost on fast paths.
  static BigFraction from_reduced(Int num, Int den) {
    BigFraction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  /// Parse "p" or "p/q" (decimal integers, optional leading '-').
  static BigFraction from_string(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigFraction(parse_int(text));
    return BigFraction(parse_int(text.substr(0, slash)),
                       parse_int(text.substr(slash + 1)));
  }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return socf::sign(num_); }

  /// Largest integer <= value.
  Int floor() const { return floor_div(num_, den_); }

  BigFraction reciprocal() const {
    if (num_ == 0) throw DomainError("reciprocal of zero");
    return BigFraction(den_, num_);
  }

  friend BigFraction operator-(const BigFraction& a) {
    BigFraction r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }

  friend BigFraction operator+(const BigFraction& a, const BigFraction& b) {
    return BigFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend BigFraction operator-(const BigFraction& a, const BigFraction& b) {
    return BigFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend BigFraction operator*(const BigFraction& a, const BigFraction& b) {
    return BigFraction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend BigFraction operator/(const BigFraction& a, const BigFraction& b) {
    if (b.num_ == 0) throw DomainError("division by zero fraction");
    return BigFraction(a.num_ * b.den_, a.den_ * b.num_);
  }

  BigFraction& operator+=(const BigFraction& o) { return *this = *this + o; }
  BigFraction& operator-=(const BigFraction& o) { return *this = *this - o; }
  BigFraction& operator*=(const BigFraction& o) { return *this = *this * o; }
  BigFraction& operator/=(const BigFraction& o) { return *this = *this / o; }

  friend bool operator==(const BigFraction& a, const BigFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const BigFraction& a,
                                          const BigFraction& b) {
    // Cross-multiplication is exact; denominators are positive.
    int c = cmp(Int(a.num_ * b.den_), Int(b.num_ * a.den_));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Render as "num/den" (always with the slash, e.g. "0/1", "-3/7").
  std::string to_string() const {
    return num_.get_str() + "/" + den_.get_str();
  }

  /// Nearest double (GMP rounds the quotient correctly for our range).
  double to_double() const {
    mpq_class q(num_, den_);
    return q.get_d();
  }

 private:
  void canonicalize() {
    if (socf::sign(den_) < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = socf::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_;
  Int den_;
};

/// abs(a).
inline BigFraction abs(const BigFraction& a) { return a.sign() < 0 ? -a : a; }

}  // namespace socf
