// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Arbitrary-precision integer support.  socf uses GMP's C++ bindings; this
// header pins the integer type used throughout the library and adds the few
// helpers GMP does not expose directly in gmpxx.

#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "socf/errors.hpp"

namespace socf {

/// Library-wide arbitrary-precision signed integer.
using Int = mpz_class;

/// Floor of the square root of a non-negative integer.
inline Int isqrt(const Int& n) {
  if (n < 0) throw DomainError("isqrt of negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// True when n is a perfect square.
inline bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Greatest common divisor, always non-negative.
inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Floor division: largest integer q with q*d <= n (d must be nonzero).
inline Int floor_div(const Int& n, const Int& d) {
  if (d == 0) throw DomainError("floor_div by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

/// 10^e for moderate e.
inline Int pow10(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

/// 2^e for moderate e.
inline Int pow2(unsigned long e) {
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

/// -1, 0, or +1.
inline int sign(const Int& n) { return mpz_sgn(n.get_mpz_t()); }

/// Parse a decimal integer with optional leading '-'.  Rejects empty input,
/// stray characters, and whitespace: inputs come from user-facing syntax
/// where silent truncation would mask mistakes.
inline Int parse_int(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer literal");
  std::string buf(text);
  Int r;
  if (mpz_set_str(r.get_mpz_t(), buf.c_str(), 10) != 0)
    throw ParseError("invalid integer literal: '" + buf + "'");
  return r;
}

/// Number of bits in |n| (0 for n == 0).
inline std::size_t bit_length(const Int& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

/// Natural logarithm of a positive integer, accurate to double precision
/// even when the integer itself overflows double range.
inline double log_int(const Int& n) {
  if (n <= 0) throw DomainError("log_int of non-positive integer");
  signed long exp = 0;
  double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * 0.6931471805599453094;
}

}  // namespace socf
