// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// 2x2 integer matrices acting as Moebius transforms.  The entry layout
// [[r, p], [s, q]] mirrors the convergent recurrence: the product of the
// digit matrices [[0,1],[1,a_i]] for i = 1..n is exactly
// [[p_{n-1}, p_n], [q_{n-1}, q_n]], so cumulative products carry the last two
// convergents of the expansion at all times.

#pragma once

#include <string>

#include "socf/bigint.hpp"
#include "socf/errors.hpp"
#include "socf/fraction.hpp"
#include "socf/interval.hpp"

namespace socf {

/// [[r, p], [s, q]] acting on x as (r*x + p) / (s*x + q).
struct IntMatrix2 {
  Int r, p, s, q;

  static IntMatrix2 identity() { return {1, 0, 0, 1}; }

  /// Matrix of one continued-fraction digit: [[0,1],[1,a]].
  static IntMatrix2 digit(const Int& a) { return {0, 1, 1, a}; }

  Int det() const { return r * q - p * s; }

  friend IntMatrix2 operator*(const IntMatrix2& a, const IntMatrix2& b) {
    return {a.r * b.r + a.p * b.s, a.r * b.p + a.p * b.q,
            a.s * b.r + a.q * b.s, a.s * b.p + a.q * b.q};
  }

  friend bool operator==(const IntMatrix2& a, const IntMatrix2& b) {
    return a.r == b.r && a.p == b.p && a.s == b.s && a.q == b.q;
  }

  std::string to_string() const {
    return "[[" + r.get_str() + "," + p.get_str() + "],[" + s.get_str() +
           "," + q.get_str() + "]]";
  }
};

/// Exact Moebius image (r*x + p) / (s*x + q) of a rational point.
inline BigFraction mobius_apply(const IntMatrix2& m, const BigFraction& x) {
  BigFraction den(m.s * x.num() + m.q * x.den(), x.den());
  if (den.is_zero()) throw PoleInInterval("Moebius pole at evaluation point");
  return BigFraction(m.r * x.num() + m.p * x.den(),
                     m.s * x.num() + m.q * x.den());
}

/// Exact Moebius image of an interval.  A Moebius transform is monotonic on
/// any interval free of its pole, so the image is spanned by the endpoint
/// images; if the pole s*x + q == 0 lies inside (or on) the interval the
/// image is unbounded and we refuse.
inline RatInterval mobius_apply(const IntMatrix2& m, const RatInterval& x) {
  auto den_at = [&](const BigFraction& v) {
    return BigFraction(m.s * v.num() + m.q * v.den(), v.den());
  };
  BigFraction dlo = den_at(x.lo());
  BigFraction dhi = den_at(x.hi());
  if (dlo.sign() == 0 || dhi.sign() == 0 || dlo.sign() != dhi.sign())
    throw PoleInInterval("Moebius pole inside interval " + x.to_string());
  BigFraction a = mobius_apply(m, x.lo());
  BigFraction b = mobius_apply(m, x.hi());
  return a < b ? RatInterval(a, b) : RatInterval(b, a);
}

/// Moebius action of the inverse matrix: solves m . t = x for t.  Used to
/// pull an enclosure of the expansion target back to an enclosure of the
/// current tail.  (The adjugate [[q,-p],[-s,r]] acts as the inverse up to
/// the determinant, which cancels in the projective action.)
inline IntMatrix2 adjugate(const IntMatrix2& m) {
  return {m.q, -m.p, -m.s, m.r};
}

/// Moebius action of the transpose, (r*y + s) / (p*y + q).  The natural
/// extension's second coordinate evolves under transposed digit matrices.
inline BigFraction transpose_mobius_apply(const IntMatrix2& m,
                                          const BigFraction& y) {
  IntMatrix2 t{m.r, m.s, m.p, m.q};
  return mobius_apply(t, y);
}

}  // namespace socf
