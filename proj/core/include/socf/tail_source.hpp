// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// RCF digit generation with certified tail enclosures.
//
// A TailSource is a forward cursor over the continued-fraction digits
// a_1, a_2, ... of an irrational x in (0,1).  Four backends share one
// contract:
//   - QuadraticSurd: x is an exact quadratic irrational; every tail
//     x_n = G^n(x) is again an exact SurdValue.
//   - DecimalString: x is known only through a truncated decimal; the
//     source tracks the rigorous enclosure [D/10^N, (D+1)/10^N] and refuses
//     (PrecisionExhausted) once the enclosure stops determining digits.
//   - ExplicitDigits: a finite digit list; tails are enclosed by the
//     cylinder of the remaining known digits.
//   - RandomBits: a seeded uniform dyadic draw whose bit supply is extended
//     lazily on demand, up to a hard cap.
//
// Every enclosure returned has exact rational endpoints with the true tail
// strictly interior (a rational endpoint can never equal the irrational
// tail), so downstream sign tests may treat enclosures as open intervals.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "socf/bigint.hpp"
#include "socf/errors.hpp"
#include "socf/fraction.hpp"
#include "socf/interval.hpp"
#include "socf/matrix.hpp"
#include "socf/rng.hpp"
#include "socf/surd.hpp"

namespace socf {

enum class TailBackend { QuadraticSurd, DecimalString, ExplicitDigits, RandomBits };

/// One RCF convergent p_n / q_n.
struct ConvergentPair {
  Int p;
  Int q;
  std::size_t index;  // n

  BigFraction value() const { return BigFraction(p, q); }
};

class TailSource {
 public:
  /// x given exactly as a quadratic irrational in (0,1).
  static TailSource from_surd(const SurdValue& x);

  /// x given as a truncated decimal "0.d1d2...dN" (truncation semantics:
  /// the true value lies in [D/10^N, (D+1)/10^N]).  The last `guard` digits
  /// are discarded first; pass guard >= 1 when the input may have been
  /// rounded rather than truncated.
  static TailSource from_decimal(std::string_view text, std::size_t guard = 0);

  /// x given by an explicit list of RCF digits (all >= 1).  Conceptually a
  /// prefix of some irrational's expansion; errors with SourceExhausted
  /// when the list runs out.
  static TailSource from_digits(std::vector<Int> digits);

  /// x drawn uniformly from (0,1): 256 seeded random bits up front, more
  /// appended lazily (doubling) whenever the enclosure must tighten, up to
  /// max_bits in total.
  static TailSource random(std::uint64_t seed, std::size_t max_bits = 1u << 20);

  TailBackend backend() const { return backend_; }

  /// Enclosure precision (bits) used when the exact backend is asked for an
  /// interval; doubles on each refine().
  unsigned long precision_bits() const { return surd_bits_; }

  /// Digits consumed so far (the cursor depth n).
  std::size_t depth() const { return digits_.size(); }

  /// The consumed digits a_1..a_n.
  const std::vector<Int>& digits() const { return digits_; }

  /// Cumulative matrix [[p_{n-1}, p_n], [q_{n-1}, q_n]] of the consumed
  /// digits; determinant (-1)^n.
  const IntMatrix2& cumulative() const { return m_; }

  /// p_n / q_n at the current depth (p_0/q_0 = 0/1 before any digit).
  ConvergentPair convergent() const { return {m_.p, m_.q, depth()}; }

  /// p_{n-1} / q_{n-1}; requires depth >= 1.
  ConvergentPair previous_convergent() const;

  /// Produce a_{n+1} >= 1 and advance, refining the enclosure as needed.
  Int next_digit();

  /// Strict rational enclosure of the current tail x_n at the present
  /// precision (no refinement is triggered; the lower endpoint may be 0).
  RatInterval tail_interval();

  /// Conservative double enclosure of the current tail: the true tail lies
  /// within [first, second] (endpoints outward-padded and clamped to [0, 1]).
  /// Never refines and never reduces fractions, so it is cheap enough to call
  /// once per orbit step as a filter in front of exact sign tests.
  std::pair<double, double> tail_approx() const;

  /// Tighten the current tail enclosure if the backend can.  Returns false
  /// when no further refinement is possible (decimal input consumed, digit
  /// list exhausted, random-bit cap reached).
  bool refine();

  /// Exact current tail for the QuadraticSurd backend, nullptr otherwise.
  const SurdValue* exact_tail() const {
    return tail_ ? &*tail_ : nullptr;
  }

 private:
  TailSource() = default;

  void ensure_positive_lo();
  void recompute_explicit_enclosure();
  void extend_random_bits();
  void push_root_enclosure();
  void commit_digit(const Int& a);

  TailBackend backend_ = TailBackend::ExplicitDigits;
  std::vector<Int> digits_;
  IntMatrix2 m_ = IntMatrix2::identity();

  // QuadraticSurd: exact tail and current enclosure bit count.
  std::optional<SurdValue> tail_;
  unsigned long surd_bits_ = 64;

  // Interval backends: current tail enclosure lo_n_/lo_d_ <= x_n <=
  // hi_n_/hi_d_ with the true tail strictly inside.  The pairs are kept raw
  // (denominators positive but fractions unreduced): the per-digit update is
  // then two small multiplications and a subtraction, and component size
  // grows only additively with depth.  Reducing each endpoint every digit
  // costs a gcd on ever-larger integers and dominated long-orbit runs.
  Int lo_n_ = 0;
  Int lo_d_ = 1;
  Int hi_n_ = 1;
  Int hi_d_ = 1;

  // ExplicitDigits: full list and how many future digits the current
  // enclosure uses.
  std::vector<Int> known_;
  std::size_t lookahead_ = 0;

  // RandomBits: generator state and the dyadic root enclosure
  // [acc/2^bits, (acc+1)/2^bits] of x itself.
  SplitMix64 rng_{0};
  Int acc_ = 0;
  std::size_t bits_ = 0;
  std::size_t max_bits_ = 0;
};

/// Consume `count` digits, returning the convergent after each.
std::vector<ConvergentPair> convergents(TailSource& src, std::size_t count);

/// Approximation coefficient at the current depth: exact value when the
/// backend is exact, and a strict rational enclosure always.
struct ThetaValue {
  BigFraction lo;
  BigFraction hi;
  std::optional<SurdValue> exact;
};

/// Theta(x, p_{n-1}/q_{n-1}) at the current depth n >= 1, via the closed
/// form q_{n-1} / (q_{n-1} * x_n + q_n).
ThetaValue theta(TailSource& src);

/// Like theta, but refines the source until hi - lo <= width.
ThetaValue theta(TailSource& src, const BigFraction& width);

/// Enclosure of the tail x_n with hi - lo <= width.  n may be at or beyond
/// the current depth (the cursor advances as needed) or before it (the
/// historical tail is recovered exactly from the digit block between n and
/// the cursor).
RatInterval tail_enclosure(TailSource& src, std::size_t n, const BigFraction& width);

}  // namespace socf
