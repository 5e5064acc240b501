// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// TailSource backends.  The digit-extraction logic is shared: maintain a
// strict rational enclosure (lo, hi) of the current tail, read the next
// partial quotient off the enclosure once it is tight enough, and advance
// the enclosure through t -> 1/t - a.  Because the enclosed tail is
// irrational and the endpoints rational, the tail is strictly interior at
// every step, which makes the floor test exact:
//   a = floor(1/hi) is the digit as soon as lo*(a+1) >= 1.

#include "socf/tail_source.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace socf {

namespace {

constexpr unsigned long kMaxSurdBits = 1u << 20;

/// Raw (unreduced) interval endpoints, denominators positive.
struct RawBounds {
  Int lo_n, lo_d, hi_n, hi_d;
};

/// Interval spanned by the cylinder of a digit word: the set of reals whose
/// expansion starts with digits [begin, begin+len) lies between the word's
/// own value [0;w] and the value with the last digit bumped, which the word
/// matrix exposes as p/q and (r+p)/(s+q).
RawBounds cylinder(const std::vector<Int>& digits, std::size_t begin,
                   std::size_t len) {
  IntMatrix2 m = IntMatrix2::identity();
  for (std::size_t i = 0; i < len; ++i)
    m = m * IntMatrix2::digit(digits[begin + i]);
  Int n1 = m.p, d1 = m.q;
  Int n2 = m.r + m.p, d2 = m.s + m.q;
  // Order by cross-multiplication; both denominators are positive.
  if (n1 * d2 <= n2 * d1)
    return {std::move(n1), std::move(d1), std::move(n2), std::move(d2)};
  return {std::move(n2), std::move(d2), std::move(n1), std::move(d1)};
}

}  // namespace

TailSource TailSource::from_surd(const SurdValue& x) {
  if (x.is_rational())
    throw RationalInput("expansion target is rational: " + x.to_string());
  if (x.sign() <= 0 || surd_compare(x, SurdValue(1)) >= 0)
    throw DomainError("expansion target outside (0,1): " + x.to_string());
  TailSource s;
  s.backend_ = TailBackend::QuadraticSurd;
  s.tail_ = x;
  return s;
}

TailSource TailSource::from_decimal(std::string_view text, std::size_t guard) {
  // Accept "0.ddd", ".ddd" with optional surrounding whitespace.
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view body = text.substr(b, e - b);
  if (!body.empty() && body.front() == '0') body.remove_prefix(1);
  if (body.empty() || body.front() != '.')
    throw ParseError("decimal input must look like 0.ddd...");
  body.remove_prefix(1);
  std::string digits;
  digits.reserve(body.size());
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("invalid decimal digit '") + c + "'");
    digits.push_back(c);
  }
  if (guard >= digits.size())
    throw DomainError("guard discards every provided decimal digit");
  digits.resize(digits.size() - guard);

  TailSource s;
  s.backend_ = TailBackend::DecimalString;
  Int d = parse_int(digits);
  Int scale = pow10(static_cast<unsigned long>(digits.size()));
  s.lo_n_ = d;
  s.lo_d_ = scale;
  s.hi_n_ = d + 1;
  s.hi_d_ = std::move(scale);
  return s;
}

TailSource TailSource::from_digits(std::vector<Int> digits) {
  for (const Int& a : digits)
    if (a < 1) throw DomainError("RCF digits must be positive integers");
  TailSource s;
  s.backend_ = TailBackend::ExplicitDigits;
  s.known_ = std::move(digits);
  s.lookahead_ = std::min<std::size_t>(s.known_.size(), 8);
  s.recompute_explicit_enclosure();
  return s;
}

TailSource TailSource::random(std::uint64_t seed, std::size_t max_bits) {
  if (max_bits < 256) throw DomainError("random backend needs max_bits >= 256");
  TailSource s;
  s.backend_ = TailBackend::RandomBits;
  s.rng_ = SplitMix64(seed);
  s.max_bits_ = max_bits;
  s.extend_random_bits();
  s.push_root_enclosure();
  return s;
}

ConvergentPair TailSource::previous_convergent() const {
  if (depth() == 0) throw DomainError("no previous convergent at depth 0");
  return {m_.r, m_.s, depth() - 1};
}

void TailSource::recompute_explicit_enclosure() {
  std::size_t remaining = known_.size() - depth();
  lookahead_ = std::min(lookahead_, remaining);
  if (lookahead_ == 0) {
    lo_n_ = 0;
    lo_d_ = 1;
    hi_n_ = 1;
    hi_d_ = 1;
    return;
  }
  RawBounds c = cylinder(known_, depth(), lookahead_);
  lo_n_ = std::move(c.lo_n);
  lo_d_ = std::move(c.lo_d);
  hi_n_ = std::move(c.hi_n);
  hi_d_ = std::move(c.hi_d);
}

void TailSource::extend_random_bits() {
  // Whole 64-bit words only, so bit i of the draw is a function of the seed
  // alone and never of the refinement schedule: any two consumers of the
  // same seed see the same real number.
  std::size_t cap = max_bits_ - max_bits_ % 64;
  std::size_t target = bits_ == 0 ? 256 : std::min(bits_ * 2, cap);
  while (bits_ < target) {
    acc_ <<= 64;
    acc_ |= Int(static_cast<unsigned long>(rng_.next()));
    bits_ += 64;
  }
}

void TailSource::push_root_enclosure() {
  // Re-derive the current tail enclosure by pushing the refined root
  // enclosure forward through the consumed digits.  Each step maps the
  // decreasing t -> 1/t - a; endpoints are clamped to [0,1], which is
  // always a valid (if occasionally loose) enclosure of the true tail.
  // On raw pairs the map is (n, d) -> (d - a*n, n), new lo from the old hi.
  Int scale = pow2(static_cast<unsigned long>(bits_));
  Int ln = acc_, ld = scale;
  Int hn = acc_ + 1, hd = std::move(scale);
  for (const Int& a : digits_) {
    Int nln, nld;
    if (sign(hn) == 0) {
      nln = 0;
      nld = 1;
    } else {
      nln = hd - a * hn;
      if (sign(nln) < 0) {
        nln = 0;
        nld = 1;
      } else {
        nld = std::move(hn);
      }
    }
    Int nhn, nhd;
    if (sign(ln) > 0) {
      nhn = ld - a * ln;
      if (nhn > ln) {
        nhn = 1;
        nhd = 1;
      } else {
        nhd = std::move(ln);
      }
    } else {
      nhn = 1;
      nhd = 1;
    }
    ln = std::move(nln);
    ld = std::move(nld);
    hn = std::move(nhn);
    hd = std::move(nhd);
  }
  lo_n_ = std::move(ln);
  lo_d_ = std::move(ld);
  hi_n_ = std::move(hn);
  hi_d_ = std::move(hd);
}

bool TailSource::refine() {
  switch (backend_) {
    case TailBackend::QuadraticSurd:
      if (surd_bits_ >= kMaxSurdBits) return false;
      surd_bits_ *= 2;
      return true;
    case TailBackend::DecimalString:
      return false;
    case TailBackend::ExplicitDigits: {
      std::size_t remaining = known_.size() - depth();
      if (lookahead_ >= remaining) return false;
      lookahead_ = std::min(remaining, std::max<std::size_t>(8, lookahead_ * 2));
      recompute_explicit_enclosure();
      return true;
    }
    case TailBackend::RandomBits:
      if (bits_ + 64 > max_bits_) return false;
      extend_random_bits();
      push_root_enclosure();
      return true;
  }
  return false;  // unreachable
}

void TailSource::ensure_positive_lo() {
  while (sign(lo_n_) <= 0) {
    if (!refine())
      throw PrecisionExhausted("tail enclosure cannot exclude 0 at depth " +
                               std::to_string(depth()));
  }
}

void TailSource::commit_digit(const Int& a) {
  digits_.push_back(a);
  // m * [[0,1],[1,a]] without a general product.
  IntMatrix2 next{m_.p, m_.r + m_.p * a, m_.q, m_.s + m_.q * a};
  m_ = next;
}

Int TailSource::next_digit() {
  if (backend_ == TailBackend::QuadraticSurd) {
    SurdValue recip = tail_->reciprocal();
    Int a = recip.floor();
    if (a < 1) throw Error("internal: tail left (0,1)");
    tail_ = recip - SurdValue(a);
    commit_digit(a);
    return a;
  }
  if (backend_ == TailBackend::ExplicitDigits) {
    if (depth() >= known_.size())
      throw SourceExhausted("digit list exhausted at depth " +
                            std::to_string(depth()));
    Int a = known_[depth()];
    commit_digit(a);
    lookahead_ = std::min<std::size_t>(known_.size() - depth(), 8);
    recompute_explicit_enclosure();
    return a;
  }
  // Interval backends: read the floor off the enclosure.
  for (;;) {
    ensure_positive_lo();
    Int a = floor_div(hi_d_, hi_n_);  // floor(1/hi); 1/x > 1/hi >= a
    // Digit determined once 1/lo <= a+1, i.e. lo*(a+1) >= 1 (strict
    // interiority covers the boundary case 1/lo == a+1 exactly).
    if ((a + 1) * lo_n_ >= lo_d_) {
      if (a < 1) throw Error("internal: enclosure left (0,1)");
      // t -> 1/t - a on raw pairs: (n, d) -> (d - a*n, n), decreasing, so
      // the new lo comes from the old hi and vice versa.
      Int nln = hi_d_ - a * hi_n_;
      Int nld = std::move(hi_n_);
      if (sign(nln) < 0) {
        nln = 0;
        nld = 1;
      }
      Int nhn = lo_d_ - a * lo_n_;
      Int nhd = std::move(lo_n_);
      if (nhn > nhd) {
        nhn = 1;
        nhd = 1;
      }
      lo_n_ = std::move(nln);
      lo_d_ = std::move(nld);
      hi_n_ = std::move(nhn);
      hi_d_ = std::move(nhd);
      commit_digit(a);
      return a;
    }
    if (!refine())
      throw PrecisionExhausted(
          "enclosure too wide to determine digit at depth " +
          std::to_string(depth() + 1));
  }
}

RatInterval TailSource::tail_interval() {
  if (backend_ == TailBackend::QuadraticSurd)
    return tail_->enclosure(surd_bits_);
  // The only interval-path place that reduces the raw pairs; callers of
  // tail_interval are per-record, not per-step.
  return RatInterval(BigFraction(lo_n_, lo_d_), BigFraction(hi_n_, hi_d_));
}

std::pair<double, double> TailSource::tail_approx() const {
  double lo, hi;
  if (backend_ == TailBackend::QuadraticSurd) {
    // Quadratic-irrational tails recur (the expansion is eventually
    // periodic), so the exact components stay word-sized and the floating
    // evaluation is accurate to a few ulp; the pad dwarfs that.
    double v = tail_->to_double();
    lo = v - 1e-12;
    hi = v + 1e-12;
  } else {
    // mpq_get_d divides numerator by denominator, so it is correct on
    // unreduced pairs; it truncates toward zero, hence the outward pad.
    lo = mpq_class(lo_n_, lo_d_).get_d() - 1e-13;
    hi = mpq_class(hi_n_, hi_d_).get_d() + 1e-13;
  }
  if (lo < 0.0) lo = 0.0;
  if (hi > 1.0) hi = 1.0;
  if (hi < lo) hi = lo;
  return {lo, hi};
}

std::vector<ConvergentPair> convergents(TailSource& src, std::size_t count) {
  std::vector<ConvergentPair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    src.next_digit();
    out.push_back(src.convergent());
  }
  return out;
}

ThetaValue theta(TailSource& src) {
  if (src.depth() == 0)
    throw DomainError("theta requires at least one digit (depth >= 1)");
  const IntMatrix2& m = src.cumulative();
  if (const SurdValue* t = src.exact_tail()) {
    // Theta = q_{n-1} / (q_{n-1} x_n + q_n), exactly.
    SurdValue exact = SurdValue(m.s) / (SurdValue(m.s) * *t + SurdValue(m.q));
    RatInterval e = exact.enclosure(std::max(128ul, src.precision_bits()));
    return {e.lo(), e.hi(), exact};
  }
  RatInterval t = src.tail_interval();
  BigFraction s(m.s), q(m.q);
  // Decreasing in the tail: the upper bound comes from the lower endpoint.
  BigFraction hi = s / (s * t.lo() + q);
  BigFraction lo = s / (s * t.hi() + q);
  return {lo, hi, std::nullopt};
}

ThetaValue theta(TailSource& src, const BigFraction& width) {
  for (;;) {
    ThetaValue v = theta(src);
    if (v.hi - v.lo <= width) return v;
    if (!src.refine())
      throw PrecisionExhausted("cannot tighten theta to requested width");
  }
}

RatInterval tail_enclosure(TailSource& src, std::size_t n,
                           const BigFraction& width) {
  if (width.sign() <= 0) throw DomainError("enclosure width must be positive");
  while (src.depth() < n) src.next_digit();
  if (n == src.depth()) {
    for (;;) {
      RatInterval t = src.tail_interval();
      if (t.width() <= width) return t;
      if (!src.refine())
        throw PrecisionExhausted("cannot tighten tail enclosure to width " +
                                 width.to_string());
    }
  }
  // Historical tail: x_n is the Moebius image of the current tail under the
  // digit block consumed between n and the cursor; s, q >= 0 keeps the
  // denominator positive on (0,1), so no pole can occur.
  IntMatrix2 block = IntMatrix2::identity();
  const std::vector<Int>& ds = src.digits();
  for (std::size_t i = n; i < src.depth(); ++i)
    block = block * IntMatrix2::digit(ds[i]);
  for (;;) {
    RatInterval img = mobius_apply(block, src.tail_interval());
    if (img.width() <= width) return img;
    if (!src.refine())
      throw PrecisionExhausted("cannot tighten tail enclosure to width " +
                               width.to_string());
  }
}

}  // namespace socf
