// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Implementation notes.
//
// Theta comparisons are decided exactly.  With d digits consumed the
// cumulative matrix [[r,p],[s,q]] gives x = (r t + p)/(s t + q) for the
// tail t, hence
//   Theta_{d-1} = q_{d-1}^2 |x - p_{d-1}/q_{d-1}| = s / (s t + q),
// a decreasing Mobius function of t.  Quadratic-surd tails compare against
// thresholds exactly; interval tails bracket Theta between the images of
// the tail endpoints and refine until the threshold leaves the bracket.
//
// A stream record k lands at depth n(k)+1, where this identity yields
// exactly Theta(x, P_k/Q_k) because P_k/Q_k = p_{n(k)}/q_{n(k)}.

#include "socf/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "socf/errors.hpp"
#include "socf/induction.hpp"
#include "socf/interval.hpp"
#include "socf/matrix.hpp"
#include "socf/measure.hpp"
#include "socf/rng.hpp"
#include "socf/surd.hpp"

namespace socf {
namespace {

// Decide Theta_{depth-1} <= eps (or < eps when strict), refining the tail
// as needed.  Exact for quadratic-surd tails including boundary equality.
bool theta_le(TailSource& src, const BigFraction& eps, bool strict,
              std::size_t budget) {
  if (src.depth() == 0) throw DomainError("theta needs at least one digit");
  if (const SurdValue* t = src.exact_tail()) {
    IntMatrix2 m = src.cumulative();
    SurdValue th = SurdValue(m.s) / (SurdValue(m.s) * *t + SurdValue(m.q));
    int cmp = compare_any(th, SurdValue(eps));
    return strict ? cmp < 0 : cmp <= 0;
  }
  for (std::size_t i = 0;; ++i) {
    ThetaValue tv = theta(src);
    // The bracket is strict on both sides, so one test serves both modes.
    if (tv.hi <= eps) return true;
    if (tv.lo >= eps) return false;
    if (i >= budget)
      throw UndecidableAtBudget("theta comparison undecided within budget");
    if (!src.refine())
      throw PrecisionExhausted("theta comparison exhausted the digit source");
  }
}

// Decide Theta_{depth-1} <= bound (or < bound when strict) for a possibly
// irrational threshold.
bool theta_below(TailSource& src, const SurdValue& bound, bool strict,
                 std::size_t budget) {
  if (bound.is_rational())
    return theta_le(src, bound.to_fraction(), strict, budget);
  if (src.depth() == 0) throw DomainError("theta needs at least one digit");
  if (const SurdValue* t = src.exact_tail()) {
    IntMatrix2 m = src.cumulative();
    SurdValue th = SurdValue(m.s) / (SurdValue(m.s) * *t + SurdValue(m.q));
    int cmp = compare_any(th, bound);
    return strict ? cmp < 0 : cmp <= 0;
  }
  unsigned long kb = 64;
  for (std::size_t i = 0;; ++i) {
    ThetaValue tv = theta(src);
    RatInterval be = bound.enclosure(kb);
    // Both brackets are strict, so the same two tests serve both modes.
    if (tv.hi <= be.lo()) return true;
    if (tv.lo >= be.hi()) return false;
    if (i >= budget)
      throw UndecidableAtBudget("theta comparison undecided within budget");
    kb *= 2;
    if (!src.refine())
      throw PrecisionExhausted("theta comparison exhausted the digit source");
  }
}

}  // namespace

SuperoptimalReport verify_superoptimal(TailSource x, const Region& r,
                                       const SurdValue& epsilon, double C,
                                       std::size_t K, std::size_t cap) {
  SuperoptimalReport rep;
  rep.epsilon = epsilon;
  rep.C = C;
  rep.K = K;
  rep.theta_ok = true;
  rep.seidel_ok = true;

  TailSource plain = x;  // independent cursor for the plain expansion
  SocfStream stream(r, std::move(x), cap);
  std::size_t first_bad_theta = K, first_bad_seidel = K;
  for (std::size_t k = 0; k < K; ++k) {
    SocfStream::Record rec = stream.next();

    // Clause (i): the landing identity puts Theta(x, P_k/Q_k) at the
    // stream's current depth; compare against epsilon exactly.
    if (!theta_below(stream.point().x, epsilon, /*strict=*/false, 64)) {
      rep.theta_ok = false;
      first_bad_theta = std::min(first_bad_theta, k);
    }
    ThetaValue tv = theta(stream.point().x);
    rep.theta_max = std::max(rep.theta_max, tv.hi.to_double());

    // Clause (ii): the plain convergent at index n(k), recomputed from the
    // untouched cursor, must equal P_k/Q_k as reduced integers.
    while (plain.depth() < rec.n) plain.next_digit();
    IntMatrix2 m = plain.cumulative();
    if (!(m.p == rec.P && m.q == rec.Q)) {
      rep.seidel_ok = false;
      first_bad_seidel = std::min(first_bad_seidel, k);
    }
    if (k > 0)
      rep.speed_ratios.push_back(static_cast<double>(rec.n) /
                                 static_cast<double>(k));
  }

  std::string growth;
  if (!rep.speed_ratios.empty()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", rep.speed_ratios.back());
    growth = "; n(k)/k = " + std::string(buf) + " at the last record, " +
             "consistent with C = " + std::to_string(C);
  }
  if (rep.theta_ok && rep.seidel_ok) {
    rep.verdict = "pass: all " + std::to_string(K) +
                  " records satisfy Theta <= " + epsilon.to_string() +
                  " exactly and match the plain convergent subsequence" +
                  growth;
  } else {
    rep.verdict = "FAIL:";
    if (!rep.theta_ok)
      rep.verdict += " Theta bound violated first at record " +
                     std::to_string(first_bad_theta) + ";";
    if (!rep.seidel_ok)
      rep.verdict += " convergent mismatch first at record " +
                     std::to_string(first_bad_seidel) + ";";
  }
  return rep;
}

LegendreReport legendre_exactness(TailSource x, const BigFraction& eps0,
                                  std::size_t K, std::size_t cap) {
  LegendreReport rep;
  if (K == 0) {
    rep.equal = true;
    return rep;
  }
  TailSource plain = x;
  Region r = builtin_legendre(eps0);
  SocfStream stream(r, std::move(x), cap);
  for (std::size_t k = 0; k < K; ++k) rep.socf_indices.push_back(stream.next().n);

  // The plain side scans every index up to the last streamed one, keeping
  // those with Theta_n < eps0 (strict, matching the region's open side).
  std::size_t limit = rep.socf_indices.back();
  for (std::size_t n = 0; rep.rcf_indices.size() < K && n <= limit; ++n) {
    while (plain.depth() < n + 1) plain.next_digit();
    if (theta_le(plain, eps0, /*strict=*/true, 64)) rep.rcf_indices.push_back(n);
  }
  rep.equal = rep.socf_indices == rep.rcf_indices;
  return rep;
}

BorelReport borel_window_check(TailSource x, std::size_t N) {
  BorelReport rep;
  const SurdValue bound(Int(0), Int(1), Int(5), Int(5));  // 1/sqrt(5)
  for (std::size_t n = 0; n < N; ++n) {
    while (x.depth() < n + 1) x.next_digit();
    rep.flags.push_back(theta_below(x, bound, /*strict=*/true, 64));
  }
  rep.every_window_ok = true;
  for (std::size_t i = 0; i + 2 < N; ++i)
    if (!rep.flags[i] && !rep.flags[i + 1] && !rep.flags[i + 2])
      rep.every_window_ok = false;
  return rep;
}

ErgodicStats ergodic_stats(const Region& r, std::size_t samples,
                           std::size_t orbit_len, std::uint64_t seed) {
  if (samples == 0 || orbit_len == 0)
    throw DomainError("ergodic_stats needs samples and orbit length >= 1");
  ErgodicStats st;
  st.orbit_length = orbit_len;
  st.reference_measure = measure(r).value;

  SplitMix64 master(seed);
  std::vector<double> freqs, slopes;
  while (freqs.size() < samples) {
    if (st.rejected > 10 * samples + 100)
      throw Error("too many orbits rejected for lack of precision");
    std::uint64_t sub = master.next();
    try {
      TailSource xs = TailSource::random(sub, std::size_t(1) << 18);
      NEPoint z{std::move(xs), BigFraction(0), 0};
      std::size_t hits = 0;
      double last_log_q = 0.0;
      for (std::size_t step = 0; step < orbit_len; ++step) {
        ne_step(z);
        if (contains(r, z)) {
          ++hits;
          last_log_q = log_int(z.x.cumulative().s);  // s = q_{n} at a hit
        }
      }
      freqs.push_back(static_cast<double>(hits) /
                      static_cast<double>(orbit_len));
      if (hits >= 2)
        slopes.push_back(last_log_q / static_cast<double>(hits - 1));
    } catch (const PrecisionExhausted&) {
      ++st.rejected;
    } catch (const UndecidableAtBudget&) {
      ++st.rejected;
    }
  }

  auto mean_err = [](const std::vector<double>& v) {
    double mean = 0.0;
    for (double d : v) mean += d;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double d : v) var += (d - mean) * (d - mean);
    if (v.size() > 1) var /= static_cast<double>(v.size() - 1);
    return std::pair<double, double>(
        mean, std::sqrt(var / static_cast<double>(v.size())));
  };
  auto [fm, fe] = mean_err(freqs);
  st.sample_count = freqs.size();
  st.empirical_frequency = fm;
  st.frequency_err = fe;
  if (!slopes.empty()) {
    auto [lm, le] = mean_err(slopes);
    st.levy_q = lm;
    st.levy_err = le;
  }
  if (fm > 0.0)
    st.entropy =
        std::numbers::pi * std::numbers::pi / (6.0 * std::log(2.0) * fm);
  return st;
}

double entropy_of(const Region& r) {
  MeasureResult m = measure(r);
  if (!(m.value > m.error))
    throw ZeroMeasureRegion("measure bracket of '" + r.label +
                            "' cannot exclude zero");
  return std::numbers::pi * std::numbers::pi / (6.0 * std::log(2.0) * m.value);
}

}  // namespace socf
