// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Verification and statistics layered on the digit stream:
//
//  * verify_superoptimal checks the two defining clauses of a
//    quality-threshold expansion record by record: every emitted fraction
//    P_k/Q_k approximates at quality Theta(x, P_k/Q_k) = Q_k^2 |x - P_k/Q_k|
//    <= epsilon (decided exactly), and every P_k/Q_k coincides with a plain
//    continued-fraction convergent p_{n(k)}/q_{n(k)} of the same number, so
//    the generalized fraction contracts onto x along a subsequence of the
//    plain convergents.
//
//  * legendre_exactness compares, for a threshold eps0 <= 1/2, the indices
//    selected by the induced return map against the plain convergents that
//    satisfy Theta_n < eps0; Legendre's criterion makes the two lists equal.
//
//  * borel_window_check evaluates the classical three-in-a-row bound: among
//    any three consecutive convergents at least one has Theta_n < 1/sqrt(5).
//
//  * ergodic_stats runs seeded random orbits and compares hit frequencies
//    with the invariant measure, the growth slope log q_{n(k)} / k with
//    Levy's constant divided by the measure, and reports the empirical
//    entropy of the induced system via Abramov's formula.
//
//  * entropy_of evaluates pi^2 / (6 log 2) / mu(region) in nats.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "socf/fraction.hpp"
#include "socf/region.hpp"
#include "socf/surd.hpp"
#include "socf/tail_source.hpp"

namespace socf {

/// Outcome of the record-by-record verification of one expansion.
struct SuperoptimalReport {
  SurdValue epsilon;       // verified quality threshold
  double C = 0.0;          // stated asymptotic slope of n(k) ~ C k
  std::size_t K = 0;       // records verified
  double theta_max = 0.0;  // largest Theta upper bound seen
  std::vector<double> speed_ratios;  // n(k)/k for k = 1..K-1
  bool theta_ok = false;   // clause (i): Theta <= epsilon at every record
  bool seidel_ok = false;  // clause (ii): every P_k/Q_k is a plain convergent
  std::string verdict;     // human-readable summary
};

/// Stream K records of x over r and verify both clauses exactly.
/// The comparison side re-expands x from an independent cursor, so the
/// agreement is between two independently computed integer sequences.
/// The threshold may be any quadratic surd (1/sqrt(5) for the Hurwitz
/// window) or a plain rational.
SuperoptimalReport verify_superoptimal(TailSource x, const Region& r,
                                       const SurdValue& epsilon, double C,
                                       std::size_t K, std::size_t cap = 10000);

inline SuperoptimalReport verify_superoptimal(TailSource x, const Region& r,
                                              const BigFraction& epsilon,
                                              double C, std::size_t K,
                                              std::size_t cap = 10000) {
  return verify_superoptimal(std::move(x), r, SurdValue(epsilon), C, K, cap);
}

/// Index lists of the filter-equality check for a threshold eps0.
struct LegendreReport {
  std::vector<std::size_t> socf_indices;  // n(k) from the induced stream
  std::vector<std::size_t> rcf_indices;   // n with Theta_n < eps0, in order
  bool equal = false;
};

/// First K indices from both sides; `equal` when the lists coincide.
LegendreReport legendre_exactness(TailSource x, const BigFraction& eps0,
                                  std::size_t K, std::size_t cap = 10000);

/// Flags of the classical window bound over the first N convergents.
struct BorelReport {
  std::vector<bool> flags;       // Theta_n < 1/sqrt(5) for n = 0..N-1
  bool every_window_ok = false;  // every 3 consecutive flags contain a true
};

BorelReport borel_window_check(TailSource x, std::size_t N);

/// Sample statistics of seeded random orbits against a region.
struct ErgodicStats {
  std::size_t sample_count = 0;
  std::size_t orbit_length = 0;
  std::size_t rejected = 0;            // orbits redrawn for lack of precision
  double empirical_frequency = 0.0;    // mean hit fraction
  double frequency_err = 0.0;          // standard error over samples
  double reference_measure = 0.0;      // mu(region) from measure()
  double levy_q = 0.0;                 // mean of log q_{n(K)} / K per orbit
  double levy_err = 0.0;               // standard error of the slope
  double entropy = 0.0;  // pi^2/(6 log 2)/frequency, Abramov's formula
};

/// Run `samples` independent orbits of `orbit_len` plain digit steps each,
/// drawn from the seeded bit generator; orbits that exhaust their random
/// precision are rejected and redrawn (counted in `rejected`).
ErgodicStats ergodic_stats(const Region& r, std::size_t samples,
                           std::size_t orbit_len, std::uint64_t seed);

/// Entropy (nats) of the system induced on r: pi^2/(6 log 2)/mu(r).
/// Throws ZeroMeasureRegion when the measure bracket cannot exclude zero.
double entropy_of(const Region& r);

}  // namespace socf
