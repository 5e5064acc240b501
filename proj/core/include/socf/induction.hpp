// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Induced transformations and the contracted expansions they generate.
//
// Given a window R of the natural-extension domain and an orbit started at
// (x, 0), the first-return (induced) map advances the orbit until it lands
// in R.  Each landing matches one RCF convergent p_n/q_n of x; writing
// n(0) < n(1) < ... for the matched indices, the contraction of the RCF at
// those indices is a generalized continued fraction
//
//     x = beta_0 + alpha_0 / (beta_1 + alpha_1 / (beta_2 + ...))
//
// whose convergents P_k/Q_k reproduce exactly the matched RCF convergents:
// P_k/Q_k = p_{n(k)}/q_{n(k)}.  The digit pair (alpha_k, beta_k) is read off
// the digit-block matrices of consecutive induced steps, so the expansion
// streams: one induced step in, one digit out.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "socf/fraction.hpp"
#include "socf/interval.hpp"
#include "socf/matrix.hpp"
#include "socf/region.hpp"
#include "socf/tail_source.hpp"

namespace socf {

/// One Gauss step on a natural-extension point: consume the next digit a,
/// push y to 1/(a + y).  Returns a.
Int ne_step(NEPoint& z);

/// Value snapshot of a natural-extension point (no live cursor).
struct NESnapshot {
  RatInterval x{BigFraction(0), BigFraction(1)};
  BigFraction y;
  std::size_t depth = 0;
};

/// One step of the induced transformation: the return time j (Gauss steps
/// consumed), the digit word and its block matrix, and the landed point.
struct InducedStep {
  std::size_t j;
  std::vector<Int> word;
  IntMatrix2 m;
  NESnapshot z_next;
};

/// Advance z to its next landing in r.  Throws NeverHitsWithinCap if the
/// orbit fails to land within `cap` Gauss steps, and propagates
/// UndecidableAtBudget from boundary-grazing membership tests.
InducedStep induced_step(const Region& r, NEPoint& z, std::size_t cap = 10000,
                         std::size_t budget = 64);

/// One digit of a contracted expansion.  Record k = 0 carries the leading
/// pair (alpha_0, beta_0); records k >= 1 carry (alpha_k, beta_k).
struct GcfDigit {
  BigFraction alpha;
  BigFraction beta;
  std::size_t k;
};

/// One convergent P_k/Q_k of a contracted expansion, with the RCF index
/// n = n(k) it matches when that is known (SIZE_MAX otherwise).
struct GcfConvergent {
  Int P;
  Int Q;
  std::size_t k;
  std::size_t n;
};

/// Streaming contracted expansion of the source against a window.
///
/// next() performs one induced step and emits one record; record k is
/// complete once step k+1 has landed.  The convergent P_k/Q_k is computed
/// through the three-term recurrence
///     P_k = beta_k P_{k-1} + alpha_{k-1} P_{k-2}
/// over exact fractions and reduced once per record; the landing identity
/// P_k/Q_k = p_{n(k)}/q_{n(k)} is checked by tests, not assumed here.
class SocfStream {
 public:
  SocfStream(Region region, TailSource src, std::size_t cap = 10000,
             std::size_t budget = 64);

  struct Record {
    std::size_t k;
    BigFraction alpha;  // alpha_k (alpha_0 for k = 0)
    BigFraction beta;   // beta_k  (beta_0  for k = 0)
    InducedStep step;   // the completing induced step (index k+1)
    std::size_t n;      // matched RCF index n(k)
    Int P, Q;           // convergent P_k/Q_k, reduced
  };

  /// Emit record k = 0, 1, 2, ... in order.
  Record next();

  /// The live orbit point, currently at the last landing.
  NEPoint& point() { return z_; }
  const NEPoint& point() const { return z_; }

  /// Theta(x, P_k/Q_k) for the last emitted record: the landing identity
  /// makes it available as theta of the source at its current depth.
  ThetaValue theta_now() { return theta(z_.x); }

 private:
  Region region_;
  NEPoint z_;
  std::size_t cap_;
  std::size_t budget_;
  std::size_t k_ = 0;
  Int s_prev_, q_prev_;      // block entries of the previous induced step
  BigFraction alpha_prev_;   // alpha_{k-1} for the recurrence
  BigFraction p2_, q2_, p1_, q1_;  // unreduced (P,Q) at k-2 and k-1
};

/// Result of a batch expansion: the leading pair, digits k = 1..K, and the
/// K+1 induced steps that produced them.
struct SocfResult {
  BigFraction beta0;
  BigFraction alpha0;
  std::vector<GcfDigit> digits;
  std::vector<InducedStep> steps;
};

/// Expand K digits of the contracted expansion of src against r.
SocfResult socf_digits(const Region& r, TailSource src, std::size_t K,
                       std::size_t cap = 10000);

/// Reference expansion computed by an independent route: the digit pairs
/// are read directly off continuant blocks of the RCF digit windows between
/// consecutive matched indices.  hit_indices must hold n(0) < n(1) < ... and
/// at least K+1 entries.
SocfResult socf_digits_oracle(TailSource src,
                              const std::vector<std::size_t>& hit_indices,
                              std::size_t K);

/// Convergents P_0/Q_0 .. P_K/Q_K of a contracted expansion via the
/// three-term recurrence.  Throws DivergentConvergent if some Q_k vanishes.
/// If hit_indices is non-empty it supplies the n(k) column.
std::vector<GcfConvergent> gcf_convergents(
    const BigFraction& beta0, const BigFraction& alpha0,
    const std::vector<GcfDigit>& digits, std::size_t K,
    const std::vector<std::size_t>& hit_indices = {});

/// Cell label of an induced step for the jump window: "D{j-1}(a)" names the
/// (j-1)-step approach followed by the landing digit a.
std::string jump_cell_label(const InducedStep& step);

/// Cell label of an induced step for the Hurwitz window: one of D1, D21,
/// D22, D3 with the free digit, reconstructed from (j, block).
std::string hurwitz_cell_label(const InducedStep& step);

}  // namespace socf
