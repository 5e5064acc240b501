// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Induced (first-return) steps and the streaming contracted expansion.
//
// Digit extraction rests on two block identities.  Write B_i for the digit
// block of induced step i and [[r_i, p_i], [s_i, q_i]] for its entries.
// Then with j_i the return time of step i,
//
//     alpha_0 = (-1)^{j_1 + 1} / s_1,          beta_0 = r_1 / s_1,
//     alpha_k = (-1)^{j_{k+1} + 1} s_k / s_{k+1},
//     beta_k  = q_k + s_k r_{k+1} / s_{k+1},        k >= 1,
//
// so record k is complete as soon as step k+1 has landed.  The independent
// oracle below instead evaluates continuants of the digit windows between
// consecutive matched RCF indices; the two routes must agree digit for
// digit, which the tests check.

#include "socf/induction.hpp"

#include <utility>

#include "socf/errors.hpp"

namespace socf {

Int ne_step(NEPoint& z) {
  Int a = z.x.next_digit();
  // y' = 1/(a + y) = den / (a*den + num).  With y canonical the new pair is
  // already coprime (gcd(den, a*den + num) = gcd(den, num) = 1) and the
  // denominator positive, so adopt it without the reducing constructor.
  z.y = BigFraction::from_reduced(z.y.den(), z.y.num() + a * z.y.den());
  ++z.depth;
  return a;
}

namespace {

NESnapshot snapshot(NEPoint& z) {
  return {z.x.tail_interval(), z.y, z.depth};
}

BigFraction block_sign(std::size_t j) {
  return BigFraction(j % 2 == 1 ? 1 : -1);
}

}  // namespace

InducedStep induced_step(const Region& r, NEPoint& z, std::size_t cap,
                         std::size_t budget) {
  InducedStep out;
  out.m = IntMatrix2::identity();
  for (std::size_t step = 1; step <= cap; ++step) {
    Int a = ne_step(z);
    out.word.push_back(a);
    out.m = out.m * IntMatrix2::digit(a);
    if (contains(r, z, budget)) {
      out.j = step;
      out.z_next = snapshot(z);
      return out;
    }
  }
  throw NeverHitsWithinCap("orbit did not land in '" + r.label + "' within " +
                           std::to_string(cap) + " Gauss steps (depth " +
                           std::to_string(z.depth) + ")");
}

// ---------------------------------------------------------------------------
// SocfStream.

SocfStream::SocfStream(Region region, TailSource src, std::size_t cap,
                       std::size_t budget)
    : region_(std::move(region)),
      z_{std::move(src), BigFraction(0), 0},
      cap_(cap),
      budget_(budget) {}

SocfStream::Record SocfStream::next() {
  InducedStep step = induced_step(region_, z_, cap_, budget_);
  Record rec;
  rec.k = k_;
  rec.n = z_.depth - 1;
  if (k_ == 0) {
    // Step 1's block is the cumulative matrix at the first landing, so
    // r_1/s_1 is the matched convergent itself.
    rec.alpha = block_sign(step.j) / BigFraction(step.m.s);
    rec.beta = BigFraction(step.m.r, step.m.s);
    // Recurrence state: (P,Q) at k = -1 is (1, 0), at k = 0 it is (beta0, 1).
    p2_ = BigFraction(1);
    q2_ = BigFraction(0);
    p1_ = rec.beta;
    q1_ = BigFraction(1);
  } else {
    rec.alpha = block_sign(step.j) * BigFraction(s_prev_, step.m.s);
    rec.beta =
        BigFraction(q_prev_) + BigFraction(s_prev_) *
                                   BigFraction(step.m.r, step.m.s);
    BigFraction pk = rec.beta * p1_ + alpha_prev_ * p2_;
    BigFraction qk = rec.beta * q1_ + alpha_prev_ * q2_;
    p2_ = std::move(p1_);
    q2_ = std::move(q1_);
    p1_ = pk;
    q1_ = qk;
  }
  if (q1_.is_zero())
    throw DivergentConvergent("contracted convergent Q_" +
                              std::to_string(k_) + " vanished");
  BigFraction ratio = p1_ / q1_;
  rec.P = ratio.num();
  rec.Q = ratio.den();
  alpha_prev_ = rec.alpha;
  s_prev_ = step.m.s;
  q_prev_ = step.m.q;
  rec.step = std::move(step);
  ++k_;
  return rec;
}

// ---------------------------------------------------------------------------
// Batch wrappers.

SocfResult socf_digits(const Region& r, TailSource src, std::size_t K,
                       std::size_t cap) {
  SocfStream stream(r, std::move(src), cap);
  SocfResult out;
  SocfStream::Record rec0 = stream.next();
  out.alpha0 = rec0.alpha;
  out.beta0 = rec0.beta;
  out.steps.reserve(K + 1);
  out.steps.push_back(std::move(rec0.step));
  out.digits.reserve(K);
  for (std::size_t k = 1; k <= K; ++k) {
    SocfStream::Record rec = stream.next();
    out.digits.push_back({rec.alpha, rec.beta, k});
    out.steps.push_back(std::move(rec.step));
  }
  return out;
}

namespace {

/// Continuant of the 1-based digit window a_lo..a_hi: the q-entry of the
/// window's digit-block product (1 for the empty window).
Int window_q(const std::vector<Int>& ds, std::size_t lo, std::size_t hi) {
  IntMatrix2 m = IntMatrix2::identity();
  for (std::size_t i = lo; i <= hi && i >= 1; ++i)
    m = m * IntMatrix2::digit(ds[i - 1]);
  return m.q;
}

}  // namespace

SocfResult socf_digits_oracle(TailSource src,
                              const std::vector<std::size_t>& hit_indices,
                              std::size_t K) {
  if (hit_indices.size() < K + 1)
    throw DomainError("oracle needs at least K+1 matched indices");
  for (std::size_t i = 0; i + 1 < hit_indices.size(); ++i)
    if (hit_indices[i] >= hit_indices[i + 1])
      throw DomainError("matched indices must be strictly increasing");

  std::size_t nK = hit_indices[K];
  std::vector<Int> ds;
  ds.reserve(nK + 1);
  std::vector<NESnapshot> landings;
  landings.reserve(K + 1);
  std::size_t next_hit = 0;
  for (std::size_t depth = 1; depth <= nK + 1; ++depth) {
    ds.push_back(src.next_digit());
    if (next_hit <= K && depth == hit_indices[next_hit] + 1) {
      const IntMatrix2& m = src.cumulative();
      landings.push_back(
          {src.tail_interval(), BigFraction(m.s, m.q), depth});
      ++next_hit;
    }
  }
  if (landings.size() != K + 1)
    throw DomainError("matched indices are inconsistent with the digit flow");

  SocfResult out;
  // Leading pair from the window up to n(0).
  std::size_t n0 = hit_indices[0];
  if (n0 == 0) {
    out.alpha0 = BigFraction(1);
    out.beta0 = BigFraction(0);
  } else {
    Int qn0 = window_q(ds, 1, n0);
    Int pn0 = window_q(ds, 2, n0);
    out.alpha0 = BigFraction(n0 % 2 == 0 ? Int(1) : Int(-1), qn0);
    out.beta0 = BigFraction(pn0, qn0);
  }
  // Digit pairs from the three windows around each matched index.  With
  // n(-1) = -1, record k uses
  //   alpha_k = (-1)^{n(k)-n(k-1)+1} q[n(k-2)+2 .. n(k-1)] / q[n(k-1)+2 .. n(k)]
  //   beta_k  = q[n(k-2)+2 .. n(k)] / q[n(k-1)+2 .. n(k)].
  for (std::size_t k = 1; k <= K; ++k) {
    std::size_t nk = hit_indices[k];
    std::size_t nk1 = hit_indices[k - 1];
    // n(k-2) + 2 as a 1-based window start; n(-1) = -1 gives 1.
    std::size_t start2 = k >= 2 ? hit_indices[k - 2] + 2 : 1;
    Int denom = window_q(ds, nk1 + 2, nk);
    Int num_alpha = window_q(ds, start2, nk1);
    Int num_beta = window_q(ds, start2, nk);
    BigFraction alpha =
        block_sign(nk - nk1) * BigFraction(num_alpha, denom);
    out.digits.push_back({alpha, BigFraction(num_beta, denom), k});
  }
  // Induced steps: step k+1 consumes 1-based digit positions
  // n(k-1)+2 .. n(k)+1.
  std::size_t prev_depth = 0;
  for (std::size_t k = 0; k <= K; ++k) {
    std::size_t end = hit_indices[k] + 1;
    InducedStep step;
    step.j = end - prev_depth;
    step.m = IntMatrix2::identity();
    for (std::size_t pos = prev_depth + 1; pos <= end; ++pos) {
      step.word.push_back(ds[pos - 1]);
      step.m = step.m * IntMatrix2::digit(ds[pos - 1]);
    }
    step.z_next = landings[k];
    out.steps.push_back(std::move(step));
    prev_depth = end;
  }
  return out;
}

std::vector<GcfConvergent> gcf_convergents(
    const BigFraction& beta0, const BigFraction& alpha0,
    const std::vector<GcfDigit>& digits, std::size_t K,
    const std::vector<std::size_t>& hit_indices) {
  if (digits.size() < K)
    throw DomainError("need K digit records to emit K+1 convergents");
  std::vector<GcfConvergent> out;
  out.reserve(K + 1);
  BigFraction p2(1), q2(0), p1 = beta0, q1(1);
  BigFraction alpha_prev = alpha0;
  for (std::size_t k = 0; k <= K; ++k) {
    if (k >= 1) {
      const GcfDigit& d = digits[k - 1];
      BigFraction pk = d.beta * p1 + alpha_prev * p2;
      BigFraction qk = d.beta * q1 + alpha_prev * q2;
      p2 = std::move(p1);
      q2 = std::move(q1);
      p1 = pk;
      q1 = qk;
      alpha_prev = d.alpha;
    }
    if (q1.is_zero())
      throw DivergentConvergent("contracted convergent Q_" +
                                std::to_string(k) + " vanished");
    BigFraction ratio = p1 / q1;
    out.push_back({ratio.num(), ratio.den(), k,
                   k < hit_indices.size() ? hit_indices[k]
                                          : static_cast<std::size_t>(-1)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cell labels of the two canonical windows.

std::string jump_cell_label(const InducedStep& step) {
  return "D" + std::to_string(step.j - 1) + "(" + step.word.back().get_str() +
         ")";
}

std::string hurwitz_cell_label(const InducedStep& step) {
  const std::string a = step.word.back().get_str();
  switch (step.j) {
    case 1:
      return "D1(" + a + ")";
    case 2:
      if (step.word[0] == 1) return "D21(" + a + ")";
      if (step.word[0] == 2) return "D22(" + a + ")";
      break;
    case 3:
      if (step.word[0] == 1 && step.word[1] == 1) return "D3(" + a + ")";
      break;
    default:
      break;
  }
  throw Error("induced step is not a Hurwitz first-return cell (j = " +
              std::to_string(step.j) + ")");
}

}  // namespace socf
