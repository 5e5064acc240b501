// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "doctest.h"
#include "socf/tail_source.hpp"
#include "test_util.hpp"

using namespace socf;
using namespace socf_test;

TEST_CASE("periodic expansions of quadratic surds") {
  TailSource s2 = TailSource::from_surd(sqrt2_minus_1());
  for (int i = 0; i < 30; ++i) CHECK(s2.next_digit() == 2);

  TailSource g = TailSource::from_surd(golden_ratio());
  for (int i = 0; i < 30; ++i) CHECK(g.next_digit() == 1);

  TailSource s3 = TailSource::from_surd(sqrt3_minus_1());
  for (int i = 1; i <= 20; ++i) CHECK(s3.next_digit() == (i % 2 == 1 ? 1 : 2));

  CHECK_THROWS_AS(TailSource::from_surd(SurdValue(BigFraction(2, 5))),
                  RationalInput);
  CHECK_THROWS_AS(TailSource::from_surd(SurdValue(3, -1, 1, 2)),
                  DomainError);  // 3 - sqrt(2) is outside (0, 1)
}

TEST_CASE("cumulative digit matrices carry both convergents, det (-1)^n") {
  TailSource src = TailSource::from_decimal(pi_minus_3());
  CHECK(src.cumulative() == IntMatrix2::identity());
  for (int n = 1; n <= 40; ++n) {
    src.next_digit();
    IntMatrix2 m = src.cumulative();
    CHECK(m.det() == (n % 2 == 0 ? 1 : -1));
    ConvergentPair c = src.convergent();
    ConvergentPair p = src.previous_convergent();
    CHECK(c.p == m.p);
    CHECK(c.q == m.q);
    CHECK(p.p == m.r);
    CHECK(p.q == m.s);
    CHECK(c.index == static_cast<std::size_t>(n));
  }
}

TEST_CASE("denominators grow at least like Fibonacci numbers") {
  TailSource src = TailSource::from_decimal(pi_minus_3());
  Int f_prev = 1, f_cur = 1;  // F_1, F_2
  Int q_prev = 1;
  for (int n = 1; n <= 40; ++n) {
    src.next_digit();
    Int q = src.convergent().q;
    CHECK(q >= f_cur);
    if (n >= 2) CHECK(q > q_prev);
    q_prev = q;
    Int f_next = f_prev + f_cur;
    f_prev = f_cur;
    f_cur = f_next;
  }
}

TEST_CASE("convergents alternate around x and obey the product bound") {
  TailSource probe = TailSource::from_decimal(pi_minus_3());
  RatInterval x = probe.tail_interval();  // enclosure of x itself at depth 0

  TailSource src = TailSource::from_decimal(pi_minus_3());
  std::vector<ConvergentPair> cs = convergents(src, 17);
  for (int n = 1; n <= 16; ++n) {
    BigFraction c(cs[n - 1].p, cs[n - 1].q);
    if (n % 2 == 1) {
      CHECK(x.hi() < c);  // odd-index convergents lie above x
    } else {
      CHECK(x.lo() > c);  // even-index ones below
    }
    // |x - p_n/q_n| < 1/(q_n q_{n+1})
    BigFraction bound(Int(1), cs[n - 1].q * cs[n].q);
    CHECK(x.hi() - c < bound);
    CHECK(c - x.lo() < bound);
    // x lies strictly between consecutive convergents.
    BigFraction next(cs[n].p, cs[n].q);
    CHECK(x.lo() > (c < next ? c : next));
    CHECK(x.hi() < (c < next ? next : c));
  }
}

TEST_CASE("theta routes agree: exact surd, formula, and enclosure") {
  SurdValue x = sqrt2_minus_1();
  TailSource exact = TailSource::from_surd(x);
  std::vector<Int> prefix;
  for (int i = 0; i < 12; ++i) prefix.push_back(2);
  TailSource digits = TailSource::from_digits(prefix);

  for (int n = 1; n <= 10; ++n) {
    exact.next_digit();
    digits.next_digit();
    // After n digits the certified quality bound is the one of the previous
    // convergent: theta at depth n reports Theta(x, p_{n-1}/q_{n-1}).
    ConvergentPair c = exact.previous_convergent();

    // Independent exact route: theta_{n-1} = |q (q x - p)|.
    SurdValue theta_direct =
        (SurdValue(BigFraction(c.q)) * x - SurdValue(BigFraction(c.p))) *
        SurdValue(BigFraction(c.q));
    if (theta_direct.sign() < 0) theta_direct = -theta_direct;

    ThetaValue ts = theta(exact);
    REQUIRE(ts.exact.has_value());
    CHECK(compare_any(*ts.exact, theta_direct) == 0);
    CHECK(compare_any(SurdValue(ts.lo), theta_direct) < 0);
    CHECK(compare_any(SurdValue(ts.hi), theta_direct) > 0);

    // The cylinder-enclosure route on the same digit prefix must bracket
    // the exact value as well.
    ThetaValue td = theta(digits);
    CHECK(compare_any(SurdValue(td.lo), theta_direct) < 0);
    CHECK(compare_any(SurdValue(td.hi), theta_direct) > 0);
  }
}

TEST_CASE("theta width control and tail enclosures") {
  TailSource src = TailSource::from_decimal(pi_minus_3());
  for (int i = 0; i < 5; ++i) src.next_digit();
  BigFraction w(Int(1), pow10(20));
  ThetaValue t = theta(src, w);
  CHECK(t.hi - t.lo <= w);
  CHECK(t.lo > BigFraction(0));

  TailSource src2 = TailSource::from_decimal(pi_minus_3());
  RatInterval e = tail_enclosure(src2, 3, w);
  CHECK(e.width() <= w);
  // The tail after [7, 15, 1] starts with digit 292: t in (1/293, 1/292).
  CHECK(e.lo() > BigFraction(1, 293));
  CHECK(e.hi() < BigFraction(1, 292));
}

TEST_CASE("decimal truncation semantics") {
  // "0.25" means x in (0.25, 0.26): the first two digits are decidable.
  TailSource t = TailSource::from_decimal("0.25");
  CHECK(t.next_digit() == 3);
  CHECK(t.next_digit() == 1);

  // A too-short decimal runs out of certainty, never guesses.  Here 1/x
  // ranges over (6.99, 7.05), which straddles 7, so not even the first
  // digit is decidable.
  TailSource s = TailSource::from_decimal("0.142");
  CHECK_THROWS_AS(s.next_digit(), PrecisionExhausted);

  // One more decimal digit pins the first entry but not the second.
  TailSource s2 = TailSource::from_decimal("0.1419");
  CHECK(s2.next_digit() == 7);
  CHECK_THROWS_AS(s2.next_digit(), PrecisionExhausted);

  // Guard digits shorten the certified prefix: trimming two guard digits
  // leaves the same effective truncation as the short literal.
  TailSource a = TailSource::from_decimal("0.4142135", 2);
  TailSource b = TailSource::from_decimal("0.41421");
  for (int i = 0; i < 3; ++i) {
    Int da = a.next_digit();
    CHECK(da == b.next_digit());
    CHECK(da == 2);
  }

  // Digits of a longer truncation extend those of a shorter one.
  TailSource longer = TailSource::from_decimal(pi_minus_3());
  TailSource shorter = TailSource::from_decimal(pi_minus_3().substr(0, 62));
  for (int i = 0; i < 20; ++i) CHECK(longer.next_digit() == shorter.next_digit());

  CHECK_THROWS_AS(TailSource::from_decimal("1.25"), ParseError);
  CHECK_THROWS_AS(TailSource::from_decimal("0.12x"), ParseError);
  CHECK_THROWS_AS(TailSource::from_decimal("0.123", 3), DomainError);
}

TEST_CASE("explicit digit lists replay exactly and then stop") {
  TailSource src = TailSource::from_digits({Int(1), Int(2), Int(3)});
  CHECK(src.next_digit() == 1);
  CHECK(src.next_digit() == 2);
  CHECK(src.next_digit() == 3);
  CHECK_THROWS_AS(src.next_digit(), Error);  // no certainty past the list
  CHECK(src.digits().size() == 3);
  CHECK_THROWS_AS(TailSource::from_digits({Int(0)}), DomainError);
}

TEST_CASE("random backend is deterministic per seed") {
  TailSource a = TailSource::random(7);
  TailSource b = TailSource::random(7);
  TailSource c = TailSource::random(8);
  bool differs = false;
  for (int i = 0; i < 60; ++i) {
    Int da = a.next_digit();
    CHECK(da == b.next_digit());
    if (da != c.next_digit()) differs = true;
  }
  CHECK(differs);
  CHECK(a.digits().size() == 60);
  CHECK_THROWS_AS(TailSource::random(1, 100), DomainError);  // < 256 bits
}

TEST_CASE("refinement tightens the enclosure without changing digits") {
  TailSource src = TailSource::random(42);
  for (int i = 0; i < 10; ++i) src.next_digit();
  std::vector<Int> before = src.digits();
  RatInterval e1 = src.tail_interval();
  REQUIRE(src.refine());
  RatInterval e2 = src.tail_interval();
  CHECK(e2.width() < e1.width());
  CHECK(e2.lo() >= e1.lo());
  CHECK(e2.hi() <= e1.hi());
  for (int i = 0; i < 10; ++i) src.next_digit();
  std::vector<Int> after = src.digits();
  for (std::size_t i = 0; i < before.size(); ++i) CHECK(after[i] == before[i]);
}
