// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstddef>
#include <vector>

#include "doctest.h"
#include "socf/analytics.hpp"
#include "socf/measure.hpp"
#include "test_util.hpp"

using namespace socf;
using namespace socf_test;

TEST_CASE("record verification passes at the exact thresholds") {
  SuperoptimalReport h =
      verify_superoptimal(TailSource::from_decimal(pi_minus_3()),
                          builtin_hurwitz(), inv_sqrt5(), 1.55, 12);
  CHECK(h.theta_ok);
  CHECK(h.seidel_ok);
  CHECK(h.K == 12);
  CHECK(h.theta_max < 0.4473);  // everything beats 1/sqrt(5)
  CHECK(h.verdict.substr(0, 4) == "pass");
  SuperoptimalReport h10 =
      verify_superoptimal(TailSource::from_decimal(pi_minus_3()),
                          builtin_hurwitz(), inv_sqrt5(), 1.55, 10);
  CHECK(h10.theta_max == doctest::Approx(0.3768639201231584).epsilon(1e-9));
  REQUIRE(h.speed_ratios.size() == 11);
  CHECK(h.speed_ratios[0] == 1.0);            // n(1)/1
  CHECK(h.speed_ratios.back() ==
        doctest::Approx(18.0 / 11.0).epsilon(1e-12));  // n(11)/11

  // Rational threshold through the convenience overload.
  SuperoptimalReport j =
      verify_superoptimal(TailSource::from_decimal(pi_minus_3()),
                          builtin_jump(2), BigFraction(1, 2), 1.71, 12);
  CHECK(j.theta_ok);
  CHECK(j.seidel_ok);
}

TEST_CASE("record verification fails honestly on an impossible threshold") {
  SuperoptimalReport r =
      verify_superoptimal(TailSource::from_decimal(pi_minus_3()),
                          builtin_hurwitz(), BigFraction(1, 100), 1.55, 10);
  CHECK(!r.theta_ok);
  CHECK(r.verdict.substr(0, 4) == "FAIL");
}

TEST_CASE("induced landings equal the filtered plain subsequence") {
  struct Case {
    BigFraction eps0;
    std::vector<std::size_t> want;
  };
  const Case cases[] = {
      {BigFraction(1, 2), {0, 1, 3, 5, 7, 9, 11, 12, 13, 14}},
      {BigFraction(2, 5), {0, 1, 3, 5, 7, 9, 11, 12, 15, 16}},
      {BigFraction(1, 4), {0, 1, 3, 9, 11, 20, 24, 26, 28, 30}},
  };
  for (const Case& c : cases) {
    CAPTURE(c.eps0.to_string());
    LegendreReport rep = legendre_exactness(
        TailSource::from_decimal(pi_minus_3()), c.eps0, 10);
    CHECK(rep.equal);
    CHECK(rep.socf_indices == c.want);
    CHECK(rep.rcf_indices == c.want);
  }
}

TEST_CASE("window flags: golden ratio alternates, pi is irregular but legal") {
  BorelReport g = borel_window_check(TailSource::from_surd(golden_ratio()), 50);
  REQUIRE(g.flags.size() == 50);
  for (std::size_t n = 0; n < 50; ++n) CHECK(g.flags[n] == (n % 2 == 1));
  CHECK(g.every_window_ok);

  BorelReport p = borel_window_check(TailSource::from_decimal(pi_minus_3()), 50);
  REQUIRE(p.flags.size() == 50);
  std::size_t hits = 0;
  for (bool f : p.flags) hits += f ? 1 : 0;
  CHECK(hits == 34);
  CHECK(p.every_window_ok);
}

TEST_CASE("seeded orbit statistics approach the invariant measure") {
  Region r = builtin_jump(2);
  ErgodicStats st = ergodic_stats(r, 8, 1500, 7);
  CHECK(st.sample_count == 8);
  CHECK(st.orbit_length == 1500);
  CHECK(st.rejected == 0);
  CHECK(st.reference_measure ==
        doctest::Approx(0.5849625007211562).epsilon(1e-9));
  CHECK(std::fabs(st.empirical_frequency - st.reference_measure) < 0.03);
  CHECK(st.frequency_err < 0.02);
  CHECK(st.levy_q == doctest::Approx(2.0284532922243628).epsilon(0.1));
  // Entropy is tied to the frequency by the time-change formula.
  const double pi2_over_6log2 = 2.3731382208312509;
  CHECK(st.entropy * st.empirical_frequency ==
        doctest::Approx(pi2_over_6log2).epsilon(1e-12));

  // Identical seeds reproduce identical statistics.
  ErgodicStats st2 = ergodic_stats(r, 8, 1500, 7);
  CHECK(st2.empirical_frequency == st.empirical_frequency);
  CHECK(st2.levy_q == st.levy_q);

  // More samples shrink the standard error (deterministic under the seed).
  ErgodicStats wide = ergodic_stats(r, 32, 1500, 7);
  CHECK(wide.frequency_err < st.frequency_err);
}

TEST_CASE("entropy values follow from the window measures") {
  CHECK(entropy_of(omega()) ==
        doctest::Approx(2.3731382208312509).epsilon(1e-9));
  CHECK(entropy_of(builtin_jump(2)) ==
        doctest::Approx(4.0569065844487256).epsilon(1e-9));
  CHECK(entropy_of(builtin_hurwitz()) ==
        doctest::Approx(3.6781843919778176).epsilon(1e-9));
  Region empty;
  CHECK_THROWS_AS(entropy_of(empty), ZeroMeasureRegion);
}
