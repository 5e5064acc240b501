// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "socf/rng.hpp"
#include "socf/surd.hpp"
#include "test_util.hpp"

using namespace socf;
using namespace socf_test;

TEST_CASE("canonical form folds squares and embeds rationals") {
  CHECK(SurdValue::sqrt_int(49).is_rational());
  CHECK(SurdValue::sqrt_int(49).to_fraction() == BigFraction(7));
  SurdValue s8 = SurdValue::sqrt_int(8);  // 2*sqrt(2)
  CHECK(s8.radicand() == 2);
  CHECK(s8.b() == 2);
  CHECK(SurdValue(2, 2, 2, 8) == SurdValue(1, 2, 1, 2));  // (2+2*sqrt(8))/2
  CHECK(SurdValue(BigFraction(3, 4)).is_rational());
  CHECK_THROWS_AS(SurdValue(1, 1, 0, 2), DomainError);   // zero denominator
  CHECK_THROWS_AS(SurdValue(1, 1, 1, -2), DomainError);  // negative radicand
}

TEST_CASE("golden ratio algebra") {
  SurdValue g = golden_ratio();
  CHECK(g.sign() == 1);
  CHECK(g.to_double() == doctest::Approx(0.6180339887498949).epsilon(1e-15));
  CHECK(g * g == SurdValue(1) - g);        // x^2 = 1 - x
  CHECK(g.reciprocal() == g + SurdValue(1));  // 1/x = x + 1
  CHECK(g.floor() == 0);
  CHECK((g + SurdValue(1)).floor() == 1);
  CHECK(SurdValue(0, -1, 1, 2).floor() == -2);  // floor(-sqrt(2))
}

TEST_CASE("conjugate identities") {
  SurdValue r = sqrt2_minus_1();
  CHECK(r * (r + SurdValue(2)) == SurdValue(1));  // (s2-1)(s2+1) = 1
  CHECK(r.reciprocal() == r + SurdValue(2));
  CHECK_THROWS_AS(SurdValue(0, 1, 1, 2) + SurdValue(0, 1, 1, 3),
                  MixedRadicands);
  CHECK_THROWS_AS(SurdValue(0).reciprocal(), DomainError);
}

TEST_CASE("cross-field comparison agrees with floating point") {
  // compare_any decides sign exactly across different radicands; where the
  // double evaluations are clearly separated the exact order must agree.
  SplitMix64 rng(777);
  const long ds[] = {0, 2, 3, 5, 6, 7, 10};
  int checked = 0;
  for (int i = 0; i < 2000 && checked < 500; ++i) {
    auto draw = [&] {
      Int a = static_cast<long>(rng.next() % 41) - 20;
      Int b = static_cast<long>(rng.next() % 21) - 10;
      Int c = static_cast<long>(rng.next() % 19) + 1;
      Int d = ds[rng.next() % 7];
      if (d == 0) b = 0;
      return SurdValue(a, b, c, d);
    };
    SurdValue u = draw(), v = draw();
    double du = u.to_double(), dv = v.to_double();
    if (std::fabs(du - dv) < 1e-9) continue;
    ++checked;
    CHECK(compare_any(u, v) == (du < dv ? -1 : 1));
  }
  CHECK(checked == 500);
  CHECK(compare_any(SurdValue(0, 1, 1, 2), SurdValue(BigFraction(3, 2))) < 0);
  CHECK(compare_any(golden_ratio(), golden_ratio()) == 0);
  CHECK(compare_any(inv_sqrt5(), SurdValue(BigFraction(4, 9))) > 0);
}

TEST_CASE("expression parsing") {
  CHECK(parse_surd("sqrt(2)-1") == sqrt2_minus_1());
  CHECK(parse_surd("(sqrt(5)-1)/2") == golden_ratio());
  CHECK(parse_surd("1/sqrt(5)") == inv_sqrt5());
  CHECK(parse_surd("sqrt(5)/5") == inv_sqrt5());
  CHECK(parse_surd("2/5") == SurdValue(BigFraction(2, 5)));
  CHECK(parse_surd(" 3 - sqrt(2) ") == SurdValue(3, -1, 1, 2));
  CHECK(parse_surd("1+2*3") == SurdValue(7));
  CHECK(parse_surd("(1+2)*3") == SurdValue(9));
  CHECK_THROWS_AS(parse_surd("sqrt("), ParseError);
  CHECK_THROWS_AS(parse_surd(""), ParseError);
  CHECK_THROWS_AS(parse_surd("frob"), ParseError);
  CHECK_THROWS_AS(parse_surd("sqrt(0-4)"), Error);  // negative radicand
}

TEST_CASE("enclosures bracket the value and shrink on demand") {
  SurdValue g = golden_ratio();
  RatInterval e = g.enclosure(128);
  CHECK(compare_any(SurdValue(e.lo()), g) < 0);
  CHECK(compare_any(SurdValue(e.hi()), g) > 0);
  CHECK(e.width() <= BigFraction(1, pow2(120)));
  RatInterval e2 = g.enclosure(256);
  CHECK(e2.width() < e.width());
  // Exact rationals have no enclosure; they are compared directly.
  CHECK_THROWS_AS(SurdValue(BigFraction(1, 3)).enclosure(64), DomainError);
}
