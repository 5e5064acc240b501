// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "socf/measure.hpp"
#include "socf/region.hpp"
#include "socf/rng.hpp"

using namespace socf;

namespace {

// Gauss-measure of a rectangle [x1,x2] x [y1,y2], evaluated directly:
// log((1+x2*y2)(1+x1*y1) / ((1+x2*y1)(1+x1*y2))) / log 2.
double rect_reference(double x1, double x2, double y1, double y2) {
  return std::log1p((x2 - x1) * (y2 - y1) / ((1 + x2 * y1) * (1 + x1 * y2))) /
         std::log(2.0);
}

Region rect_region(const BigFraction& x1, const BigFraction& x2,
                   const BigFraction& y1, const BigFraction& y2) {
  Cell cell;
  cell.emplace_back(SurdValue(-x1), SurdValue(1), SurdValue(0), SurdValue(0),
                    Rel::GE);  // x >= x1
  cell.emplace_back(SurdValue(x2), SurdValue(-1), SurdValue(0), SurdValue(0),
                    Rel::GE);  // x <= x2
  cell.emplace_back(SurdValue(-y1), SurdValue(0), SurdValue(1), SurdValue(0),
                    Rel::GE);  // y >= y1
  cell.emplace_back(SurdValue(y2), SurdValue(0), SurdValue(-1), SurdValue(0),
                    Rel::GE);  // y <= y2
  Region r;
  r.cells.push_back(std::move(cell));
  r.label = "rect";
  return r;
}

}  // namespace

TEST_CASE("window measures match their closed forms") {
  CHECK(measure(omega()).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(measure(builtin_jump(2)).value ==
        doctest::Approx(0.5849625007211562).epsilon(1e-12));
  CHECK(measure(builtin_jump(3)).value ==
        doctest::Approx(0.4150374992788438).epsilon(1e-12));
  CHECK(measure(builtin_legendre(BigFraction(2, 5))).value ==
        doctest::Approx(0.5770780163555854).epsilon(1e-12));
  CHECK(measure(builtin_legendre(BigFraction(1, 2))).value ==
        doctest::Approx(0.7213475204444817).epsilon(1e-12));
  CHECK(measure(builtin_legendre(BigFraction(1, 4))).value ==
        doctest::Approx(0.3606737602222409).epsilon(1e-12));
  CHECK(measure(builtin_hurwitz()).value ==
        doctest::Approx(0.6451928364459122).epsilon(1e-12));
  CHECK(measure(builtin_jump(2)).error <= 1e-9);
  CHECK(!measure(builtin_hurwitz()).method.empty());
}

TEST_CASE("measure is additive under the region algebra") {
  Region a = builtin_jump(2);
  Region b = builtin_legendre(BigFraction(2, 5));
  double ma = measure(a).value;
  double mb = measure(b).value;
  double mc = measure(complement(a)).value;
  double mi = measure(intersect(a, b)).value;
  double mu = measure(region_union(a, b)).value;
  CHECK(ma + mc == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(mu + mi == doctest::Approx(ma + mb).epsilon(1e-9));

  Region empty;  // no cells: the empty set
  CHECK(measure(empty).value == 0.0);
}

TEST_CASE("dyadic bracketing encloses the closed forms") {
  for (const Region& r : {builtin_jump(2), builtin_hurwitz()}) {
    double exact = measure(r).value;
    DarbouxResult d = measure_darboux(r, 1e-4);
    CHECK(d.lower <= exact);
    CHECK(d.upper >= exact);
    CHECK(d.upper - d.lower <= 1e-4);
  }
}

TEST_CASE("random rectangles: closed form vs direct formula vs bracketing") {
  SplitMix64 rng(2026);
  for (int i = 0; i < 20; ++i) {
    long a = static_cast<long>(rng.next() % 60);
    long b = a + 1 + static_cast<long>(rng.next() % (63 - a));
    long c = static_cast<long>(rng.next() % 60);
    long d = c + 1 + static_cast<long>(rng.next() % (63 - c));
    BigFraction x1(a, 64), x2(b, 64), y1(c, 64), y2(d, 64);
    Region r = rect_region(x1, x2, y1, y2);

    double ref = rect_reference(x1.to_double(), x2.to_double(),
                                y1.to_double(), y2.to_double());
    MeasureResult m = measure(r);
    CHECK(m.value == doctest::Approx(ref).epsilon(1e-9));

    DarbouxResult db = measure_darboux(r, 1e-4);
    CHECK(db.lower <= ref + 1e-12);
    CHECK(db.upper >= ref - 1e-12);
    CHECK(db.upper - db.lower <= 1e-4);
  }
}
