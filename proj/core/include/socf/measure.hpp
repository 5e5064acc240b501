// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Invariant measure of regions: mu(E) = (1/log 2) * integral over E of
// dx dy / (1 + x y)^2 on Omega = [0,1) x [0,1], the normalized density
// preserved by the natural extension of the Gauss map.
//
// Three evaluation routes, tried per cell from most to least exact:
//   1. Axis-aligned rectangles have the closed form
//        mu([x1,x2]x[y1,y2]) =
//          log( (1+x2 y2)(1+x1 y1) / ((1+x2 y1)(1+x1 y2)) ) / log 2.
//   2. General cells over a single quadratic field are integrated by exact
//      x-sectioning: each constraint contributes a Moebius y-bound
//      Y(x) = -(c0+c1 x)/(c2+c3 x); the x-range is split at sign changes of
//      c2+c3 x and at curve crossings (linear crossings split exactly,
//      quadratic ones are isolated to 2^-40-wide rational strips whose
//      possible mass goes into the error bound); on each crossing-free piece
//      the dominant bounds are found by one exact midpoint comparison and
//      the section antiderivative is evaluated in closed form.
//   3. A certified Darboux fallback on the dyadic grid: a square counts only
//      when corner signs decide every constraint (bilinear forms attain
//      extrema at corners), so the result is a true lower/upper bracket.
//
// measure() never throws: anything the exact routes cannot handle falls
// back to the bracket, whose width is reported honestly as the error.

#pragma once

#include <cstddef>
#include <string>

#include "socf/region.hpp"

namespace socf {

/// A measure value with a certified absolute error bound: the true measure
/// lies in [value - error, value + error].
struct MeasureResult {
  double value = 0.0;
  double error = 0.0;
  std::string method;
};

/// Measure of r (cells summed; callers keep cells disjoint).  Never throws.
/// `tol` steers the Darboux fallback's subdivision target; exact routes
/// ignore it and report their intrinsic (smaller) error.
MeasureResult measure(const Region& r, double tol = 1e-9) noexcept;

/// Certified Darboux bracket: lower <= mu(r) <= upper.  Handles overlapping
/// cells correctly (it brackets the measure of the union).  Subdivision
/// stops once the straddling mass drops below tol or depth_cap is reached.
struct DarbouxResult {
  double lower = 0.0;
  double upper = 0.0;
  int depth_used = 0;
};

DarbouxResult measure_darboux(const Region& r, double tol, int depth_cap = 20);

}  // namespace socf
