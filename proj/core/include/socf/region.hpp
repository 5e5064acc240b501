// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Regions of the natural-extension domain Omega = [0,1) x [0,1].
//
// A region is a finite union of cells; a cell is a conjunction of bilinear
// constraints
//
//     c0 + c1*x + c2*y + c3*x*y   REL   0,      REL in {<, <=, >, >=},
//
// with coefficients in a single real quadratic field Q(sqrt(D)) per
// constraint.  This class of sets is closed under complement, intersection
// and union (implemented below), contains the acceleration windows used by
// the induced expansions, and admits exact membership tests:
//
//   - y is always an exact rational along an orbit, and the x-tail is either
//     an exact quadratic surd or a shrinking rational enclosure, so each
//     constraint evaluates to a certain True/False or an honest Unknown that
//     more x-precision can settle.
//   - For fixed y the constraint is affine-over-affine in x, hence monotone;
//     evaluating the two enclosure endpoints exactly gives certain bounds.
//
// Cells of one region are kept pairwise disjoint up to their boundaries
// (a Lebesgue-null set), which is what lets the measure of a region be the
// sum of its cell measures.  The algebra below preserves this invariant;
// hand-written `cells[...]` input is the caller's obligation.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "socf/fraction.hpp"
#include "socf/matrix.hpp"
#include "socf/surd.hpp"
#include "socf/tail_source.hpp"

namespace socf {

/// Comparison sense of a constraint against zero.
enum class Rel { LT, LE, GT, GE };

std::string to_string(Rel rel);
Rel negate(Rel rel);

/// One bilinear constraint c0 + c1*x + c2*y + c3*x*y REL 0.  All four
/// coefficients must lie in one quadratic field (MixedRadicands otherwise).
struct BilinearConstraint {
  SurdValue c0, c1, c2, c3;
  Rel rel;

  BilinearConstraint(SurdValue k0, SurdValue k1, SurdValue k2, SurdValue k3,
                     Rel r);

  /// Radicand of the coefficient field (0 when all coefficients rational).
  const Int& radicand() const { return radicand_; }

  /// Same constraint surface with the comparison flipped to the complement:
  /// LT <-> GE, LE <-> GT.
  BilinearConstraint negated() const;

  std::string to_string() const;

 private:
  Int radicand_;
};

/// Conjunction of constraints.  The empty conjunction is all of Omega.
using Cell = std::vector<BilinearConstraint>;

/// Finite union of cells, pairwise disjoint up to boundaries.
struct Region {
  std::vector<Cell> cells;
  std::string label;
};

/// A point of the natural-extension domain: the x-coordinate as a live
/// digit-source cursor (its current tail), the y-coordinate as an exact
/// rational, and the number of Gauss steps applied since construction.
/// Along an orbit started at (x, 0), y_n = q_{n-1}/q_n stays rational.
struct NEPoint {
  TailSource x;
  BigFraction y;
  std::size_t depth = 0;
};

/// Three-valued verdict of an evaluation at the current precision.
enum class Tri { False, True, Unknown };

/// Evaluate one constraint at z without advancing z.x (its enclosure may be
/// consulted at current precision only).  Exact when the tail is a surd in a
/// compatible field or when the constraint does not involve x; otherwise a
/// certain answer if the enclosure separates the surface, else Unknown.
Tri eval_constraint(const BilinearConstraint& c, NEPoint& z);

/// Conjunction over a cell: False dominates, then Unknown, else True.
Tri eval_cell(const Cell& cell, NEPoint& z);

/// Union over cells: True dominates, then Unknown, else False.
Tri eval_region(const Region& r, NEPoint& z);

/// Decide membership, refining z.x up to `budget` times while the verdict is
/// Unknown.  Throws UndecidableAtBudget when the budget or the source's
/// precision runs out first (the point is on or next to a boundary).
bool contains(const Region& r, NEPoint& z, std::size_t budget = 64);

/// Exact sign of c0 + c1*x + c2*y + c3*x*y at a rational point.
int constraint_sign_at(const BilinearConstraint& c, const BigFraction& x,
                       const BigFraction& y);

/// Whether a value of the given sign satisfies the relation (boundary
/// points satisfy exactly the non-strict relations).
bool rel_admits(Rel rel, int sign);

/// The whole domain Omega (one empty cell); measure 1.
Region omega();

/// Acceleration window [0,1) x [0, 1/b], b >= 2: the y-section constraint
/// 1/b - y >= 0.  Throws BadParameter for b < 2.
Region builtin_jump(const Int& b);

/// Approximation window {eps0 + eps0*x*y - y > 0}, 0 < eps0 <= 1/2: exactly
/// the points whose incoming approximation coefficient beats eps0.  Throws
/// BadParameter outside the range.
Region builtin_legendre(const BigFraction& eps0);

/// The Legendre window at the optimal threshold 1/sqrt(5).
Region builtin_hurwitz();

/// Parse a region description:
///   omega | hurwitz | jump(B) | legendre(P/Q)
///   | cells[ (c0,c1,c2,c3,REL) & ... ; ... ]
/// with REL one of < <= > >= and coefficients as surd expressions
/// (e.g. "sqrt(5)/5", "-1", "1/2").  The label is the trimmed input.
/// Throws ParseError on malformed syntax, BadParameter on bad builtin
/// parameters, MixedRadicands if a constraint mixes fields.
Region builtin_region(std::string_view text);

/// Omega minus r.  Per-cell complements are telescoped so the result's
/// cells stay pairwise disjoint.
Region complement(const Region& r);

/// Pairwise cell conjunctions of a and b.
Region intersect(const Region& a, const Region& b);

/// a united with (b minus a); keeps cells disjoint when a and b are.
Region region_union(const Region& a, const Region& b);

/// Branch record of the first-return decomposition of the Hurwitz window:
/// which cascade cell contains z, the free digit a, the return time j, and
/// the digit-block matrix consumed by one induced step from z.
struct HurwitzCell {
  std::string cell_id;  // "D1", "D21", "D22" or "D3"
  Int a;
  std::size_t j;
  IntMatrix2 m;
};

/// Classify z into the Hurwitz first-return cascade.  Does not advance z
/// (digits are read from a cloned cursor).  The three branch tests refine
/// z.x as needed within `budget`.
HurwitzCell hurwitz_cell(NEPoint& z, std::size_t budget = 64);

/// Whether the D22 cascade branch (digit word "2, a") is nonempty for free
/// digit a, decided exactly: the branch image reaches below the 1/sqrt(5)
/// threshold if and only if (a+1)/(2a+3) > 1/sqrt(5), i.e. iff
/// 5*(a+1)^2 > (2a+3)^2, which first holds at a = 4.
bool hurwitz_d22_feasible(const Int& a);

}  // namespace socf
