// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Invariant measure of bilinear-cell regions under the two-dimensional
// density d mu = dx dy / (log 2 * (1 + x y)^2) on [0,1) x [0,1].
//
// Three routes, in order of preference per cell:
//
//  * closed form for axis-aligned rectangles:
//      mu([x1,x2] x [y1,y2])
//        = log( (1+x2 y2)(1+x1 y1) / ((1+x2 y1)(1+x1 y2)) ) / log 2,
//    computed cancellation-free as
//      log1p( (x2-x1)(y2-y1) / ((1+x2 y1)(1+x1 y2)) ) / log 2;
//
//  * x-section integration: each constraint boundary
//      c0 + c1 x + (c2 + c3 x) y = 0
//    is the Mobius curve y = -(c0 + c1 x)/(c2 + c3 x), so after splitting
//    the x-range at denominator roots and pairwise curve crossings, the
//    cell's section is a single band lower(x) <= y <= upper(x) per piece,
//    and the inner integral of 1/(1+xy)^2 dy has the elementary
//    antiderivative below.  Irrational split points are bracketed by
//    rational strips of width 2^-40; each skipped strip adds width/log 2
//    to the reported error bound;
//
//  * a certified Darboux bracket on a dyadic-square tree: a bilinear form
//    attains its extrema over a rectangle at the corners, so exact corner
//    signs classify every square as inside / outside / straddling, giving
//    rigorous lower and upper sums.
//
// measure() never throws: cells that defeat the exact routes fall back to
// the Darboux bracket, and the result always carries an error bound with
// the guarantee  true measure in [value - error, value + error].

#include "socf/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "socf/bigint.hpp"
#include "socf/errors.hpp"
#include "socf/fraction.hpp"
#include "socf/interval.hpp"
#include "socf/region.hpp"
#include "socf/surd.hpp"

namespace socf {
namespace {

const double kLn2 = std::log(2.0);

// mu of [x1,x2] x [y1,y2]; exact integration of the density gives
// log((1+x2 y2)(1+x1 y1)) - log((1+x2 y1)(1+x1 y2)), whose argument ratio
// is 1 + (x2-x1)(y2-y1)/((1+x2 y1)(1+x1 y2)).
double rect_mu(double x1, double x2, double y1, double y2) {
  double ratio_minus_1 =
      (x2 - x1) * (y2 - y1) / ((1.0 + x2 * y1) * (1.0 + x1 * y2));
  return std::log1p(ratio_minus_1) / kLn2;
}

// ---------------------------------------------------------------------------
// Route 1: axis-aligned rectangles.

// Reads the cell as a rectangle when every constraint is a constant sign
// condition, a pure-x bound, or a pure-y bound.  Returns nullopt when the
// cell has a genuinely two-variable constraint (or a comparison between
// incompatible quadratic fields runs out of precision, which the caller
// treats the same way).
std::optional<MeasureResult> try_rectangle(const Cell& cell) {
  try {
    SurdValue x1(0), x2(1), y1(0), y2(1);
    for (const BilinearConstraint& c : cell) {
      if (c.c3.sign() != 0) return std::nullopt;
      bool has_x = c.c1.sign() != 0;
      bool has_y = c.c2.sign() != 0;
      if (has_x && has_y) return std::nullopt;
      if (!has_x && !has_y) {
        if (rel_admits(c.rel, c.c0.sign())) continue;  // vacuous
        return MeasureResult{0.0, 0.0, "closed-form"};  // empty cell
      }
      const SurdValue& slope = has_x ? c.c1 : c.c2;
      SurdValue bound = -(c.c0 / slope);
      bool ge_family = c.rel == Rel::GT || c.rel == Rel::GE;
      bool lower = ge_family == (slope.sign() > 0);
      SurdValue& lo = has_x ? x1 : y1;
      SurdValue& hi = has_x ? x2 : y2;
      if (lower) {
        if (compare_any(bound, lo) > 0) lo = bound;
      } else {
        if (compare_any(bound, hi) < 0) hi = bound;
      }
    }
    if (compare_any(x1, x2) >= 0 || compare_any(y1, y2) >= 0)
      return MeasureResult{0.0, 0.0, "closed-form"};
    double value = rect_mu(x1.to_double(), x2.to_double(), y1.to_double(),
                           y2.to_double());
    return MeasureResult{value, 1e-14, "closed-form"};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Route 2: x-section integration.

// A boundary curve y = (n0 + n1 x)/(d0 + d1 x).
struct Mobius {
  SurdValue n0, n1, d0, d1;
};

SurdValue mobius_at(const Mobius& m, const BigFraction& x) {
  SurdValue xv(x);
  return (m.n0 + m.n1 * xv) / (m.d0 + m.d1 * xv);
}

constexpr unsigned long kStripBits = 40;

// Encloses a value in a rational interval of width <= 2^-40 (degenerate for
// rationals).
std::pair<BigFraction, BigFraction> rationalize(const SurdValue& v) {
  if (v.is_rational()) {
    BigFraction f = v.to_fraction();
    return {f, f};
  }
  BigFraction delta(Int(1), pow2(kStripBits));
  for (unsigned long k = kStripBits;; k *= 2) {
    RatInterval e = v.enclosure(k);
    if (e.width() <= delta) return {e.lo(), e.hi()};
    if (k > (1ul << 20))
      throw PrecisionExhausted("cannot bracket a split point to width 2^-40");
  }
}

// Antiderivative of F(x) = Y(x)/(1 + x Y(x)) along Y = (b + a x)/(d + c x):
//   F = (a x + b) / (a x^2 + (b+c) x + d),
// so with Q = a x^2 + (b+c) x + d and disc = (b+c)^2 - 4 a d,
//   G = log|Q|/2 + ((b-c)/2) * J,   J = integral of dx/Q,
// where J is an arctangent (disc < 0), a logarithm of a root ratio
// (disc > 0), or -2/Q' (disc = 0); the branch is chosen by the exact sign
// of disc.  Degenerate a = 0 reduces to a plain logarithm or a linear term.
struct Antiderivative {
  int kind = 5;  // 0: atan  1: log-ratio  2: double root  3: log  4: linear
                 // 5: identically zero
  double a = 0, b = 0, c = 0, d = 0;
  double sdisc = 0;  // sqrt(|disc|) for kinds 0 and 1

  double at(double x) const {
    double q = (a * x + (b + c)) * x + d;
    double t = 2.0 * a * x + (b + c);
    switch (kind) {
      case 0:
        return 0.5 * std::log(std::fabs(q)) +
               ((b - c) / 2.0) * (2.0 / sdisc) * std::atan(t / sdisc);
      case 1:
        return 0.5 * std::log(std::fabs(q)) +
               ((b - c) / 2.0) * (1.0 / sdisc) *
                   std::log(std::fabs((t - sdisc) / (t + sdisc)));
      case 2:
        return 0.5 * std::log(std::fabs(q)) + ((b - c) / 2.0) * (-2.0 / t);
      case 3:
        return (b / (b + c)) * std::log(std::fabs((b + c) * x + d));
      case 4:
        return (b / d) * x;
      default:
        return 0.0;
    }
  }
};

Antiderivative make_antiderivative(const Mobius& m) {
  Antiderivative g;
  g.a = m.n1.to_double();
  g.b = m.n0.to_double();
  g.c = m.d1.to_double();
  g.d = m.d0.to_double();
  if (m.n1.sign() == 0) {
    if (m.n0.sign() == 0) return g;  // Y == 0, F == 0
    SurdValue bc = m.n0 + m.d1;
    if (bc.sign() != 0) {
      g.kind = 3;
      return g;
    }
    if (m.d0.sign() == 0) throw Error("degenerate boundary curve");
    g.kind = 4;  // F is the constant b/d
    return g;
  }
  SurdValue bc = m.n0 + m.d1;
  SurdValue disc = bc * bc - SurdValue(4) * m.n1 * m.d0;
  int s = disc.sign();
  if (s < 0) {
    g.kind = 0;
    g.sdisc = std::sqrt(-disc.to_double());
  } else if (s > 0) {
    g.kind = 1;
    g.sdisc = std::sqrt(disc.to_double());
  } else {
    g.kind = 2;
  }
  return g;
}

// Integrates the density over one cell by sectioning in x.  Throws when the
// cell mixes quadratic fields or a bracketing budget runs out; the caller
// falls back to the Darboux route.
MeasureResult slice_cell(const Cell& cell) {
  // The whole cell must live in one quadratic field for exact splits.
  Int field(0);
  for (const BilinearConstraint& c : cell) {
    const Int& d = c.radicand();
    if (d == 0) continue;
    if (field == 0)
      field = d;
    else if (field != d)
      throw MixedRadicands("cell mixes quadratic fields");
  }

  // Classify constraints: constants, pure-x bounds, and y-curves.
  SurdValue hull_lo(0), hull_hi(1);
  std::vector<Mobius> curves;       // y-involved boundaries
  std::vector<bool> ge_family_of;   // parallel to curves
  for (const BilinearConstraint& c : cell) {
    bool ge_family = c.rel == Rel::GT || c.rel == Rel::GE;
    if (c.c2.sign() == 0 && c.c3.sign() == 0) {
      if (c.c1.sign() == 0) {
        if (rel_admits(c.rel, c.c0.sign())) continue;  // vacuous
        return MeasureResult{0.0, 0.0, "section-integral"};
      }
      SurdValue bound = -(c.c0 / c.c1);
      bool lower = ge_family == (c.c1.sign() > 0);
      if (lower) {
        if (surd_compare(bound, hull_lo) > 0) hull_lo = bound;
      } else {
        if (surd_compare(bound, hull_hi) < 0) hull_hi = bound;
      }
      continue;
    }
    curves.push_back(Mobius{-c.c0, -c.c1, c.c2, c.c3});
    ge_family_of.push_back(ge_family);
  }
  if (surd_compare(hull_lo, hull_hi) >= 0)
    return MeasureResult{0.0, 0.0, "section-integral"};

  double strip_error = 0.0;

  // Rationalize the hull inward; the skipped slivers join the error bound
  // (a unit-height x-sliver of width w has measure at most w / log 2).
  auto lo_pair = rationalize(hull_lo);
  auto hi_pair = rationalize(hull_hi);
  BigFraction gx1 = lo_pair.second, gx2 = hi_pair.first;
  strip_error += (lo_pair.second - lo_pair.first).to_double() / kLn2;
  strip_error += (hi_pair.second - hi_pair.first).to_double() / kLn2;
  if (gx1 >= gx2)
    return MeasureResult{0.0, strip_error + 1e-14, "section-integral"};

  // Split points: x-range ends, denominator roots, pairwise curve
  // crossings (including the constant bounds y = 0 and y = 1).
  std::vector<BigFraction> bps{gx1, gx2};
  std::vector<std::pair<BigFraction, BigFraction>> strips;
  auto add_split = [&](const BigFraction& x) {
    if (gx1 < x && x < gx2) bps.push_back(x);
  };
  auto add_strip = [&](const BigFraction& lo, const BigFraction& hi) {
    BigFraction l = std::max(lo, gx1), h = std::min(hi, gx2);
    if (l >= h) return;
    bps.push_back(l);
    bps.push_back(h);
    strips.emplace_back(l, h);
    strip_error += (h - l).to_double() / kLn2;
  };
  auto add_point = [&](const SurdValue& v) {
    auto p = rationalize(v);
    if (p.first == p.second)
      add_split(p.first);
    else
      add_strip(p.first, p.second);
  };

  for (const Mobius& m : curves)
    if (m.d1.sign() != 0) add_point(-(m.d0 / m.d1));  // pole of the curve

  std::vector<Mobius> all = curves;
  all.push_back(Mobius{SurdValue(0), SurdValue(0), SurdValue(1), SurdValue(0)});
  all.push_back(Mobius{SurdValue(1), SurdValue(0), SurdValue(1), SurdValue(0)});
  const std::size_t idx_zero = curves.size();
  const std::size_t idx_one = curves.size() + 1;

  BigFraction delta(Int(1), pow2(kStripBits));
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      // Crossings solve N(x) = 0 with N = num_i * den_j - num_j * den_i.
      SurdValue A = all[i].n1 * all[j].d1 - all[j].n1 * all[i].d1;
      SurdValue B = all[i].n0 * all[j].d1 + all[i].n1 * all[j].d0 -
                    all[j].n0 * all[i].d1 - all[j].n1 * all[i].d0;
      SurdValue C = all[i].n0 * all[j].d0 - all[j].n0 * all[i].d0;
      auto nsign = [&](const BigFraction& x) {
        SurdValue xv(x);
        return ((A * xv + B) * xv + C).sign();
      };
      if (A.sign() == 0) {
        if (B.sign() == 0) continue;  // parallel or identical
        add_point(-(C / B));
        continue;
      }
      // Quadratic: exclude a strip around the vertex, then each flank is
      // strictly monotone and a sign change brackets the single root.
      auto vx = rationalize(-(B / (SurdValue(2) * A)));
      if (vx.first == vx.second)
        add_split(vx.first);
      else
        add_strip(vx.first, vx.second);
      auto scan_flank = [&](const BigFraction& p0, const BigFraction& q0) {
        if (p0 >= q0) return;
        int sp = nsign(p0), sq = nsign(q0);
        if (sp == 0) add_split(p0);
        if (sq == 0) add_split(q0);
        if (sp * sq >= 0) return;
        BigFraction p = p0, q = q0;
        while (q - p > delta) {
          BigFraction m = (p + q) / BigFraction(2);
          int sm = nsign(m);
          if (sm == 0) {
            add_split(m);
            return;
          }
          (sm == sp ? p : q) = m;
        }
        add_strip(p, q);
      };
      scan_flank(gx1, std::min(vx.first, gx2));
      scan_flank(std::max(vx.second, gx1), gx2);
    }
  }

  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  // Integrate piece by piece; the band is constant per piece, so the
  // midpoint identifies it exactly.
  double value = 0.0;
  std::size_t pieces = 0;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const BigFraction& pa = bps[i];
    const BigFraction& pb = bps[i + 1];
    BigFraction xm = (pa + pb) / BigFraction(2);
    bool skipped = false;
    for (const auto& s : strips)
      if (s.first <= xm && xm <= s.second) {
        skipped = true;
        break;
      }
    if (skipped) continue;

    // Which side of each curve the cell lies on follows from the sign of
    // the denominator there: value = (c2 + c3 x) * (y - Y(x)).
    std::vector<std::size_t> uppers{idx_one}, lowers{idx_zero};
    for (std::size_t k = 0; k < curves.size(); ++k) {
      int sw = (all[k].d0 + all[k].d1 * SurdValue(xm)).sign();
      if (sw == 0) throw Error("curve pole escaped the split set");
      bool is_upper = ge_family_of[k] ? (sw < 0) : (sw > 0);
      (is_upper ? uppers : lowers).push_back(k);
    }
    std::size_t bu = uppers.front(), bl = lowers.front();
    SurdValue vu = mobius_at(all[bu], xm), vl = mobius_at(all[bl], xm);
    for (std::size_t k : uppers)
      if (k != bu) {
        SurdValue v = mobius_at(all[k], xm);
        if (surd_compare(v, vu) < 0) {
          bu = k;
          vu = v;
        }
      }
    for (std::size_t k : lowers)
      if (k != bl) {
        SurdValue v = mobius_at(all[k], xm);
        if (surd_compare(v, vl) > 0) {
          bl = k;
          vl = v;
        }
      }
    if (surd_compare(vl, vu) >= 0) continue;  // empty band on this piece

    Antiderivative gu = make_antiderivative(all[bu]);
    Antiderivative gl = make_antiderivative(all[bl]);
    double xa = pa.to_double(), xb = pb.to_double();
    double part = ((gu.at(xb) - gu.at(xa)) - (gl.at(xb) - gl.at(xa))) / kLn2;
    if (!std::isfinite(part)) throw Error("non-finite piece integral");
    value += part;
    ++pieces;
  }
  double error = strip_error + 1e-13 * static_cast<double>(pieces + 1);
  return MeasureResult{value, error, "section-integral"};
}

// ---------------------------------------------------------------------------
// Route 3: certified Darboux bracket.

enum class SquareState { Inside, Outside, Straddle };

struct CellTrack {
  bool dead = false;       // some constraint fails on the whole square
  std::uint64_t done = 0;  // constraints already proven true on an ancestor
};

struct Square {
  BigFraction x1, x2, y1, y2;
  std::vector<CellTrack> track;
};

// Classifies a square against the region using exact corner signs; verdicts
// are inherited by sub-squares through `track`.
SquareState classify(const Region& r, Square& s) {
  bool any_alive = false;
  bool any_inside = false;
  for (std::size_t ci = 0; ci < r.cells.size(); ++ci) {
    CellTrack& t = s.track[ci];
    if (t.dead) continue;
    const Cell& cell = r.cells[ci];
    bool all_true = true;
    for (std::size_t j = 0; j < cell.size(); ++j) {
      if (j < 64 && ((t.done >> j) & 1)) continue;
      const BilinearConstraint& c = cell[j];
      int s1 = constraint_sign_at(c, s.x1, s.y1);
      int s2 = constraint_sign_at(c, s.x2, s.y1);
      int s3 = constraint_sign_at(c, s.x1, s.y2);
      int s4 = constraint_sign_at(c, s.x2, s.y2);
      if (rel_admits(c.rel, s1) && rel_admits(c.rel, s2) &&
          rel_admits(c.rel, s3) && rel_admits(c.rel, s4)) {
        if (j < 64) t.done |= std::uint64_t(1) << j;
        continue;
      }
      all_true = false;
      Rel neg = negate(c.rel);
      if (rel_admits(neg, s1) && rel_admits(neg, s2) && rel_admits(neg, s3) &&
          rel_admits(neg, s4)) {
        t.dead = true;
        break;
      }
    }
    if (!t.dead) {
      if (all_true) any_inside = true;
      any_alive = true;
    }
  }
  if (any_inside) return SquareState::Inside;
  return any_alive ? SquareState::Straddle : SquareState::Outside;
}

double square_mu(const Square& s) {
  return rect_mu(s.x1.to_double(), s.x2.to_double(), s.y1.to_double(),
                 s.y2.to_double());
}

std::string join_methods(const std::vector<std::string>& tags) {
  std::string out;
  for (const std::string& t : tags) {
    if (!out.empty()) out += "+";
    out += t;
  }
  return out;
}

}  // namespace

DarbouxResult measure_darboux(const Region& r, double tol, int depth_cap) {
  if (r.cells.empty()) return DarbouxResult{0.0, 0.0, 0};
  double lower = 0.0;
  double gap = 0.0;
  std::vector<Square> cur;
  Square full{BigFraction(0), BigFraction(1), BigFraction(0), BigFraction(1),
              std::vector<CellTrack>(r.cells.size())};
  switch (classify(r, full)) {
    case SquareState::Inside:
      return DarbouxResult{1.0, 1.0, 0};
    case SquareState::Outside:
      return DarbouxResult{0.0, 0.0, 0};
    case SquareState::Straddle:
      gap = square_mu(full);
      cur.push_back(std::move(full));
      break;
  }
  int depth = 0;
  while (!cur.empty() && depth < depth_cap && gap > tol) {
    ++depth;
    std::vector<Square> next;
    double next_gap = 0.0;
    for (Square& s : cur) {
      BigFraction xm = (s.x1 + s.x2) / BigFraction(2);
      BigFraction ym = (s.y1 + s.y2) / BigFraction(2);
      const BigFraction xs[3] = {s.x1, xm, s.x2};
      const BigFraction ys[3] = {s.y1, ym, s.y2};
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          Square child{xs[i], xs[i + 1], ys[j], ys[j + 1], s.track};
          switch (classify(r, child)) {
            case SquareState::Inside:
              lower += square_mu(child);
              break;
            case SquareState::Outside:
              break;
            case SquareState::Straddle:
              next_gap += square_mu(child);
              next.push_back(std::move(child));
              break;
          }
        }
      }
    }
    cur = std::move(next);
    gap = next_gap;
  }
  return DarbouxResult{lower, lower + gap, depth};
}

MeasureResult measure(const Region& r, double tol) noexcept {
  try {
    if (r.cells.empty()) return MeasureResult{0.0, 0.0, "empty"};
    double value = 0.0, error = 0.0;
    std::vector<std::string> tags;
    for (const Cell& cell : r.cells) {
      MeasureResult part{0.0, 0.0, ""};
      bool have = false;
      if (std::optional<MeasureResult> rect = try_rectangle(cell)) {
        part = *rect;
        have = true;
      }
      if (!have) {
        try {
          part = slice_cell(cell);
          have = true;
        } catch (const std::exception&) {
          // fall through to the certified bracket
        }
      }
      if (!have) {
        Region one;
        one.cells.push_back(cell);
        one.label = r.label;
        DarbouxResult d = measure_darboux(one, tol, 20);
        part = MeasureResult{(d.lower + d.upper) / 2.0,
                             (d.upper - d.lower) / 2.0 + 1e-12, "darboux"};
      }
      value += part.value;
      error += part.error;
      if (std::find(tags.begin(), tags.end(), part.method) == tags.end())
        tags.push_back(part.method);
    }
    return MeasureResult{value, error, join_methods(tags)};
  } catch (...) {
    // Last resort: the measure of any region is bracketed by [0, 1].
    return MeasureResult{0.5, 0.5, "unavailable"};
  }
}

}  // namespace socf
