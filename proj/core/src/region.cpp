// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Region membership, region algebra, the region description language, and
// the Hurwitz first-return cascade.
//
// The evaluation hot path avoids canonicalizing SurdValues: a constraint
// value is assembled as an unreduced triple (u + v*sqrt(D)) / w with w > 0
// and only its sign is ever taken, which needs no gcds.  Along long orbits
// y carries numerators of tens of thousands of bits, so this matters.

#include "socf/region.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

#include "socf/errors.hpp"

namespace socf {

namespace {

// ---------------------------------------------------------------------------
// Unreduced quadratic-field arithmetic for sign evaluation.

/// (u + v*sqrt(D)) / w with w > 0, never reduced.
struct RawSurd {
  Int u, v, w;
};

RawSurd raw(const SurdValue& s) { return {s.a(), s.b(), s.c()}; }
RawSurd raw(const BigFraction& f) { return {f.num(), Int(0), f.den()}; }

RawSurd add(const RawSurd& a, const RawSurd& b) {
  return {Int(a.u * b.w + b.u * a.w), Int(a.v * b.w + b.v * a.w),
          Int(a.w * b.w)};
}

RawSurd mul(const RawSurd& a, const RawSurd& b, const Int& d) {
  return {Int(a.u * b.u + a.v * b.v * d), Int(a.u * b.v + a.v * b.u),
          Int(a.w * b.w)};
}

/// Sign of u + v*sqrt(D) (w > 0 never matters).  D is 0 or positive and
/// non-square, so the value vanishes only when u = v = 0.
int raw_sign(const RawSurd& a, const Int& d) {
  int su = sign(a.u), sv = sign(a.v);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  int c = cmp(Int(a.u * a.u), Int(a.v * a.v * d));
  if (c == 0) return 0;  // unreachable for non-square D
  return c > 0 ? su : sv;
}

/// Join two field radicands: either may be 0 (rational); both nonzero must
/// agree.  Returns the joint radicand, or -1 when incompatible.
Int join_radicand(const Int& a, const Int& b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  return Int(-1);
}

Tri apply_rel_exact(int s, Rel rel) {
  switch (rel) {
    case Rel::LT: return s < 0 ? Tri::True : Tri::False;
    case Rel::LE: return s <= 0 ? Tri::True : Tri::False;
    case Rel::GT: return s > 0 ? Tri::True : Tri::False;
    case Rel::GE: return s >= 0 ? Tri::True : Tri::False;
  }
  return Tri::Unknown;  // unreachable
}

/// Verdict for a value known to lie strictly between endpoint signs smin
/// and smax.  The strictness of the relation is immaterial here: the value
/// itself never sits on the surface when the endpoints do.
Tri apply_rel_interval(int smin, int smax, Rel rel) {
  switch (rel) {
    case Rel::GT:
    case Rel::GE:
      if (smin >= 0) return Tri::True;
      if (smax <= 0) return Tri::False;
      return Tri::Unknown;
    case Rel::LT:
    case Rel::LE:
      if (smax <= 0) return Tri::True;
      if (smin >= 0) return Tri::False;
      return Tri::Unknown;
  }
  return Tri::Unknown;  // unreachable
}

/// Floating filter in front of the exact sign tests: evaluate the bilinear
/// form at the four corners of an outward-padded double box around
/// (tail, y) and decide only when every corner clears zero by a wide slop.
/// The form is linear in each variable, so corner values bound it on the
/// box.  Coefficients are O(1) surds and the box sits inside [0,1]^2; every
/// conversion here is accurate to a few ulp, so the 1e-9 slop over-covers
/// the rounding by orders of magnitude.  Anything closer falls through to
/// the exact paths, preserving the three-valued semantics exactly.
Tri fast_filter(const BilinearConstraint& c, const NEPoint& z) {
  auto [xl, xh] = z.x.tail_approx();
  double yv = z.y.to_double();
  double yl = yv - 1e-12, yh = yv + 1e-12;
  double k0 = c.c0.to_double(), k1 = c.c1.to_double();
  double k2 = c.c2.to_double(), k3 = c.c3.to_double();
  double vmin = std::numeric_limits<double>::infinity();
  double vmax = -vmin;
  for (double x : {xl, xh}) {
    for (double y : {yl, yh}) {
      double v = k0 + k1 * x + k2 * y + k3 * x * y;
      vmin = std::min(vmin, v);
      vmax = std::max(vmax, v);
    }
  }
  constexpr double kSlop = 1e-9;
  if (vmin > kSlop) return apply_rel_exact(1, c.rel);
  if (vmax < -kSlop) return apply_rel_exact(-1, c.rel);
  return Tri::Unknown;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rel and BilinearConstraint.

std::string to_string(Rel rel) {
  switch (rel) {
    case Rel::LT: return "<";
    case Rel::LE: return "<=";
    case Rel::GT: return ">";
    case Rel::GE: return ">=";
  }
  return "?";
}

Rel negate(Rel rel) {
  switch (rel) {
    case Rel::LT: return Rel::GE;
    case Rel::LE: return Rel::GT;
    case Rel::GT: return Rel::LE;
    case Rel::GE: return Rel::LT;
  }
  return Rel::LT;  // unreachable
}

BilinearConstraint::BilinearConstraint(SurdValue k0, SurdValue k1,
                                       SurdValue k2, SurdValue k3, Rel r)
    : c0(std::move(k0)),
      c1(std::move(k1)),
      c2(std::move(k2)),
      c3(std::move(k3)),
      rel(r) {
  Int d = join_radicand(c0.radicand(), c1.radicand());
  if (d >= 0) d = join_radicand(d, c2.radicand());
  if (d >= 0) d = join_radicand(d, c3.radicand());
  if (d < 0)
    throw MixedRadicands(
        "constraint coefficients must share one quadratic field: " +
        c0.to_string() + ", " + c1.to_string() + ", " + c2.to_string() + ", " +
        c3.to_string());
  radicand_ = d;
}

BilinearConstraint BilinearConstraint::negated() const {
  return BilinearConstraint(c0, c1, c2, c3, negate(rel));
}

std::string BilinearConstraint::to_string() const {
  return "(" + c0.to_string() + "," + c1.to_string() + "," + c2.to_string() +
         "," + c3.to_string() + "," + socf::to_string(rel) + ")";
}

// ---------------------------------------------------------------------------
// Evaluation.

Tri eval_constraint(const BilinearConstraint& c, NEPoint& z) {
  Tri fast = fast_filter(c, z);
  if (fast != Tri::Unknown) return fast;
  RawSurd y = raw(z.y);
  // The x-free and x-bound parts: value = A + B*x.
  if (const SurdValue* t = z.x.exact_tail()) {
    Int d = join_radicand(c.radicand(), t->radicand());
    if (d >= 0) {
      RawSurd a = add(raw(c.c0), mul(raw(c.c2), y, d));
      RawSurd b = add(raw(c.c1), mul(raw(c.c3), y, d));
      RawSurd value = add(a, mul(b, raw(*t), d));
      return apply_rel_exact(raw_sign(value, d), c.rel);
    }
    // The tail lives in a different field; fall through to the enclosure.
  }
  const Int& d = c.radicand();
  RawSurd a = add(raw(c.c0), mul(raw(c.c2), y, d));
  RawSurd b = add(raw(c.c1), mul(raw(c.c3), y, d));
  int sb = raw_sign(b, d);
  if (sb == 0) {
    // x drops out: the value is exactly A, decide strictly.
    return apply_rel_exact(raw_sign(a, d), c.rel);
  }
  RatInterval t = z.x.tail_interval();
  RawSurd v1 = add(a, mul(b, raw(t.lo()), d));
  RawSurd v2 = add(a, mul(b, raw(t.hi()), d));
  int s1 = raw_sign(v1, d), s2 = raw_sign(v2, d);
  // x is strictly interior and the value strictly monotone in x, so the
  // value lies strictly between the endpoint values.
  return apply_rel_interval(std::min(s1, s2), std::max(s1, s2), c.rel);
}

Tri eval_cell(const Cell& cell, NEPoint& z) {
  bool unknown = false;
  for (const BilinearConstraint& c : cell) {
    Tri v = eval_constraint(c, z);
    if (v == Tri::False) return Tri::False;
    if (v == Tri::Unknown) unknown = true;
  }
  return unknown ? Tri::Unknown : Tri::True;
}

Tri eval_region(const Region& r, NEPoint& z) {
  bool unknown = false;
  for (const Cell& cell : r.cells) {
    Tri v = eval_cell(cell, z);
    if (v == Tri::True) return Tri::True;
    if (v == Tri::Unknown) unknown = true;
  }
  return unknown ? Tri::Unknown : Tri::False;
}

bool contains(const Region& r, NEPoint& z, std::size_t budget) {
  for (std::size_t i = 0;; ++i) {
    Tri v = eval_region(r, z);
    if (v == Tri::True) return true;
    if (v == Tri::False) return false;
    if (i >= budget)
      throw UndecidableAtBudget("membership in '" + r.label +
                                "' undecided after " + std::to_string(budget) +
                                " refinements at depth " +
                                std::to_string(z.depth));
    if (!z.x.refine())
      throw UndecidableAtBudget("membership in '" + r.label +
                                "' undecided and the digit source has no "
                                "precision left at depth " +
                                std::to_string(z.depth));
  }
}

int constraint_sign_at(const BilinearConstraint& c, const BigFraction& x,
                       const BigFraction& y) {
  const Int& d = c.radicand();
  RawSurd a = add(raw(c.c0), mul(raw(c.c2), raw(y), d));
  RawSurd b = add(raw(c.c1), mul(raw(c.c3), raw(y), d));
  return raw_sign(add(a, mul(b, raw(x), d)), d);
}

bool rel_admits(Rel rel, int sign) {
  switch (rel) {
    case Rel::LT: return sign < 0;
    case Rel::LE: return sign <= 0;
    case Rel::GT: return sign > 0;
    case Rel::GE: return sign >= 0;
  }
  return false;
}

bool hurwitz_d22_feasible(const Int& a) {
  if (a < 1) throw DomainError("digit must be positive");
  // (a+1)/(2a+3) > 1/sqrt(5)  <=>  5 (a+1)^2 > (2a+3)^2, all integers.
  Int lhs = 5 * (a + 1) * (a + 1);
  Int rhs = (2 * a + 3) * (2 * a + 3);
  return lhs > rhs;
}

// ---------------------------------------------------------------------------
// Builtins.

Region omega() {
  Region r;
  r.cells.push_back(Cell{});
  r.label = "omega";
  return r;
}

Region builtin_jump(const Int& b) {
  if (b < 2)
    throw BadParameter("jump level must be an integer >= 2, got " +
                       b.get_str());
  // 1/b - y >= 0.
  Cell cell;
  cell.emplace_back(SurdValue(BigFraction(Int(1), b)), SurdValue(0),
                    SurdValue(-1), SurdValue(0), Rel::GE);
  Region r;
  r.cells.push_back(std::move(cell));
  r.label = "jump(" + b.get_str() + ")";
  return r;
}

Region builtin_legendre(const BigFraction& eps0) {
  if (eps0.sign() <= 0 || eps0 > BigFraction(Int(1), Int(2)))
    throw BadParameter("legendre threshold must lie in (0, 1/2], got " +
                       eps0.to_string());
  // eps0 + eps0*x*y - y > 0.
  Cell cell;
  cell.emplace_back(SurdValue(eps0), SurdValue(0), SurdValue(-1),
                    SurdValue(eps0), Rel::GT);
  Region r;
  r.cells.push_back(std::move(cell));
  r.label = "legendre(" + eps0.to_string() + ")";
  return r;
}

Region builtin_hurwitz() {
  // 1/sqrt(5) + x*y/sqrt(5) - y > 0, with 1/sqrt(5) = sqrt(5)/5.
  SurdValue inv_sqrt5(0, 1, 5, 5);
  Cell cell;
  cell.emplace_back(inv_sqrt5, SurdValue(0), SurdValue(-1), inv_sqrt5,
                    Rel::GT);
  Region r;
  r.cells.push_back(std::move(cell));
  r.label = "hurwitz";
  return r;
}

// ---------------------------------------------------------------------------
// Algebra.

Region complement(const Region& r) {
  Region out = omega();
  for (const Cell& cell : r.cells) {
    // Complement of one cell, telescoped so the pieces are disjoint:
    // {!c1}, {c1,!c2}, {c1,c2,!c3}, ...
    Region cc;
    for (std::size_t i = 0; i < cell.size(); ++i) {
      Cell piece(cell.begin(), cell.begin() + static_cast<std::ptrdiff_t>(i));
      piece.push_back(cell[i].negated());
      cc.cells.push_back(std::move(piece));
    }
    out = intersect(out, cc);
  }
  out.label = "!(" + r.label + ")";
  return out;
}

Region intersect(const Region& a, const Region& b) {
  Region out;
  for (const Cell& ca : a.cells)
    for (const Cell& cb : b.cells) {
      Cell cell = ca;
      cell.insert(cell.end(), cb.begin(), cb.end());
      out.cells.push_back(std::move(cell));
    }
  out.label = "(" + a.label + " & " + b.label + ")";
  return out;
}

Region region_union(const Region& a, const Region& b) {
  Region rest = intersect(b, complement(a));
  Region out;
  out.cells = a.cells;
  out.cells.insert(out.cells.end(), rest.cells.begin(), rest.cells.end());
  out.label = "(" + a.label + " | " + b.label + ")";
  return out;
}

// ---------------------------------------------------------------------------
// Region description language.

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

/// Split at top-level occurrences of `delim` (not inside (), []).
std::vector<std::string_view> split_top(std::string_view s, char delim) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == delim && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

Rel parse_rel(std::string_view s) {
  s = trim(s);
  if (s == "<=") return Rel::LE;
  if (s == ">=") return Rel::GE;
  if (s == "<") return Rel::LT;
  if (s == ">") return Rel::GT;
  throw ParseError("expected one of < <= > >= , got '" + std::string(s) + "'");
}

BilinearConstraint parse_constraint(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("constraint must be (c0,c1,c2,c3,rel), got '" +
                     std::string(s) + "'");
  std::vector<std::string_view> parts =
      split_top(s.substr(1, s.size() - 2), ',');
  if (parts.size() != 5)
    throw ParseError("constraint needs 4 coefficients and a relation, got " +
                     std::to_string(parts.size()) + " fields in '" +
                     std::string(s) + "'");
  return BilinearConstraint(
      parse_surd(std::string(trim(parts[0]))),
      parse_surd(std::string(trim(parts[1]))),
      parse_surd(std::string(trim(parts[2]))),
      parse_surd(std::string(trim(parts[3]))), parse_rel(parts[4]));
}

}  // namespace

Region builtin_region(std::string_view text) {
  std::string_view t = trim(text);
  std::string label(t);
  if (t == "omega") return omega();
  if (t == "hurwitz") return builtin_hurwitz();
  if (t.starts_with("jump(") && t.ends_with(")")) {
    std::string inner(trim(t.substr(5, t.size() - 6)));
    Region r = builtin_jump(parse_int(inner));
    r.label = label;
    return r;
  }
  if (t.starts_with("legendre(") && t.ends_with(")")) {
    std::string inner(trim(t.substr(9, t.size() - 10)));
    Region r = builtin_legendre(BigFraction::from_string(inner));
    r.label = label;
    return r;
  }
  if (t.starts_with("cells[") && t.ends_with("]")) {
    std::string_view body = t.substr(6, t.size() - 7);
    Region r;
    for (std::string_view cell_text : split_top(body, ';')) {
      cell_text = trim(cell_text);
      if (cell_text.empty()) continue;
      Cell cell;
      for (std::string_view ctext : split_top(cell_text, '&'))
        cell.push_back(parse_constraint(ctext));
      r.cells.push_back(std::move(cell));
    }
    if (r.cells.empty())
      throw ParseError("cells[...] region needs at least one cell");
    r.label = label;
    return r;
  }
  throw ParseError("unrecognized region '" + label +
                   "' (expected omega, hurwitz, jump(B), legendre(P/Q) "
                   "or cells[...])");
}

// ---------------------------------------------------------------------------
// Hurwitz first-return cascade.

namespace {

bool decide(const BilinearConstraint& c, NEPoint& z, std::size_t budget,
            const char* what) {
  for (std::size_t i = 0;; ++i) {
    Tri v = eval_constraint(c, z);
    if (v != Tri::Unknown) return v == Tri::True;
    if (i >= budget || !z.x.refine())
      throw UndecidableAtBudget(std::string("Hurwitz cascade test ") + what +
                                " undecided at depth " +
                                std::to_string(z.depth));
  }
}

Int checked_digit(TailSource& s, long expect, const char* branch) {
  Int a = s.next_digit();
  if (expect > 0 && a != expect)
    throw Error(std::string("internal: Hurwitz cascade branch ") + branch +
                " saw digit " + a.get_str() + " where " +
                std::to_string(expect) + " is forced");
  return a;
}

}  // namespace

HurwitzCell hurwitz_cell(NEPoint& z, std::size_t budget) {
  SurdValue sqrt5(0, 1, 1, 5);
  // Branch 1: the very next pulled-back point already lands in the window,
  // i.e. x/(1+xy) < 1/sqrt(5)  <=>  -1 + sqrt(5)x - xy < 0.
  BilinearConstraint c1(SurdValue(-1), sqrt5, SurdValue(0), SurdValue(-1),
                        Rel::LT);
  if (decide(c1, z, budget, "D1")) {
    TailSource probe = z.x;
    Int a = checked_digit(probe, 0, "D1");
    return {"D1", a, 1, IntMatrix2::digit(a)};
  }
  // Branch 2: leading digit is forced to 1 here; landing after the block
  // (1, a) requires (1-sqrt(5)) + sqrt(5)x - sqrt(5)y + (sqrt(5)+1)xy > 0.
  BilinearConstraint c21(SurdValue(1, -1, 1, 5), sqrt5, SurdValue(0, -1, 1, 5),
                         SurdValue(1, 1, 1, 5), Rel::GT);
  if (decide(c21, z, budget, "D21")) {
    TailSource probe = z.x;
    checked_digit(probe, 1, "D21");
    Int a = checked_digit(probe, 0, "D21");
    return {"D21", a, 2, IntMatrix2::digit(1) * IntMatrix2::digit(a)};
  }
  // Branch 3: x <= 1/2 (equality impossible for irrational x) forces the
  // leading digit 2 and a two-step return.
  BilinearConstraint cx(SurdValue(BigFraction(Int(1), Int(2))), SurdValue(-1),
                        SurdValue(0), SurdValue(0), Rel::GE);
  if (decide(cx, z, budget, "D22")) {
    TailSource probe = z.x;
    checked_digit(probe, 2, "D22");
    Int a = checked_digit(probe, 0, "D22");
    return {"D22", a, 2, IntMatrix2::digit(2) * IntMatrix2::digit(a)};
  }
  // Branch 4: digits (1, 1, a), three-step return.
  TailSource probe = z.x;
  checked_digit(probe, 1, "D3");
  checked_digit(probe, 1, "D3");
  Int a = checked_digit(probe, 0, "D3");
  return {"D3", a, 3,
          IntMatrix2::digit(1) * IntMatrix2::digit(1) * IntMatrix2::digit(a)};
}

}  // namespace socf
