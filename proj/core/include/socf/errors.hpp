// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Error taxonomy for the socf library.  Every failure mode that callers can
// act on gets its own type so that the command-line tool can map it to a
// stable exit code and tests can assert on the precise condition.

#pragma once

#include <stdexcept>
#include <string>

namespace socf {

/// Base class of all socf errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input: numbers, surd expressions, region descriptions,
/// decimal strings, or command-line values that fail to parse.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input outside the accepted domain (for example an
/// expansion target not in (0,1), or a region parameter out of range).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A builtin-region or statistics parameter is outside its documented range
/// (for example a jump level below 2, or a Legendre threshold outside
/// (0, 1/2]).
class BadParameter : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Exact arithmetic on two quadratic irrationals with different radicands
/// was requested where only same-field operations are defined.
class MixedRadicands : public Error {
 public:
  using Error::Error;
};

/// A Moebius transform was applied to an interval containing a pole of the
/// transform, so the image is not an interval.
class PoleInInterval : public Error {
 public:
  using Error::Error;
};

/// A digit source ran out of certified precision: the remaining enclosure is
/// too wide to determine the next partial quotient or to refine further.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// An explicit digit list was fully consumed.
class SourceExhausted : public Error {
 public:
  using Error::Error;
};

/// The expansion target is rational; its continued fraction terminates and
/// the orbit-based machinery does not apply.
class RationalInput : public Error {
 public:
  using Error::Error;
};

/// A region membership query could not be decided within the refinement
/// budget.  Occurs only for points on or extremely near a region boundary.
class UndecidableAtBudget : public Error {
 public:
  using Error::Error;
};

/// The orbit failed to enter the region within the configured step cap.
class NeverHitsWithinCap : public Error {
 public:
  using Error::Error;
};

/// A generalised-continued-fraction convergent has denominator zero, so the
/// value P_k / Q_k is undefined at that index.
class DivergentConvergent : public Error {
 public:
  using Error::Error;
};

/// A region has measure zero (within the certified error), so quantities
/// that scale with 1/measure (return time, entropy) are undefined.
class ZeroMeasureRegion : public Error {
 public:
  using Error::Error;
};

}  // namespace socf
