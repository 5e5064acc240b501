// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Rational intervals.  A RatInterval encloses an irrational value between
// exact rational endpoints; the enclosed value is always strictly interior
// (rational endpoints can never equal an irrational), which lets sign tests
// treat the interval as open.

#pragma once

#include <string>

#include "socf/errors.hpp"
#include "socf/fraction.hpp"

namespace socf {

/// A non-degenerate rational interval (lo, hi) with lo < hi strictly.
/// Exact points are represented by BigFraction directly, never by a
/// degenerate interval.
class RatInterval {
 public:
  RatInterval(BigFraction lo, BigFraction hi)
      : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ >= hi_) throw DomainError("degenerate interval");
  }

  const BigFraction& lo() const { return lo_; }
  const BigFraction& hi() const { return hi_; }

  BigFraction width() const { return hi_ - lo_; }
  BigFraction midpoint() const { return (lo_ + hi_) / BigFraction(2); }

  bool contains(const BigFraction& v) const { return lo_ < v && v < hi_; }

  std::string to_string() const {
    return "(" + lo_.to_string() + ", " + hi_.to_string() + ")";
  }

 private:
  BigFraction lo_;
  BigFraction hi_;
};

}  // namespace socf
