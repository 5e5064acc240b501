// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic pseudo-random bits.  A fixed in-repo generator (splitmix64)
// keeps seeded runs byte-identical across platforms and standard-library
// versions, which std::mt19937 distributions would not guarantee.

#pragma once

#include <cstdint>

namespace socf {

/// splitmix64: tiny, fast, well-mixed 64-bit generator.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0,1) from the top 53 bits; used only for
  /// non-certified choices (e.g. picking test sample parameters).
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace socf
