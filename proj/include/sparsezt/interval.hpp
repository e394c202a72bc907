// Copyright 2026 The sparsezt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "sparsezt/bigint.hpp"

namespace sparsezt {

/// Closed interval of long doubles, widened outward after every operation so
/// the true real value always lies inside.
struct Interval {
  long double lo = 0.0L;
  long double hi = 0.0L;

  static Interval point(long double v) { return {v, v}; }

  /// [v, v] widened by `ulps` steps each way, for values from libm calls.
  static Interval around(long double v, int ulps = 4) {
    Interval r{v, v};
    for (int i = 0; i < ulps; ++i) {
      r.lo = std::nextafter(r.lo, -std::numeric_limits<long double>::infinity());
      r.hi = std::nextafter(r.hi, std::numeric_limits<long double>::infinity());
    }
    return r;
  }

  Interval widened() const {
    return {std::nextafter(lo, -std::numeric_limits<long double>::infinity()),
            std::nextafter(hi, std::numeric_limits<long double>::infinity())};
  }

  friend Interval operator+(Interval a, Interval b) { return Interval{a.lo + b.lo, a.hi + b.hi}.widened(); }
  friend Interval operator-(Interval a, Interval b) { return Interval{a.lo - b.hi, a.hi - b.lo}.widened(); }
  friend Interval operator*(Interval a, Interval b) {
    const long double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return Interval{*std::min_element(p, p + 4), *std::max_element(p, p + 4)}.widened();
  }
  /// b must not contain zero.
  friend Interval operator/(Interval a, Interval b) {
    const long double p[] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    return Interval{*std::min_element(p, p + 4), *std::max_element(p, p + 4)}.widened();
  }
};

/// Enclosure of log2(x) for x >= 1.
inline Interval log2_interval(const BigInt& x) {
  const std::uint64_t top = floor_log2(x);
  if (top < 63) return Interval::around(std::log2(static_cast<long double>(x.convert_to<std::uint64_t>())));
  // log2(x) = shift + log2(head) + log2(x / (head 2^shift)), last term in [0, 2^-61).
  const std::uint64_t shift = top - 62;
  const BigInt head = x >> shift;
  Interval r = Interval::around(static_cast<long double>(shift) +
                                std::log2(static_cast<long double>(head.convert_to<std::uint64_t>())));
  r.hi += std::ldexp(1.0L, -60);
  return r;
}

/// a >= b holds for every value in the enclosures, up to `margin`.
inline bool certainly_geq(Interval a, Interval b, long double margin) { return a.lo >= b.hi - margin; }

}  // namespace sparsezt
