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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sparsezt/bigint.hpp"
#include "sparsezt/gf.hpp"

namespace sparsezt {

using Point = std::vector<FieldElement>;

/// Q = A_1 x ... x A_N. Each A_i is stored sorted in canonical element order.
class RectangularDomain {
 public:
  /// Throws std::invalid_argument on an empty set, a duplicate element, or an
  /// element from another field.
  RectangularDomain(const Field& field, std::vector<std::vector<FieldElement>> sets);

  static RectangularDomain power(const Field& field, std::vector<FieldElement> s, std::size_t n);

  const Field& field() const { return *field_; }
  std::size_t dimension() const { return sets_.size(); }
  const std::vector<FieldElement>& set(std::size_t i) const { return sets_[i]; }
  const std::vector<std::vector<FieldElement>>& sets() const { return sets_; }

  bool contains_zero() const { return contains_zero_; }
  bool is_power() const { return is_power_; }
  const BigInt& size() const { return size_; }
  std::size_t max_set_size() const;
  bool contains(std::span<const FieldElement> x) const;
  /// Q has the shape {a_1, 0} x ... x {a_N, 0} with every a_i nonzero.
  bool is_zero_pair_domain() const;

 private:
  const Field* field_;
  std::vector<std::vector<FieldElement>> sets_;
  bool contains_zero_ = false;
  bool is_power_ = true;
  BigInt size_;
};

std::size_t hamming_distance(std::span<const FieldElement> a, std::span<const FieldElement> b);

/// Lazily enumerates the Hamming ball {x in Q : d_H(x, center) <= radius}.
///
/// Points come out by increasing distance. Within one distance the changed
/// positions run through k-subsets in lexicographic order, and for each
/// subset the replacement values (every element of A_i except the center's)
/// run in canonical order with the last changed position varying fastest.
/// Every point is produced exactly once.
class BallEnumerator {
 public:
  /// Throws std::invalid_argument if center is not in Q.
  BallEnumerator(const RectangularDomain& q, Point center, std::size_t radius);

  /// Advances to the next point; false once the ball is exhausted.
  bool next();
  const Point& current() const { return current_; }
  std::size_t current_distance() const { return distance_; }

 private:
  bool start_distance(std::size_t d);
  bool advance_values();
  bool advance_positions();
  void load_point();

  const RectangularDomain* domain_;
  Point center_;
  std::size_t radius_;
  std::size_t distance_ = 0;
  bool started_ = false;
  bool done_ = false;
  // Alternatives per coordinate: A_i without center_[i].
  std::vector<std::vector<FieldElement>> alternatives_;
  std::vector<std::size_t> positions_;
  std::vector<std::size_t> choice_;
  Point current_;
};

/// Odometer over every point of Q, last coordinate fastest.
class GridEnumerator {
 public:
  explicit GridEnumerator(const RectangularDomain& q);
  bool next();
  const Point& current() const { return current_; }
  const std::vector<std::size_t>& digits() const { return digits_; }

 private:
  const RectangularDomain* domain_;
  std::vector<std::size_t> digits_;
  Point current_;
  bool started_ = false;
};

/// Vol_s(N, k) = sum_{i=0}^{floor(k)} C(N, i) (s - 1)^i.
BigInt vol(std::uint64_t s, std::uint64_t n, double k);

/// Standard s-ary entropy x log_s(s-1) - x log_s x - (1-x) log_s(1-x), with
/// H(0) = H(1) = 0. A "+" on the last term (a common misprint) would make the
/// function negative on (0, 1); the minus sign is the one that gives the
/// usual Hamming-ball volume bound Vol_s(N, xN) <= s^{N H_s(x)}.
double entropy(std::uint64_t s, double x);

}  // namespace sparsezt
