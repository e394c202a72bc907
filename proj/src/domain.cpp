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

#include "sparsezt/domain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sparsezt {

RectangularDomain::RectangularDomain(const Field& field, std::vector<std::vector<FieldElement>> sets)
    : field_(&field), sets_(std::move(sets)), size_(1) {
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    auto& a = sets_[i];
    if (a.empty()) throw std::invalid_argument("coordinate set " + std::to_string(i + 1) + " is empty");
    for (const auto& x : a) {
      if (x.field_ptr() != field_) throw std::invalid_argument("domain element from a foreign field");
      if (x.is_zero()) contains_zero_ = true;
    }
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
      throw std::invalid_argument("coordinate set " + std::to_string(i + 1) + " has duplicates");
    }
    if (a != sets_.front()) is_power_ = false;
    size_ *= a.size();
  }
}

RectangularDomain RectangularDomain::power(const Field& field, std::vector<FieldElement> s,
                                           std::size_t n) {
  return RectangularDomain(field, std::vector<std::vector<FieldElement>>(n, std::move(s)));
}

std::size_t RectangularDomain::max_set_size() const {
  std::size_t m = 0;
  for (const auto& a : sets_) m = std::max(m, a.size());
  return m;
}

bool RectangularDomain::contains(std::span<const FieldElement> x) const {
  if (x.size() != sets_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].field_ptr() != field_) return false;
    if (!std::binary_search(sets_[i].begin(), sets_[i].end(), x[i])) return false;
  }
  return true;
}

bool RectangularDomain::is_zero_pair_domain() const {
  return std::all_of(sets_.begin(), sets_.end(), [](const auto& a) {
    return a.size() == 2 && a[0].is_zero() && !a[1].is_zero();
  });
}

std::size_t hamming_distance(std::span<const FieldElement> a, std::span<const FieldElement> b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]) ? 1 : 0;
  return d;
}

// ---------------------------------------------------------------------------
// BallEnumerator

BallEnumerator::BallEnumerator(const RectangularDomain& q, Point center, std::size_t radius)
    : domain_(&q), center_(std::move(center)), radius_(std::min(radius, q.dimension())) {
  if (!q.contains(center_)) throw std::invalid_argument("ball center is not a point of the domain");
  alternatives_.resize(q.dimension());
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    for (const auto& x : q.set(i)) {
      if (x != center_[i]) alternatives_[i].push_back(x);
    }
  }
  current_ = center_;
}

void BallEnumerator::load_point() {
  current_ = center_;
  for (std::size_t j = 0; j < positions_.size(); ++j) {
    current_[positions_[j]] = alternatives_[positions_[j]][choice_[j]];
  }
}

bool BallEnumerator::advance_values() {
  for (std::size_t j = choice_.size(); j-- > 0;) {
    if (++choice_[j] < alternatives_[positions_[j]].size()) return true;
    choice_[j] = 0;
  }
  return false;
}

bool BallEnumerator::advance_positions() {
  const std::size_t n = domain_->dimension();
  const std::size_t d = positions_.size();
  while (true) {
    // Next d-subset of {0..n-1} in lexicographic order.
    std::size_t j = d;
    while (j > 0 && positions_[j - 1] == n - d + (j - 1)) --j;
    if (j == 0) return false;
    ++positions_[j - 1];
    for (std::size_t k = j; k < d; ++k) positions_[k] = positions_[k - 1] + 1;
    const bool usable = std::all_of(positions_.begin(), positions_.end(),
                                    [&](std::size_t p) { return !alternatives_[p].empty(); });
    if (usable) {
      std::fill(choice_.begin(), choice_.end(), 0);
      return true;
    }
  }
}

bool BallEnumerator::start_distance(std::size_t d) {
  positions_.resize(d);
  choice_.assign(d, 0);
  for (std::size_t k = 0; k < d; ++k) positions_[k] = k;
  const bool usable = std::all_of(positions_.begin(), positions_.end(),
                                  [&](std::size_t p) { return !alternatives_[p].empty(); });
  return usable || advance_positions();
}

bool BallEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    distance_ = 0;
    current_ = center_;
    return true;
  }
  if (distance_ > 0 && (advance_values() || advance_positions())) {
    load_point();
    return true;
  }
  while (distance_ < radius_) {
    ++distance_;
    if (start_distance(distance_)) {
      load_point();
      return true;
    }
  }
  done_ = true;
  return false;
}

// ---------------------------------------------------------------------------
// GridEnumerator

GridEnumerator::GridEnumerator(const RectangularDomain& q) : domain_(&q), digits_(q.dimension(), 0) {
  current_.reserve(q.dimension());
  for (std::size_t i = 0; i < q.dimension(); ++i) current_.push_back(q.set(i)[0]);
}

bool GridEnumerator::next() {
  if (!started_) {
    started_ = true;
    return true;
  }
  for (std::size_t i = digits_.size(); i-- > 0;) {
    if (++digits_[i] < domain_->set(i).size()) {
      current_[i] = domain_->set(i)[digits_[i]];
      return true;
    }
    digits_[i] = 0;
    current_[i] = domain_->set(i)[0];
  }
  return false;
}

// ---------------------------------------------------------------------------

BigInt vol(std::uint64_t s, std::uint64_t n, double k) {
  if (s < 1) throw std::invalid_argument("vol: alphabet size must be at least 1");
  if (!(k >= 0.0)) throw std::invalid_argument("vol: radius must be non-negative");
  const auto kk = static_cast<std::uint64_t>(std::floor(k));
  const std::uint64_t top = std::min(kk, n);
  BigInt total = 0;
  BigInt power = 1;
  for (std::uint64_t i = 0; i <= top; ++i) {
    total += binomial(n, i) * power;
    power *= (s - 1);
  }
  return total;
}

double entropy(std::uint64_t s, double x) {
  if (s < 2) throw std::invalid_argument("entropy: alphabet size must be at least 2");
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("entropy: argument outside [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  const double ls = std::log(static_cast<double>(s));
  return (x * std::log(static_cast<double>(s - 1)) - x * std::log(x) - (1.0 - x) * std::log1p(-x)) / ls;
}

}  // namespace sparsezt
