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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sparsezt {

class Field;

/// An element of a finite field, stored as its canonical index: the
/// coefficient vector in the polynomial basis read as a base-p integer,
/// lowest degree first. Index 0 is zero and index 1 is one.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field& field, std::uint32_t index);

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  std::uint32_t index() const { return index_; }
  bool is_zero() const { return index_ == 0; }
  bool is_one() const { return index_ == 1; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;

  bool operator==(const FieldElement& rhs) const {
    return field_ == rhs.field_ && index_ == rhs.index_;
  }
  // Canonical element order is index order.
  std::strong_ordering operator<=>(const FieldElement& rhs) const {
    return index_ <=> rhs.index_;
  }

 private:
  void check_same_field(const FieldElement& rhs) const;

  const Field* field_ = nullptr;
  std::uint32_t index_ = 0;
};

/// GF(p^k) with log/exp/Zech tables keyed by a fixed primitive element.
///
/// Instances are interned by make_field and live for the whole process, so
/// FieldElement can hold a plain pointer. All members are immutable after
/// construction and safe to read from any thread.
class Field {
 public:
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  /// q - 1, the order of the multiplicative group.
  std::uint32_t group_order() const { return q_ - 1; }
  /// Monic irreducible modulus, coefficients lowest degree first (size k+1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// "GF(p)" for prime fields, "GF(p^k)" otherwise.
  std::string name() const;

  FieldElement element(std::uint32_t index) const;
  FieldElement zero() const { return FieldElement(*this, 0); }
  FieldElement one() const { return FieldElement(*this, 1); }
  FieldElement generator() const { return FieldElement(*this, exp_[q_ > 2 ? 1 : 0]); }
  /// All elements in canonical order.
  std::vector<FieldElement> elements() const;
  std::vector<FieldElement> nonzero_elements() const;

  // Raw index arithmetic; no range checks.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  /// Discrete log of a nonzero element; log_table()[0] holds the sentinel q-1.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }
  std::uint32_t exp(std::uint64_t n) const { return exp_[n % (q_ - 1)]; }
  std::span<const std::uint32_t> log_table() const { return log_; }
  std::span<const std::uint32_t> exp_table() const { return exp_; }
  /// zech()[n] = log(1 + g^n), or the sentinel q-1 when 1 + g^n = 0.
  /// One padding entry at index q-1 maps to the sentinel.
  std::span<const std::uint32_t> zech_table() const { return zech_; }
  std::uint32_t zero_log() const { return q_ - 1; }

 private:
  friend const Field& make_field(std::uint32_t p, std::uint32_t k);
  Field(std::uint32_t p, std::uint32_t k);

  std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t poly_mul_mod(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::uint32_t minus_one_log_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
};

inline constexpr std::uint64_t kMaxFieldOrder = 1U << 20;

/// Canonical GF(p^k). Throws std::invalid_argument for non-prime p, k < 1,
/// or p^k above 2^20. Repeated calls return the same object.
const Field& make_field(std::uint32_t p, std::uint32_t k);

bool is_prime(std::uint64_t n);

/// Least n >= 1 with x^n = 1. Throws for x = 0.
std::uint64_t mul_order(const FieldElement& x);

/// max({ord(u/v) : u, v in A_i} ∪ {2}) over all coordinate sets.
/// Throws for an empty set or a set containing zero.
std::uint64_t max_ratio_order(std::span<const std::vector<FieldElement>> sets);

/// The unique multiplicative subgroup of order d, in canonical order.
std::vector<FieldElement> subgroup_of_order(const Field& field, std::uint64_t d);

}  // namespace sparsezt
