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

#include "sparsezt/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace sparsezt {

namespace {

// Coefficient vectors over GF(p), lowest degree first. Only used while
// constructing a field; element arithmetic afterwards goes through tables.
using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Remainder of num modulo a monic den over GF(p).
Coeffs poly_rem(Coeffs num, const Coeffs& den, std::uint32_t p) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  while (num.size() > dd) {
    const std::uint32_t lead = num.back();
    const std::size_t shift = num.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) {
      num[shift + i] = (num[shift + i] + (p - lead) * den[i]) % p;
    }
    trim(num);
  }
  return num;
}

Coeffs coeffs_from_index(std::uint64_t index, std::uint32_t p, std::size_t len) {
  Coeffs c(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    c[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return c;
}

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const Coeffs& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs g = coeffs_from_index(idx, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree k, comparing the
// constant coefficient first.
Coeffs smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    // rank's most significant base-p digit is c_0.
    Coeffs f(k + 1, 0);
    std::uint64_t r = rank;
    for (std::uint32_t i = k; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(r % p);
      r /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Field

Field::Field(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  q_ = static_cast<std::uint32_t>(q);
  modulus_ = smallest_irreducible(p, k);

  const std::uint32_t m = q_ - 1;
  exp_.assign(m, 0);
  log_.assign(q_, m);
  // The smallest index whose powers cover the whole multiplicative group.
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1;
    std::uint32_t n = 0;
    do {
      if (n < m) exp_[n] = x;
      x = poly_mul_mod(x, g);
      ++n;
    } while (x != 1 && n <= m);
    if (n == m) break;
  }
  for (std::uint32_t n = 0; n < m; ++n) log_[exp_[n]] = n;

  zech_.assign(q_, m);
  for (std::uint32_t n = 0; n < m; ++n) zech_[n] = log_[digit_add(1, exp_[n])];
  minus_one_log_ = (p_ == 2) ? 0 : m / 2;
}

std::uint32_t Field::digit_add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  std::uint32_t result = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    result += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return result;
}

std::uint32_t Field::poly_mul_mod(std::uint32_t a, std::uint32_t b) const {
  const Coeffs ca = coeffs_from_index(a, p_, k_);
  const Coeffs cb = coeffs_from_index(b, p_, k_);
  Coeffs prod(2 * k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    for (std::uint32_t j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
    }
  }
  const Coeffs r = poly_rem(prod, modulus_, p_);
  std::uint32_t index = 0;
  for (std::size_t i = r.size(); i-- > 0;) index = index * p_ + r[i];
  return index;
}

std::string Field::name() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

FieldElement Field::element(std::uint32_t index) const {
  if (index >= q_) {
    throw std::out_of_range("element index " + std::to_string(index) + " out of range for " +
                            name());
  }
  return FieldElement(*this, index);
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out.emplace_back(*this, i);
  return out;
}

std::vector<FieldElement> Field::nonzero_elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_ - 1);
  for (std::uint32_t i = 1; i < q_; ++i) out.emplace_back(*this, i);
  return out;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t m = q_ - 1;
  const std::uint32_t la = log_[a];
  const std::uint32_t lb = log_[b];
  const std::uint32_t z = zech_[(lb + m - la) % m];
  if (z == m) return 0;
  return exp_[(la + z) % m];
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (a == 0 || p_ == 2) return a;
  return exp_[(log_[a] + minus_one_log_) % (q_ - 1)];
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("division by zero in " + name());
  const std::uint32_t m = q_ - 1;
  return exp_[(m - log_[a]) % m];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t m = q_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % m)) % m];
}

const Field& make_field(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(k) +
                                  " exceeds the 2^20 cap");
    }
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[{p, k}];
  if (!slot) slot.reset(new Field(p, k));
  return *slot;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const Field& field, std::uint32_t index) : field_(&field), index_(index) {}

void FieldElement::check_same_field(const FieldElement& rhs) const {
  if (field_ != rhs.field_) throw std::invalid_argument("field elements from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_same_field(rhs);
  return {*field_, field_->add(index_, rhs.index_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  check_same_field(rhs);
  return {*field_, field_->sub(index_, rhs.index_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same_field(rhs);
  return {*field_, field_->mul(index_, rhs.index_)};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  check_same_field(rhs);
  return {*field_, field_->mul(index_, field_->inv(rhs.index_))};
}

FieldElement FieldElement::operator-() const { return {*field_, field_->neg(index_)}; }

FieldElement FieldElement::inverse() const { return {*field_, field_->inv(index_)}; }

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  return {*field_, field_->pow(index_, exponent)};
}

// ---------------------------------------------------------------------------

std::uint64_t mul_order(const FieldElement& x) {
  if (x.is_zero()) throw std::domain_error("multiplicative order of zero is undefined");
  const std::uint64_t m = x.field().group_order();
  const std::uint64_t l = x.field().log(x.index());
  return m / std::gcd(l, m);
}

std::uint64_t max_ratio_order(std::span<const std::vector<FieldElement>> sets) {
  std::uint64_t r = 2;
  for (const auto& set : sets) {
    if (set.empty()) throw std::invalid_argument("max_ratio_order: empty coordinate set");
    for (const auto& u : set) {
      if (u.is_zero()) throw std::invalid_argument("max_ratio_order: zero in coordinate set");
      for (const auto& v : set) r = std::max(r, mul_order(u / v));
    }
  }
  return r;
}

std::vector<FieldElement> subgroup_of_order(const Field& field, std::uint64_t d) {
  const std::uint64_t m = field.group_order();
  if (d == 0 || m % d != 0) {
    throw std::invalid_argument("subgroup order " + std::to_string(d) + " does not divide " +
                                std::to_string(m));
  }
  const std::uint64_t step = m / d;
  std::vector<FieldElement> out;
  out.reserve(d);
  for (std::uint64_t j = 0; j < d; ++j) out.push_back(field.element(field.exp(step * j)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sparsezt
