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

#include "sparsezt/poly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "sparsezt/domain.hpp"

namespace sparsezt {

SparsePoly::SparsePoly(const Field& field, std::size_t nvars) : field_(&field), nvars_(nvars) {}

SparsePoly SparsePoly::constant(const Field& field, std::size_t nvars, const FieldElement& c) {
  SparsePoly p(field, nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(const Field& field, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::out_of_range("variable index out of range");
  Monomial e(nvars, 0);
  e[i] = 1;
  SparsePoly p(field, nvars);
  p.add_term(e, field.one());
  return p;
}

SparsePoly SparsePoly::term(const Field& field, Monomial exps, const FieldElement& c) {
  SparsePoly p(field, exps.size());
  p.add_term(exps, c);
  return p;
}

FieldElement SparsePoly::coeff(const Monomial& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_->zero() : it->second;
}

void SparsePoly::add_term(const Monomial& e, const FieldElement& c) {
  if (e.size() != nvars_) {
    throw std::invalid_argument("exponent vector of length " + std::to_string(e.size()) +
                                " in a polynomial with " + std::to_string(nvars_) + " variables");
  }
  if (c.field_ptr() != field_) throw std::invalid_argument("coefficient from a foreign field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FieldElement SparsePoly::evaluate(std::span<const FieldElement> x) const {
  if (x.size() != nvars_) {
    throw std::invalid_argument("evaluation point has " + std::to_string(x.size()) +
                                " coordinates, polynomial has " + std::to_string(nvars_) +
                                " variables");
  }
  for (const auto& xi : x) {
    if (xi.field_ptr() != field_) throw std::invalid_argument("evaluation point from a foreign field");
  }
  FieldElement sum = field_->zero();
  for (const auto& [e, c] : terms_) {
    FieldElement t = c;
    for (std::size_t i = 0; i < nvars_ && !t.is_zero(); ++i) {
      if (e[i] == 0) continue;
      // Square-and-multiply on field elements.
      FieldElement base = x[i];
      FieldElement acc = field_->one();
      std::uint64_t n = e[i];
      while (n != 0) {
        if (n & 1U) acc *= base;
        n >>= 1U;
        if (n != 0) base *= base;
      }
      t *= acc;
    }
    sum += t;
  }
  return sum;
}

int SparsePoly::degree_in_variable(std::size_t i) const {
  if (i >= nvars_) throw std::out_of_range("variable index out of range");
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return static_cast<int>(d);
}

std::uint32_t SparsePoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t s = 0;
    for (auto ei : e) s += ei;
    d = std::max<std::uint32_t>(d, static_cast<std::uint32_t>(s));
  }
  return d;
}

void SparsePoly::check_compatible(const SparsePoly& rhs) const {
  if (field_ != rhs.field_) throw std::invalid_argument("polynomials over different fields");
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("polynomials with different variable counts");
}

SparsePoly SparsePoly::operator+(const SparsePoly& rhs) const {
  check_compatible(rhs);
  SparsePoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& rhs) const {
  check_compatible(rhs);
  SparsePoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
  return out;
}

SparsePoly SparsePoly::operator-() const { return scalar_mul(-field_->one()); }

namespace {

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
  if (a > std::numeric_limits<std::uint32_t>::max() - b) {
    throw std::overflow_error("exponent overflow");
  }
  return a + b;
}

}  // namespace

SparsePoly SparsePoly::operator*(const SparsePoly& rhs) const {
  check_compatible(rhs);
  SparsePoly out(*field_, nvars_);
  Monomial e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = checked_add(ea[i], eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePoly SparsePoly::scalar_mul(const FieldElement& c) const {
  if (c.field_ptr() != field_) throw std::invalid_argument("scalar from a foreign field");
  SparsePoly out(*field_, nvars_);
  if (c.is_zero()) return out;
  for (const auto& [e, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, a * c);
  return out;
}

SparsePoly SparsePoly::pow(std::uint64_t e) const {
  SparsePoly result = constant(*field_, nvars_, field_->one());
  SparsePoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::substitute(std::size_t i, const FieldElement& a) const {
  if (i >= nvars_) throw std::out_of_range("variable index out of range");
  if (a.field_ptr() != field_) throw std::invalid_argument("substituted value from a foreign field");
  SparsePoly out(*field_, nvars_ - 1);
  Monomial e(nvars_ - 1);
  for (const auto& [ex, c] : terms_) {
    std::copy(ex.begin(), ex.begin() + static_cast<std::ptrdiff_t>(i), e.begin());
    std::copy(ex.begin() + static_cast<std::ptrdiff_t>(i) + 1, ex.end(),
              e.begin() + static_cast<std::ptrdiff_t>(i));
    out.add_term(e, c * a.pow(ex[i]));
  }
  return out;
}

SparsePoly reduce_exponents_mod(const SparsePoly& f, std::uint32_t d) {
  if (d < 1) throw std::invalid_argument("reduce_exponents_mod: modulus must be at least 1");
  SparsePoly out(f.field(), f.nvars());
  Monomial r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) r[i] = e[i] % d;
    out.add_term(r, c);
  }
  return out;
}

namespace {

using Univariate = std::vector<FieldElement>;  // coefficients, lowest degree first

// Remainder tables for X^e modulo a monic P of degree d = |A|.
class PowerRemainders {
 public:
  PowerRemainders(const Field& field, const std::vector<FieldElement>& roots) : field_(&field) {
    // P = prod (X - alpha)
    Univariate p{field.one()};
    for (const auto& alpha : roots) {
      Univariate next(p.size() + 1, field.zero());
      for (std::size_t j = 0; j < p.size(); ++j) {
        next[j + 1] += p[j];
        next[j] -= p[j] * alpha;
      }
      p = std::move(next);
    }
    degree_ = roots.size();
    // X^d = -(p_0 + ... + p_{d-1} X^{d-1}) mod P
    tail_.assign(degree_, field.zero());
    for (std::size_t j = 0; j < degree_; ++j) tail_[j] = -p[j];
  }

  std::size_t degree() const { return degree_; }

  // X^e mod P as d coefficients.
  Univariate remainder(std::uint64_t e) {
    auto it = cache_.find(e);
    if (it != cache_.end()) return it->second;
    Univariate r;
    if (e < degree_) {
      r.assign(degree_, field_->zero());
      r[e] = field_->one();
    } else {
      // Square-and-multiply in F[X]/(P).
      Univariate acc(degree_, field_->zero());
      acc[0] = field_->one();
      Univariate base(degree_, field_->zero());
      if (degree_ == 1) {
        base[0] = tail_[0];
      } else {
        base[1] = field_->one();
      }
      std::uint64_t n = e;
      while (n != 0) {
        if (n & 1U) acc = mulmod(acc, base);
        n >>= 1U;
        if (n != 0) base = mulmod(base, base);
      }
      r = std::move(acc);
    }
    cache_.emplace(e, r);
    return r;
  }

 private:
  Univariate mulmod(const Univariate& a, const Univariate& b) const {
    Univariate prod(2 * degree_, field_->zero());
    for (std::size_t i = 0; i < degree_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < degree_; ++j) prod[i + j] += a[i] * b[j];
    }
    // Fold degrees >= d from the top using X^d = tail.
    for (std::size_t k = 2 * degree_; k-- > degree_;) {
      const FieldElement c = prod[k];
      if (c.is_zero()) continue;
      prod[k] = field_->zero();
      for (std::size_t j = 0; j < degree_; ++j) prod[k - degree_ + j] += c * tail_[j];
    }
    prod.resize(degree_);
    return prod;
  }

  const Field* field_;
  std::size_t degree_ = 0;
  Univariate tail_;
  std::map<std::uint64_t, Univariate> cache_;
};

}  // namespace

SparsePoly reduce_mod_domain(const SparsePoly& f, const RectangularDomain& q) {
  if (&q.field() != &f.field()) {
    throw std::invalid_argument("reduce_mod_domain: domain over a different field");
  }
  if (q.dimension() != f.nvars()) {
    throw std::invalid_argument("reduce_mod_domain: domain dimension does not match variable count");
  }
  SparsePoly current = f;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    PowerRemainders rem(f.field(), q.set(i));
    if (current.degree_in_variable(i) < static_cast<int>(rem.degree())) continue;
    SparsePoly next(f.field(), f.nvars());
    for (const auto& [e, c] : current.terms()) {
      if (e[i] < rem.degree()) {
        next.add_term(e, c);
        continue;
      }
      const Univariate r = rem.remainder(e[i]);
      Monomial e2 = e;
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (r[j].is_zero()) continue;
        e2[i] = static_cast<std::uint32_t>(j);
        next.add_term(e2, c * r[j]);
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace sparsezt
