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
#include <random>
#include <stdexcept>
#include <vector>

#include "sparsezt/gf.hpp"
#include "sparsezt/poly.hpp"

namespace sparsezt {

/// Seeded generator with portable integer sampling, so a seed reproduces
/// the same instances on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x = 0;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi].
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (engine_() >> 63U) != 0; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

inline FieldElement random_element(const Field& field, Rng& rng) {
  return field.element(static_cast<std::uint32_t>(rng.below(field.order())));
}

inline FieldElement random_nonzero(const Field& field, Rng& rng) {
  return field.element(static_cast<std::uint32_t>(1 + rng.below(field.order() - 1)));
}

/// k distinct elements of pool, in random order.
inline std::vector<FieldElement> random_subset(std::vector<FieldElement> pool, std::size_t k, Rng& rng) {
  if (k > pool.size()) throw std::invalid_argument("random_subset: k larger than pool");
  rng.shuffle(pool);
  pool.resize(k);
  return pool;
}

/// Up to `terms` random terms with exponents in [0, max_exp] and nonzero
/// coefficients (collisions may merge or cancel terms).
inline SparsePoly random_poly(const Field& field, std::size_t nvars, std::size_t terms,
                              std::uint32_t max_exp, Rng& rng) {
  SparsePoly f(field, nvars);
  Monomial e(nvars);
  for (std::size_t t = 0; t < terms; ++t) {
    for (auto& ei : e) ei = static_cast<std::uint32_t>(rng.below(max_exp + 1ULL));
    f.add_term(e, random_nonzero(field, rng));
  }
  return f;
}

}  // namespace sparsezt
