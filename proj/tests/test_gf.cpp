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

#include <doctest.h>

#include <set>
#include <stdexcept>

#include "sparsezt/gf.hpp"

using namespace sparsezt;

namespace {

// Schoolbook product of base-p digit vectors reduced by the modulus; an
// independent route to the multiplication table.
std::uint32_t naive_mul(const Field& f, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = f.characteristic();
  const std::uint32_t k = f.degree();
  std::vector<std::uint32_t> da(k), db(k), prod(2 * k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  const auto& m = f.modulus();
  for (std::uint32_t d = 2 * k - 1; d >= k; --d) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * m[i]) % p;
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = k; i-- > 0;) out = out * p + prod[i];
  return out;
}

std::uint32_t naive_add(const Field& f, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = f.characteristic();
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < f.degree(); ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}, {17, 1}, {19, 1},
    {23, 1}, {5, 2}, {3, 3}, {29, 1}, {31, 1}, {2, 5}, {37, 1}, {41, 1}, {43, 1}, {47, 1}, {7, 2}, {53, 1},
    {59, 1}, {61, 1}, {2, 6}};

}  // namespace

TEST_CASE("prime field GF(3)") {
  const Field& f = make_field(3, 1);
  CHECK(f.order() == 3);
  CHECK(f.name() == "GF(3)");
  CHECK(f.elements().size() == 3);
  CHECK((f.element(2) + f.element(2)).index() == 1);
  CHECK((f.element(2) * f.element(2)).index() == 1);
  CHECK(&make_field(3, 1) == &f);
}

TEST_CASE("canonical moduli") {
  CHECK(make_field(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(make_field(2, 3).modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(make_field(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(make_field(2, 2).name() == "GF(2^2)");
}

TEST_CASE("GF(4) element encoding") {
  const Field& f = make_field(2, 2);
  const FieldElement w = f.element(2);
  CHECK((w * w).index() == 3);
  CHECK((w * w * w).is_one());
  CHECK((w + f.one()).index() == 3);
  CHECK(f.generator().index() == 2);
}

TEST_CASE("GF(9) exp/log bijection") {
  const Field& f = make_field(3, 2);
  std::set<std::uint32_t> seen;
  for (std::uint32_t n = 0; n < f.group_order(); ++n) {
    const std::uint32_t x = f.exp(n);
    CHECK(x != 0);
    CHECK(f.log(x) == n);
    seen.insert(x);
  }
  CHECK(seen.size() == 8);
  CHECK(f.log_table()[0] == f.zero_log());
  CHECK(f.generator().index() == 4);
}

TEST_CASE("make_field rejects bad input") {
  CHECK_THROWS_AS(make_field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 21), std::invalid_argument);
  CHECK_NOTHROW(make_field(2, 20));
}

TEST_CASE("field axioms on full tables, q <= 64") {
  for (auto [p, k] : kSmallFields) {
    const Field& f = make_field(p, k);
    CAPTURE(f.name());
    const std::uint32_t q = f.order();
    bool ok = true;
    for (std::uint32_t a = 0; a < q && ok; ++a) {
      if (a != 0 && f.mul(a, f.inv(a)) != 1) ok = false;
      if (f.add(a, f.neg(a)) != 0) ok = false;
      for (std::uint32_t b = 0; b < q && ok; ++b) {
        if (f.add(a, b) != naive_add(f, a, b)) ok = false;
        if (f.mul(a, b) != naive_mul(f, a, b)) ok = false;
        for (std::uint32_t c = 0; c < q && ok; c += (q > 32 ? 7 : 1)) {
          if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) ok = false;
          if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) ok = false;
          if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) ok = false;
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("element operators") {
  const Field& f = make_field(5, 1);
  const FieldElement two = f.element(2);
  CHECK((two / two).is_one());
  CHECK((-two).index() == 3);
  CHECK((two - f.element(4)).index() == 3);
  CHECK(two.pow(4).is_one());
  CHECK(two.pow(0).is_one());
  CHECK(f.zero().pow(0).is_one());
  CHECK(f.zero().pow(3).is_zero());
  CHECK(two.inverse().index() == 3);
  CHECK_THROWS(f.zero().inverse());
  CHECK_THROWS_AS(f.element(5), std::out_of_range);
  CHECK_THROWS_AS(two + make_field(7, 1).element(2), std::invalid_argument);
}

TEST_CASE("mul_order") {
  CHECK(mul_order(make_field(7, 1).one()) == 1);
  CHECK(mul_order(make_field(2, 2).element(2)) == 3);
  CHECK(mul_order(make_field(5, 1).element(2)) == 4);
  CHECK_THROWS(mul_order(make_field(5, 1).zero()));
  for (auto [p, k] : kSmallFields) {
    const Field& f = make_field(p, k);
    for (const auto& x : f.nonzero_elements()) {
      const std::uint64_t n = mul_order(x);
      CHECK(f.group_order() % n == 0);
      CHECK(x.pow(n).is_one());
    }
  }
}

TEST_CASE("max_ratio_order") {
  const Field& f5 = make_field(5, 1);
  const Field& f4 = make_field(2, 2);
  std::vector<std::vector<FieldElement>> singles = {{f5.element(3)}, {f5.element(1)}};
  CHECK(max_ratio_order(singles) == 2);
  std::vector<std::vector<FieldElement>> full = {f5.nonzero_elements()};
  CHECK(max_ratio_order(full) == 4);
  std::vector<std::vector<FieldElement>> pair = {{f4.element(2), f4.element(3)}};
  CHECK(max_ratio_order(pair) == 3);
  std::vector<std::vector<FieldElement>> with_zero = {{f5.zero(), f5.one()}};
  CHECK_THROWS(max_ratio_order(with_zero));
  std::vector<std::vector<FieldElement>> empty = {{}};
  CHECK_THROWS(max_ratio_order(empty));
}

TEST_CASE("subgroup_of_order") {
  const Field& f7 = make_field(7, 1);
  auto idx = [](const std::vector<FieldElement>& s) {
    std::vector<std::uint32_t> out;
    for (const auto& x : s) out.push_back(x.index());
    return out;
  };
  CHECK(idx(subgroup_of_order(f7, 1)) == std::vector<std::uint32_t>{1});
  CHECK(idx(subgroup_of_order(f7, 3)) == std::vector<std::uint32_t>{1, 2, 4});
  CHECK(idx(subgroup_of_order(make_field(2, 2), 3)) == std::vector<std::uint32_t>{1, 2, 3});
  CHECK_THROWS(subgroup_of_order(f7, 4));
  for (auto [p, k] : kSmallFields) {
    const Field& f = make_field(p, k);
    for (std::uint64_t d = 1; d <= f.group_order(); ++d) {
      if (f.group_order() % d != 0) continue;
      const auto s = subgroup_of_order(f, d);
      CHECK(s.size() == d);
      const auto ids = idx(s);
      const std::set<std::uint32_t> members(ids.begin(), ids.end());
      for (const auto& x : s) {
        CHECK(members.count(x.inverse().index()) == 1);
        for (const auto& y : s) CHECK(members.count((x * y).index()) == 1);
      }
    }
  }
}
