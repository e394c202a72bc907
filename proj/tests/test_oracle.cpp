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

#include "sparsezt/oracle.hpp"
#include "sparsezt/random.hpp"
#include "sparsezt/suites.hpp"
#include "support.hpp"

using namespace sparsezt;
using sparsezt::testing::brute_nonzeros;
using sparsezt::testing::linear;

namespace {

using Tuple = std::vector<std::uint32_t>;

SparsePoly product_of_linears(const Field& field, const Point& a) {
  const std::size_t n = a.size();
  SparsePoly f = SparsePoly::constant(field, n, field.one());
  for (std::size_t i = 0; i < n; ++i) f = f * linear(field, n, i, a[i]);
  return f;
}

}  // namespace

TEST_CASE("nonzero_set and is_absorbing examples") {
  const Field& f5 = make_field(5, 1);
  const Point a{f5.element(1), f5.element(2), f5.element(3)};
  const Point b{f5.element(4), f5.element(4), f5.element(1)};
  const RectangularDomain q(f5, {{a[0], b[0]}, {a[1], b[1]}, {a[2], b[2]}});
  const SparsePoly f = product_of_linears(f5, a);
  const auto w = nonzero_set(f, q);
  REQUIRE(w.size() == 1);
  CHECK(w[0] == b);
  CHECK(count_nonzeros(f, q) == 1);
  CHECK(is_absorbing(f, a, q));
  CHECK_FALSE(is_absorbing(f, b, q));
  CHECK_FALSE(is_absorbing(SparsePoly::constant(f5, 3, f5.one()), a, q));
  CHECK(is_absorbing(SparsePoly(f5, 3), a, q));
  CHECK_THROWS(is_absorbing(f, Point(3, f5.zero()), q));
  CHECK_THROWS(nonzero_set(SparsePoly(f5, 2), q));
  CHECK_THROWS(count_nonzeros(SparsePoly(f5, 30), RectangularDomain::power(f5, {f5.one(), f5.element(2)}, 30)));
}

TEST_CASE("make_absorbing") {
  const Field& f7 = make_field(7, 1);
  const RectangularDomain q = RectangularDomain::power(f7, {f7.element(1), f7.element(3), f7.element(5)}, 2);
  const Point a{f7.element(3), f7.element(5)};
  CHECK(make_absorbing(SparsePoly(f7, 2), a, q).is_zero());
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const SparsePoly g = random_poly(f7, 2, rng.range(1, 4), 6, rng);
    const SparsePoly f = make_absorbing(g, a, q);
    CHECK(is_absorbing(f, a, q));
    for (std::size_t i = 0; i < 2; ++i) CHECK(f.degree_in_variable(i) < 3);
    CHECK(brute_nonzeros(f, q) == nonzero_set(f, q));
  }
}

TEST_CASE("coefficient bound on two-point domains") {
  const Field& f5 = make_field(5, 1);
  // a = (1,1), b = (4,4): ratio 4 has order 2.
  const Point a(2, f5.element(1));
  const Point b(2, f5.element(4));
  const RectangularDomain q = RectangularDomain::power(f5, {a[0], b[0]}, 2);
  const AbsorbingInstance inst{product_of_linears(f5, a), q, a, b};
  CHECK(verify_coeffs_bound(inst));
  const std::uint64_t r2[] = {2, 2};
  CHECK(verify_coeffs_bound(inst, r2));
  const std::uint64_t r3[] = {3, 2};
  CHECK_THROWS_AS(verify_coeffs_bound(inst, r3), HypothesisError);
  const AbsorbingInstance not_absorbing{SparsePoly::constant(f5, 2, f5.one()), q, a, b};
  CHECK_THROWS_AS(verify_coeffs_bound(not_absorbing), HypothesisError);
  const AbsorbingInstance no_b{inst.f, q, a, std::nullopt};
  CHECK_THROWS_AS(verify_coeffs_bound(no_b), HypothesisError);

  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const AbsorbingInstance g = suites::gen_two_point_absorbing(rng);
    CHECK(is_absorbing(g.f, g.a, g.q));
    CHECK_FALSE(g.f.evaluate(*g.b).is_zero());
    CHECK(verify_coeffs_bound(g));
  }
}

TEST_CASE("subgroup bound") {
  const Field& f7 = make_field(7, 1);
  const auto s = subgroup_of_order(f7, 3);
  const Point a(2, s[1]);
  const RectangularDomain q = RectangularDomain::power(f7, s, 2);
  const SparsePoly f = make_absorbing(SparsePoly::constant(f7, 2, f7.one()), a, q);
  CHECK(verify_kw_bound(f, s, a));
  CHECK_THROWS_AS(verify_kw_bound(f, {f7.element(1), f7.element(3)}, a), HypothesisError);
  CHECK_THROWS_AS(verify_kw_bound(SparsePoly::constant(f7, 2, f7.one()), s, a), HypothesisError);
  Rng rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = suites::gen_subgroup_absorbing(rng);
    CHECK(verify_kw_bound(inst.f, inst.s, inst.a));
  }
}

TEST_CASE("degree-bounded and zero-pair bounds") {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const AbsorbingInstance d = suites::gen_degree_bounded_absorbing(rng);
    CHECK(verify_redcoeffs(d.f, d.q, d.a));
    const AbsorbingInstance z = suites::gen_zero_pair_absorbing(rng);
    CHECK(verify_coeffs2(z.f, z.q, z.a));
  }
  const Field& f5 = make_field(5, 1);
  const RectangularDomain z(f5, {{f5.zero(), f5.element(2)}});
  const SparsePoly x = SparsePoly::variable(f5, 1, 0);
  CHECK_THROWS_AS(verify_coeffs2(x, z, Point{f5.element(2)}), HypothesisError);
  const SparsePoly ok = linear(f5, 1, 0, f5.element(2));
  CHECK(verify_coeffs2(ok, z, Point{f5.element(2)}));
  const RectangularDomain nz(f5, {{f5.element(1), f5.element(2)}});
  CHECK_THROWS_AS(verify_redcoeffs(SparsePoly::term(f5, {2}, f5.one()), nz, Point{f5.one()}), HypothesisError);
}

TEST_CASE("density bounds") {
  const Field& f3 = make_field(3, 1);
  const std::vector<FieldElement> s = {f3.one(), f3.element(2)};
  const SparsePoly one = SparsePoly::constant(f3, 4, f3.one());
  const DensityCheck c = verify_density_bounds(one, s, 4);
  CHECK(c.nonzeros == 16);
  CHECK(c.k == 0);
  CHECK(c.all_hold());
  CHECK_THROWS_AS(verify_density_bounds(SparsePoly(f3, 2), s, 2), HypothesisError);
  CHECK_THROWS_AS(verify_density_bounds(one, {f3.one()}, 4), HypothesisError);
  CHECK(verify_2elements_density(one, RectangularDomain::power(f3, s, 4), 2));
  CHECK_THROWS_AS(verify_2elements_density(one, RectangularDomain::power(f3, s, 4), 1), HypothesisError);

  Rng rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = suites::gen_density(rng);
    CHECK(verify_density_bounds(d.f, d.s, d.n).all_hold());
    const auto t = suites::gen_two_element_density(rng);
    CHECK(verify_2elements_density(t.f, t.q, t.r));
  }
}

TEST_CASE("alternating_difference") {
  const Field& f7 = make_field(7, 1);
  const Point a{f7.element(1), f7.element(2), f7.element(4)};
  const Point b{f7.element(3), f7.element(6), f7.element(5)};
  // For prod (X_i - a_i) only I = [N] survives.
  FieldElement expected = f7.one();
  for (std::size_t i = 0; i < 3; ++i) expected *= b[i] - a[i];
  CHECK(alternating_difference(product_of_linears(f7, a), a, b) == expected);
  // Polynomials missing a variable have zero difference.
  CHECK(alternating_difference(SparsePoly::term(f7, {3, 0, 2}, f7.one()), a, b).is_zero());
  CHECK_THROWS(alternating_difference(SparsePoly(f7, 25), Point(25, f7.one()), Point(25, f7.one())));

  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const SparsePoly g = random_poly(f7, 3, 4, 6, rng);
    const SparsePoly h = random_poly(f7, 3, 4, 6, rng);
    const FieldElement c = random_element(f7, rng);
    CHECK(alternating_difference(g + h.scalar_mul(c), a, b) ==
          alternating_difference(g, a, b) + c * alternating_difference(h, a, b));
  }
}

TEST_CASE("covering tuples") {
  const std::uint32_t r22[] = {2, 2};
  CHECK(find_covering_tuple({{0, 0}}, r22) == Tuple{0, 0});
  CHECK(find_covering_tuple({{1, 1}}, r22) == Tuple{0, 1});
  CHECK(find_covering_tuple({{0, 0}, {1, 1}}, r22) == Tuple{0, 1});
  CHECK_FALSE(find_covering_tuple({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, r22).has_value());
  CHECK(find_covering_tuple({}, r22) == Tuple{0, 0});
  CHECK_THROWS(find_covering_tuple({{0}}, r22));
  CHECK(covering_guaranteed(1, r22));
  CHECK(covering_guaranteed(3, r22));
  CHECK_FALSE(covering_guaranteed(4, r22));

  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.range(1, 4);
    std::vector<std::uint32_t> r(n);
    for (auto& v : r) v = static_cast<std::uint32_t>(rng.range(2, 4));
    std::vector<Tuple> s(rng.range(0, 6));
    for (auto& t : s) {
      t.resize(n);
      for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<std::uint32_t>(rng.below(r[i]));
    }
    const auto found = find_covering_tuple(s, r);
    if (covering_guaranteed(s.size(), r)) CHECK(found.has_value());
    if (found) {
      for (const auto& t : s) {
        bool agrees = false;
        for (std::size_t i = 0; i < n; ++i) agrees = agrees || t[i] == (*found)[i];
        CHECK(agrees);
      }
    }
  }
}

TEST_CASE("comb property") {
  const std::vector<Tuple> a2 = {{0, 1}, {0, 1}};
  const CombCheck full = check_comb_property({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, a2);
  CHECK(full.property);
  CHECK(full.bound);
  const CombCheck half = check_comb_property({{0, 0}, {1, 0}}, a2);
  CHECK_FALSE(half.property);
  CHECK_FALSE(half.bound);
  CHECK_FALSE(check_comb_property({}, a2).property);
  CHECK_THROWS(check_comb_property({{0, 2}}, a2));
  CHECK_THROWS(check_comb_property({{0}}, a2));
  // Larger grids: a comb need not be a subgrid.
  const std::vector<Tuple> a3 = {{0, 1, 2}, {0, 1, 2}};
  const CombCheck diag = check_comb_property({{0, 0}, {1, 1}, {0, 1}, {1, 0}, {2, 2}, {2, 0}, {0, 2}}, a3);
  CHECK(diag.property);
  CHECK(diag.bound);
}
