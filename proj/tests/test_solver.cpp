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

#include "sparsezt/random.hpp"
#include "sparsezt/solver.hpp"
#include "support.hpp"

using namespace sparsezt;
using sparsezt::testing::brute_solutions;
using sparsezt::testing::linear;
using sparsezt::testing::nearest;

namespace {

SparsePoly binomial(const Field& field, std::size_t n, const Monomial& e1, const FieldElement& c1,
                    const Monomial& e2, const FieldElement& c2) {
  SparsePoly f(field, n);
  f.add_term(e1, c1);
  f.add_term(e2, c2);
  return f;
}

}  // namespace

TEST_CASE("PolySystem construction") {
  const Field& f3 = make_field(3, 1);
  CHECK_THROWS(PolySystem({}));
  CHECK_THROWS(PolySystem({SparsePoly(f3, 2)}));
  CHECK_THROWS(PolySystem({SparsePoly::variable(f3, 2, 0), SparsePoly::variable(f3, 3, 0)}));
  CHECK_THROWS(PolySystem({SparsePoly::variable(f3, 2, 0), SparsePoly::variable(make_field(5, 1), 2, 0)}));
  const PolySystem sys({SparsePoly::variable(f3, 2, 0), linear(f3, 2, 1, f3.one())});
  CHECK(sys.size() == 2);
  CHECK(sys.monomial_counts() == std::vector<std::size_t>{1, 2});
  CHECK(sys.indicator_bound() == BigInt(2 * 5));
}

TEST_CASE("system_radius examples") {
  const Field& f3 = make_field(3, 1);
  const PolySystem one({SparsePoly::variable(f3, 3, 1)});
  const SystemRadius r1 = system_radius(one, 2);
  CHECK(r1.sharp == 1);
  CHECK(r1.closed_form == doctest::Approx(1.0));

  for (std::size_t r = 1; r <= 6; ++r) {
    std::vector<SparsePoly> polys;
    for (std::size_t i = 0; i < r; ++i) polys.push_back(SparsePoly::term(f3, Monomial{static_cast<std::uint32_t>(i), 1}, f3.one()));
    const SystemRadius sr = system_radius(PolySystem(polys), 2);
    CHECK(sr.sharp == r);
    CHECK(sr.sharp_clamped == std::min<std::size_t>(r, 2));
  }

  const Field& f4 = make_field(2, 2);
  const PolySystem two({binomial(f4, 2, {1, 0}, f4.one(), {0, 1}, f4.one()),
                        binomial(f4, 2, {1, 1}, f4.one(), {0, 0}, f4.element(2))});
  const SystemRadius r4 = system_radius(two, 3);
  CHECK(r4.indicator_bound == 81);
  CHECK(r4.sharp == 10);
  CHECK(r4.sharp_clamped == 2);
  // Closed form (2 + 3*2) / log2(3/2).
  CHECK(r4.closed_form == doctest::Approx(8.0 / std::log2(1.5)));
  CHECK(r4.closed_form_clamped == doctest::Approx(2.0));

  const Field& f2 = make_field(2, 1);
  CHECK_THROWS(system_radius(PolySystem({SparsePoly::variable(f2, 1, 0)}), 2));
}

TEST_CASE("indicator_value is one exactly on common zeros") {
  Rng rng(31);
  for (const Field* field : {&make_field(3, 1), &make_field(2, 2), &make_field(5, 1), &make_field(3, 2)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = rng.range(1, 3);
      std::vector<SparsePoly> polys;
      for (std::size_t i = 0, r = rng.range(1, 3); i < r; ++i) {
        SparsePoly f = random_poly(*field, n, rng.range(1, 3), 4, rng);
        if (f.is_zero()) f = SparsePoly::constant(*field, n, field->one());
        polys.push_back(f);
      }
      const PolySystem sys(polys);
      IndicatorOracle oracle(sys);
      for (const auto& x : sparsezt::testing::all_points(RectangularDomain::power(*field, field->elements(), n))) {
        bool common = true;
        for (const auto& f : polys) common = common && f.evaluate(x).is_zero();
        const FieldElement g = indicator_value(sys, x);
        CHECK(g == (common ? field->one() : field->zero()));
        CHECK(oracle.evaluate(x) == g);
      }
    }
  }
}

TEST_CASE("solve_near examples") {
  const Field& f3 = make_field(3, 1);
  const std::vector<FieldElement> s = {f3.one(), f3.element(2)};
  const RectangularDomain q = RectangularDomain::power(f3, s, 2);
  // x1 + 2 x2 = 0 means x1 = x2.
  const PolySystem sys({binomial(f3, 2, {1, 0}, f3.one(), {0, 1}, f3.element(2))});
  const SearchReport r = solve_near(sys, Point{f3.one(), f3.element(2)}, q);
  CHECK(r.kind == ReportKind::kSystem);
  CHECK(r.verdict == Verdict::kWitnessFound);
  CHECK(r.distance == 1u);
  CHECK(r.radius == 2);
  CHECK(r.monomial_bound == BigInt(5));

  const SearchReport at = solve_near(sys, Point{f3.element(2), f3.element(2)}, q);
  CHECK(at.distance == 0u);
  CHECK(at.evaluations == 1);

  const PolySystem bad({linear(f3, 2, 0, f3.zero()) - SparsePoly::variable(f3, 2, 1),
                        linear(f3, 2, 0, f3.one()) - SparsePoly::variable(f3, 2, 1)});
  const SearchReport none = solve_near(bad, Point{f3.one(), f3.one()}, q);
  CHECK(none.verdict == Verdict::kVanishes);
  CHECK(none.evaluations == 4);

  CHECK_THROWS(solve_near(sys, Point{f3.zero(), f3.one()}, q));
  const RectangularDomain z(f3, {{f3.zero(), f3.one()}, {f3.zero(), f3.one()}});
  CHECK_THROWS(solve_near(sys, Point{f3.one(), f3.one()}, z));
}

TEST_CASE("solve_near finds the nearest solution") {
  Rng rng(77);
  std::size_t solvable = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const Field& field = make_field(rng.pick(std::vector<std::uint32_t>{3, 5, 7}), 1);
    const std::size_t n = rng.range(1, 4);
    std::vector<std::vector<FieldElement>> sets;
    for (std::size_t i = 0; i < n; ++i) sets.push_back(random_subset(field.nonzero_elements(), rng.range(2, std::min<std::uint64_t>(3, field.group_order())), rng));
    const RectangularDomain q(field, sets);
    const auto grid = sparsezt::testing::all_points(q);
    const Point target = grid[rng.below(grid.size())];
    std::vector<SparsePoly> polys;
    for (std::size_t i = 0, r = rng.range(1, 2); i < r; ++i) {
      // Binomial c1 x^e1 + c2 x^e2 forced to vanish at target.
      Monomial e1(n), e2(n);
      for (auto& v : e1) v = static_cast<std::uint32_t>(rng.below(4));
      for (auto& v : e2) v = static_cast<std::uint32_t>(rng.below(4));
      if (e1 == e2) e2[0] += 1;
      const FieldElement c1 = random_nonzero(field, rng);
      const SparsePoly m1 = SparsePoly::term(field, e1, c1);
      const SparsePoly m2 = SparsePoly::term(field, e2, field.one());
      const FieldElement c2 = -(m1.evaluate(target) / m2.evaluate(target));
      polys.push_back(m1 + m2.scalar_mul(c2));
    }
    const PolySystem sys(polys);
    const Point anchor = grid[rng.below(grid.size())];
    const SearchReport r = solve_near(sys, anchor, q);
    const auto sols = brute_solutions(sys, q);
    REQUIRE_FALSE(sols.empty());
    ++solvable;
    REQUIRE(r.verdict == Verdict::kWitnessFound);
    CHECK(r.distance == nearest(sols, anchor));
    CHECK(*r.distance <= r.radius);
  }
  CHECK(solvable == 80);
}

TEST_CASE("solve_near_zero_domain") {
  const Field& f5 = make_field(5, 1);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<SparsePoly> polys;
    for (std::size_t i = 0; i < n; ++i) polys.push_back(SparsePoly::variable(f5, n, i));
    const Point a(n, f5.element(3));
    const SearchReport r = solve_near_zero_domain(PolySystem(polys), a);
    REQUIRE(r.verdict == Verdict::kWitnessFound);
    CHECK(r.distance == n);
    CHECK(*r.witness == Point(n, f5.zero()));
  }
  const PolySystem shifted({linear(f5, 2, 0, f5.one())});
  CHECK_THROWS_WITH(solve_near_zero_domain(shifted, Point{f5.one(), f5.one()}), "the origin is not a solution");
  const PolySystem ok({SparsePoly::variable(f5, 2, 0)});
  CHECK_THROWS(solve_near_zero_domain(ok, Point{f5.zero(), f5.one()}));
  CHECK_THROWS(solve_near_zero_domain(ok, Point{f5.one()}));

  Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.range(1, 5);
    Point a;
    std::vector<std::vector<FieldElement>> sets;
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back(random_nonzero(f5, rng));
      sets.push_back({f5.zero(), a.back()});
    }
    std::vector<SparsePoly> polys;
    for (std::size_t i = 0, r = rng.range(1, 2); i < r; ++i) {
      SparsePoly f = random_poly(f5, n, rng.range(1, 3), 5, rng);
      f.add_term(Monomial(n, 0), -f.evaluate(Point(n, f5.zero())));
      if (f.is_zero()) f = SparsePoly::variable(f5, n, 0);
      polys.push_back(f);
    }
    const PolySystem sys(polys);
    const SearchReport r = solve_near_zero_domain(sys, a);
    const auto sols = brute_solutions(sys, RectangularDomain(f5, sets));
    REQUIRE(r.verdict == Verdict::kWitnessFound);
    CHECK(r.distance == nearest(sols, a));
  }
}

TEST_CASE("check_not_singleton") {
  const Field& f3 = make_field(3, 1);
  const std::vector<FieldElement> s = {f3.one(), f3.element(2)};
  auto system_for = [&](std::size_t n) {
    return PolySystem({binomial(f3, n, Monomial(n, 0), f3.one(), Monomial(n, 1), f3.element(2)),
                       binomial(f3, n, Monomial(n, 2), f3.one(), Monomial(n, 0), f3.element(2))});
  };
  const NonSingletonCheck c7 = check_not_singleton(system_for(7), RectangularDomain::power(f3, s, 7));
  CHECK(c7.applicable);
  CHECK(c7.threshold == doctest::Approx(6.0));
  CHECK_FALSE(check_not_singleton(system_for(6), RectangularDomain::power(f3, s, 6)).applicable);
  CHECK_FALSE(check_not_singleton(system_for(1), RectangularDomain::power(f3, s, 1)).applicable);

  CHECK_THROWS(check_not_singleton(system_for(2), RectangularDomain(f3, {{f3.one()}, s})));
  CHECK_THROWS(check_not_singleton(system_for(2), RectangularDomain::power(f3, {f3.zero(), f3.one()}, 2)));

  // Whenever it applies, brute force never finds exactly one solution.
  const auto sols = brute_solutions(system_for(7), RectangularDomain::power(f3, s, 7));
  CHECK(sols.size() != 1);
}
