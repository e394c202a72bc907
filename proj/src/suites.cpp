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

#include "sparsezt/suites.hpp"

#include <algorithm>
#include <functional>

#include "sparsezt/io.hpp"

namespace sparsezt::suites {

namespace {

using nlohmann::json;

// Keeps dense reduced instances cheap to scan exhaustively.
constexpr std::uint64_t kDenseGridCap = 1024;
constexpr std::uint64_t kSparseGridCap = 20000;

std::vector<std::uint64_t> divisors_from_two(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

const Field& pick_field(Rng& rng) { return *rng.pick(suite_fields()); }

std::size_t max_dim(std::uint64_t side, std::size_t hi, std::uint64_t cap) {
  std::size_t n = 1;
  std::uint64_t size = side;
  while (n < hi && size * side <= cap) {
    size *= side;
    ++n;
  }
  return n;
}

SparsePoly linear_product(const Field& field, const Point& a) {
  const std::size_t n = a.size();
  SparsePoly f = SparsePoly::constant(field, n, field.one());
  for (std::size_t i = 0; i < n; ++i) {
    f = f * (SparsePoly::variable(field, n, i) - SparsePoly::constant(field, n, a[i]));
  }
  return f;
}

// Random g with g(b) != 0.
SparsePoly nonvanishing_at(const Field& field, const Point& b, std::uint32_t max_exp, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    SparsePoly g = random_poly(field, b.size(), rng.range(1, 4), max_exp, rng);
    if (!g.evaluate(b).is_zero()) return g;
  }
  return SparsePoly::constant(field, b.size(), field.one());
}

// Adds a random multiple of `period` to every exponent; on points whose
// coordinates satisfy x^period = 1 the values do not change.
SparsePoly shift_exponents(const SparsePoly& f, std::uint32_t period, Rng& rng) {
  SparsePoly out(f.field(), f.nvars());
  for (const auto& [e, c] : f.terms()) {
    Monomial shifted = e;
    for (auto& ei : shifted) ei += period * static_cast<std::uint32_t>(rng.below(3));
    out.add_term(shifted, c);
  }
  return out;
}

Point pick_other(const std::vector<std::vector<FieldElement>>& sets, const Point& a, Rng& rng) {
  Point b;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<FieldElement> rest;
    for (const auto& x : sets[i]) {
      if (x != a[i]) rest.push_back(x);
    }
    b.push_back(rng.pick(rest));
  }
  return b;
}

json instance_json(const SparsePoly& f, const RectangularDomain* q, const Point* a, const Point* b) {
  json out = {{"poly", io::poly_to_json(f)}, {"text", io::format_poly(f)}};
  if (q != nullptr) out["domain"] = io::domain_to_json(*q);
  if (a != nullptr) out["a"] = io::element_list(*a);
  if (b != nullptr) out["b"] = io::element_list(*b);
  return out;
}

json instance_json(const AbsorbingInstance& inst) {
  return instance_json(inst.f, &inst.q, &inst.a, inst.b ? &*inst.b : nullptr);
}

// Runs `check` per instance. check returns an empty json when the bound holds
// and a description of the observed values otherwise.
SuiteResult run_suite(const std::string& name, std::uint64_t salt, const SuiteConfig& config,
                      const std::function<json(Rng&, json&)>& check) {
  SuiteResult result;
  result.name = name;
  Rng rng(config.seed ^ (0x9E3779B97F4A7C15ULL * (salt + 1)));
  for (std::size_t i = 0; i < config.per_theorem; ++i) {
    json instance;
    json observed;
    try {
      observed = check(rng, instance);
    } catch (const HypothesisError& e) {
      observed = {{"hypothesis_error", e.what()}};
    }
    ++result.instances;
    if (!observed.is_null()) {
      ++result.failures;
      result.counterexamples.push_back({{"index", i}, {"instance", instance}, {"observed", observed}});
    }
  }
  return result;
}

}  // namespace

const std::vector<const Field*>& suite_fields() {
  static const std::vector<const Field*> fields = {&make_field(3, 1), &make_field(2, 2), &make_field(5, 1),
                                                   &make_field(7, 1), &make_field(3, 2)};
  return fields;
}

AbsorbingInstance gen_two_point_absorbing(Rng& rng) {
  const Field& field = pick_field(rng);
  const std::size_t n = rng.range(1, 6);
  Point a;
  Point b;
  std::vector<std::vector<FieldElement>> sets;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(random_nonzero(field, rng));
    FieldElement bi = a.back();
    while (bi == a.back()) bi = random_nonzero(field, rng);
    b.push_back(bi);
    sets.push_back({a.back(), bi});
  }
  RectangularDomain q(field, sets);
  const SparsePoly g = nonvanishing_at(field, b, field.group_order(), rng);
  const SparsePoly raw = g * linear_product(field, a);
  SparsePoly f(field, n);
  switch (rng.below(4)) {
    case 0: f = reduce_mod_domain(raw, q); break;
    case 1: f = raw; break;
    case 2: f = reduce_exponents_mod(raw, field.group_order()); break;
    default: f = shift_exponents(reduce_mod_domain(raw, q), field.group_order(), rng); break;
  }
  return AbsorbingInstance{std::move(f), std::move(q), std::move(a), std::move(b)};
}

SubgroupInstance gen_subgroup_absorbing(Rng& rng) {
  const Field& field = pick_field(rng);
  const std::uint64_t d = rng.pick(divisors_from_two(field.group_order()));
  const std::vector<FieldElement> s = subgroup_of_order(field, d);
  const std::size_t n = rng.range(1, max_dim(d, 6, kDenseGridCap));
  Point a;
  for (std::size_t i = 0; i < n; ++i) a.push_back(rng.pick(s));
  const RectangularDomain q = RectangularDomain::power(field, s, n);
  const Point b = pick_other(q.sets(), a, rng);
  const SparsePoly g = nonvanishing_at(field, b, static_cast<std::uint32_t>(d - 1), rng);
  SparsePoly f = make_absorbing(g, a, q);
  if (rng.coin()) f = shift_exponents(f, static_cast<std::uint32_t>(d), rng);
  return SubgroupInstance{std::move(f), s, std::move(a)};
}

AbsorbingInstance gen_degree_bounded_absorbing(Rng& rng) {
  const Field& field = pick_field(rng);
  std::size_t n = rng.range(1, 5);
  std::vector<std::vector<FieldElement>> sets;
  Point a;
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = rng.range(2, std::min<std::uint64_t>(field.order(), 4));
    if (size * k > kDenseGridCap) break;
    size *= k;
    sets.push_back(random_subset(field.elements(), k, rng));
    std::vector<FieldElement> nonzero;
    for (const auto& x : sets.back()) {
      if (!x.is_zero()) nonzero.push_back(x);
    }
    a.push_back(rng.pick(nonzero));
  }
  n = sets.size();
  RectangularDomain q(field, sets);
  Point b = pick_other(q.sets(), a, rng);
  const SparsePoly g = nonvanishing_at(field, b, field.group_order(), rng);
  SparsePoly f = make_absorbing(g, a, q);
  return AbsorbingInstance{std::move(f), std::move(q), std::move(a), std::move(b)};
}

AbsorbingInstance gen_zero_pair_absorbing(Rng& rng) {
  const Field& field = pick_field(rng);
  const std::size_t n = rng.range(1, 6);
  Point a;
  std::vector<std::vector<FieldElement>> sets;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(random_nonzero(field, rng));
    sets.push_back({field.zero(), a.back()});
  }
  RectangularDomain q(field, sets);
  const Point origin(n, field.zero());
  SparsePoly g = random_poly(field, n, rng.range(1, 4), 2 * field.group_order(), rng);
  if (g.evaluate(origin).is_zero()) g.add_term(Monomial(n, 0), random_nonzero(field, rng));
  SparsePoly f = g * linear_product(field, a);
  if (rng.coin()) f = reduce_mod_domain(f, q);
  return AbsorbingInstance{std::move(f), std::move(q), std::move(a), origin};
}

TwoElementInstance gen_two_element_density(Rng& rng) {
  const Field& field = pick_field(rng);
  const std::uint64_t r = rng.pick(divisors_from_two(field.group_order()));
  std::vector<FieldElement> roots;
  for (const auto& z : subgroup_of_order(field, r)) {
    if (!z.is_one()) roots.push_back(z);
  }
  const std::size_t n = rng.range(1, 6);
  Point a;
  std::vector<std::vector<FieldElement>> sets;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(random_nonzero(field, rng));
    sets.push_back({a.back(), a.back() * rng.pick(roots)});
  }
  RectangularDomain q(field, sets);
  while (true) {
    SparsePoly f(field, n);
    switch (rng.below(4)) {
      case 0: f = random_poly(field, n, rng.range(1, 12), 2 * field.group_order(), rng); break;
      case 1: f = make_absorbing(SparsePoly::constant(field, n, random_nonzero(field, rng)), a, q); break;
      case 2: {
        f = random_poly(field, n, 1, field.group_order(), rng);
        for (std::size_t i = 0; i < n; ++i) {
          if (rng.coin()) {
            f = f * (SparsePoly::variable(field, n, i) - SparsePoly::constant(field, n, a[i]));
          }
        }
        break;
      }
      default: f = random_poly(field, n, 1, field.group_order(), rng); break;
    }
    if (count_nonzeros(f, q) > 0) return TwoElementInstance{std::move(f), std::move(q), r};
  }
}

DensityInstance gen_density(Rng& rng) {
  const Field& field = pick_field(rng);
  std::vector<FieldElement> nonzero = field.nonzero_elements();
  const std::size_t s_size = rng.range(2, std::min<std::size_t>(nonzero.size(), 5));
  std::vector<FieldElement> s = random_subset(nonzero, s_size, rng);
  std::sort(s.begin(), s.end());
  const std::size_t n = rng.range(1, max_dim(s_size, 5, kSparseGridCap));
  const RectangularDomain q = RectangularDomain::power(field, s, n);
  while (true) {
    SparsePoly f(field, n);
    switch (rng.below(4)) {
      case 0: f = random_poly(field, n, rng.range(1, 12), field.group_order(), rng); break;
      case 1: {
        // Products of one-point indicators on S: few nonzeros, many terms.
        f = SparsePoly::constant(field, n, random_nonzero(field, rng));
        for (std::size_t i = 0; i < n; ++i) {
          if (f.monomial_count() * s_size > 50 || !rng.coin()) continue;
          const FieldElement keep = rng.pick(s);
          for (const auto& x : s) {
            if (x != keep) f = f * (SparsePoly::variable(field, n, i) - SparsePoly::constant(field, n, x));
          }
        }
        break;
      }
      case 2: f = random_poly(field, n, 1, 3 * field.group_order(), rng); break;
      default: f = random_poly(field, n, rng.range(2, 30), 3 * field.group_order(), rng); break;
    }
    if (count_nonzeros(f, q) > 0) return DensityInstance{std::move(f), std::move(s), n};
  }
}

json SuiteResult::to_json() const {
  return {{"name", name},
          {"instances", instances},
          {"failures", failures},
          {"counterexamples", counterexamples},
          {"stats", stats}};
}

SuiteResult run_coeffs_suite(const SuiteConfig& config) {
  return run_suite("two-point-absorbing", 1, config, [](Rng& rng, json& instance) -> json {
    const AbsorbingInstance inst = gen_two_point_absorbing(rng);
    instance = instance_json(inst);
    if (verify_coeffs_bound(inst)) return nullptr;
    return {{"claimed", "M(f) prod (r_i - 1) >= prod r_i"}, {"monomials", inst.f.monomial_count()}};
  });
}

SuiteResult run_subgroup_suite(const SuiteConfig& config) {
  return run_suite("subgroup-absorbing", 2, config, [](Rng& rng, json& instance) -> json {
    const SubgroupInstance inst = gen_subgroup_absorbing(rng);
    instance = instance_json(inst.f, nullptr, &inst.a, nullptr);
    instance["subgroup"] = io::element_list(inst.s);
    if (verify_kw_bound(inst.f, inst.s, inst.a)) return nullptr;
    return {{"claimed", "M(f) (d-1)^N >= d^N"}, {"monomials", inst.f.monomial_count()}};
  });
}

SuiteResult run_redcoeffs_suite(const SuiteConfig& config) {
  return run_suite("degree-bounded-absorbing", 3, config, [](Rng& rng, json& instance) -> json {
    const AbsorbingInstance inst = gen_degree_bounded_absorbing(rng);
    instance = instance_json(inst);
    if (verify_redcoeffs(inst.f, inst.q, inst.a)) return nullptr;
    return {{"claimed", "M(f) >= 2^N"}, {"monomials", inst.f.monomial_count()}};
  });
}

SuiteResult run_coeffs2_suite(const SuiteConfig& config) {
  return run_suite("zero-pair-absorbing", 4, config, [](Rng& rng, json& instance) -> json {
    const AbsorbingInstance inst = gen_zero_pair_absorbing(rng);
    instance = instance_json(inst);
    if (verify_coeffs2(inst.f, inst.q, inst.a)) return nullptr;
    return {{"claimed", "M(f) >= 2^N"}, {"monomials", inst.f.monomial_count()}};
  });
}

SuiteResult run_two_element_density_suite(const SuiteConfig& config) {
  return run_suite("two-element-density", 5, config, [](Rng& rng, json& instance) -> json {
    const TwoElementInstance inst = gen_two_element_density(rng);
    instance = instance_json(inst.f, &inst.q, nullptr, nullptr);
    instance["r"] = inst.r;
    if (verify_2elements_density(inst.f, inst.q, inst.r)) return nullptr;
    return {{"claimed", "|W| >= 2^(N - log_t M)"},
            {"monomials", inst.f.monomial_count()},
            {"nonzeros", count_nonzeros(inst.f, inst.q)}};
  });
}

SuiteResult run_density_suite(const SuiteConfig& config) {
  std::size_t q_applicable = 0;
  std::size_t q_failed = 0;
  std::size_t s_applicable = 0;
  std::size_t s_failed = 0;
  std::size_t volume_tight = 0;
  SuiteResult result = run_suite("density", 6, config, [&](Rng& rng, json& instance) -> json {
    const DensityInstance inst = gen_density(rng);
    instance = instance_json(inst.f, nullptr, nullptr, nullptr);
    instance["s"] = io::element_list(inst.s);
    const DensityCheck c = verify_density_bounds(inst.f, inst.s, inst.n);
    if (c.entropy_q) {
      ++q_applicable;
      q_failed += *c.entropy_q ? 0 : 1;
    }
    if (c.entropy_s) {
      ++s_applicable;
      s_failed += *c.entropy_s ? 0 : 1;
    }
    const BigInt lhs = BigInt(c.nonzeros) * vol(inst.s.size(), inst.n, static_cast<double>(c.k));
    if (lhs == big_pow(BigInt(inst.s.size()), inst.n)) ++volume_tight;
    if (c.all_hold()) return nullptr;
    json observed = {{"nonzeros", c.nonzeros}, {"monomials", c.monomials},   {"k", c.k},
                     {"volume_form", c.volume_form}, {"power_form", c.power_form}};
    observed["entropy_q"] = c.entropy_q ? json(*c.entropy_q) : json(nullptr);
    observed["entropy_s"] = c.entropy_s ? json(*c.entropy_s) : json(nullptr);
    return observed;
  });
  result.stats = {{"entropy_q_applicable", q_applicable},
                  {"entropy_q_failed", q_failed},
                  {"entropy_s_applicable", s_applicable},
                  {"entropy_s_failed", s_failed},
                  {"volume_form_tight", volume_tight}};
  return result;
}

SuiteResult run_alternating_difference_suite(const SuiteConfig& config) {
  return run_suite("alternating-difference", 7, config, [](Rng& rng, json& instance) -> json {
    const AbsorbingInstance inst = gen_two_point_absorbing(rng);
    instance = instance_json(inst);
    const FieldElement lhs = alternating_difference(inst.f, inst.a, *inst.b);
    const FieldElement rhs = inst.f.evaluate(*inst.b);
    if (lhs == rhs) return nullptr;
    return {{"alternating_difference", lhs.index()}, {"value_at_b", rhs.index()}};
  });
}

SuiteResult run_covering_suite(const SuiteConfig& config) {
  return run_suite("covering-tuple", 8, config, [](Rng& rng, json& instance) -> json {
    const std::size_t n = rng.range(1, 5);
    std::vector<std::uint32_t> r(n);
    std::uint64_t all = 1;
    std::uint64_t minus = 1;
    for (auto& ri : r) {
      ri = static_cast<std::uint32_t>(rng.range(2, 4));
      all *= ri;
      minus *= ri - 1;
    }
    const std::uint64_t most = (all - 1) / minus;
    std::vector<std::vector<std::uint32_t>> s(rng.range(0, most));
    for (auto& t : s) {
      for (auto ri : r) t.push_back(static_cast<std::uint32_t>(rng.below(ri)));
    }
    instance = {{"r", r}, {"s", s}};
    if (!covering_guaranteed(s.size(), r)) throw HypothesisError("generator broke the size condition");
    const auto found = find_covering_tuple(s, r);
    if (!found) return {{"found", nullptr}};
    for (const auto& t : s) {
      bool meets = false;
      for (std::size_t i = 0; i < n; ++i) meets = meets || t[i] == (*found)[i];
      if (!meets) return {{"found", *found}, {"misses", t}};
    }
    return nullptr;
  });
}

SuiteResult run_comb_suite(const SuiteConfig& config) {
  return run_suite("exponent-support", 9, config, [](Rng& rng, json& instance) -> json {
    const AbsorbingInstance inst = gen_degree_bounded_absorbing(rng);
    instance = instance_json(inst);
    std::vector<std::vector<std::uint32_t>> e;
    for (const auto& [m, c] : inst.f.terms()) e.push_back(m);
    std::vector<std::vector<std::uint32_t>> grid;
    for (const auto& set : inst.q.sets()) {
      std::vector<std::uint32_t> range(set.size());
      for (std::uint32_t i = 0; i < range.size(); ++i) range[i] = i;
      grid.push_back(std::move(range));
    }
    const CombCheck c = check_comb_property(e, grid);
    if (c.property && c.bound) return nullptr;
    return {{"property", c.property}, {"bound", c.bound}, {"support", e.size()}};
  });
}

std::vector<SuiteResult> run_all_suites(const SuiteConfig& config) {
  return {run_coeffs_suite(config),       run_subgroup_suite(config),
          run_redcoeffs_suite(config),    run_coeffs2_suite(config),
          run_two_element_density_suite(config), run_density_suite(config),
          run_alternating_difference_suite(config), run_covering_suite(config),
          run_comb_suite(config)};
}

json summary_json(const SuiteConfig& config, const std::vector<SuiteResult>& results) {
  json suites = json::array();
  bool all_pass = true;
  for (const auto& r : results) {
    suites.push_back(r.to_json());
    all_pass = all_pass && r.failures == 0;
  }
  return {{"seed", config.seed}, {"per_theorem", config.per_theorem}, {"suites", suites}, {"all_pass", all_pass}};
}

}  // namespace sparsezt::suites
