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
#include <string>
#include <vector>

#include <json.hpp>

#include "sparsezt/oracle.hpp"
#include "sparsezt/random.hpp"

// Seeded batches of hypothesis-satisfying instances for each lower bound,
// checked against the exhaustive oracles. Instances are built constructively
// (absorbing polynomials are far too rare to find by rejection).

namespace sparsezt::suites {

/// GF(3), GF(4), GF(5), GF(7), GF(9).
const std::vector<const Field*>& suite_fields();

/// Q = {a_i, b_i}^N zero-free, f absorbing at a with f(b) != 0.
AbsorbingInstance gen_two_point_absorbing(Rng& rng);

struct SubgroupInstance {
  SparsePoly f;
  std::vector<FieldElement> s;
  Point a;
};
/// S a subgroup of order d >= 2, f absorbing at a in S^N, not zero on S^N.
SubgroupInstance gen_subgroup_absorbing(Rng& rng);

/// deg_{X_i} f < |A_i|, a zero-free, f absorbing at a and nonzero on Q.
AbsorbingInstance gen_degree_bounded_absorbing(Rng& rng);

/// Q = {a_i, 0}^N, f absorbing at a, f(0) != 0.
AbsorbingInstance gen_zero_pair_absorbing(Rng& rng);

struct TwoElementInstance {
  SparsePoly f;
  RectangularDomain q;
  std::uint64_t r;
};
/// Q = {a_i, b_i}^N with a_i^r = b_i^r and f not vanishing on Q.
TwoElementInstance gen_two_element_density(Rng& rng);

struct DensityInstance {
  SparsePoly f;
  std::vector<FieldElement> s;
  std::size_t n;
};
/// S zero-free, |S| >= 2, f not vanishing on S^N.
DensityInstance gen_density(Rng& rng);

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::size_t per_theorem = 200;
};

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  nlohmann::json counterexamples = nlohmann::json::array();
  nlohmann::json stats = nlohmann::json::object();

  nlohmann::json to_json() const;
};

SuiteResult run_coeffs_suite(const SuiteConfig& config);
SuiteResult run_subgroup_suite(const SuiteConfig& config);
SuiteResult run_redcoeffs_suite(const SuiteConfig& config);
SuiteResult run_coeffs2_suite(const SuiteConfig& config);
SuiteResult run_two_element_density_suite(const SuiteConfig& config);
SuiteResult run_density_suite(const SuiteConfig& config);
SuiteResult run_alternating_difference_suite(const SuiteConfig& config);
SuiteResult run_covering_suite(const SuiteConfig& config);
SuiteResult run_comb_suite(const SuiteConfig& config);

std::vector<SuiteResult> run_all_suites(const SuiteConfig& config);

/// {"seed","per_theorem","suites":[...],"all_pass"}
nlohmann::json summary_json(const SuiteConfig& config, const std::vector<SuiteResult>& results);

}  // namespace sparsezt::suites
