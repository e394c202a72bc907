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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparsezt/bigint.hpp"
#include "sparsezt/domain.hpp"
#include "sparsezt/poly.hpp"

// Brute-force reference checks for the sparsity lower bounds. Everything here
// enumerates the domain exhaustively through the scalar kernel, independent
// of the dispatched search path.

namespace sparsezt {

/// A bound's hypothesis does not hold for the given instance.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest |Q| the exhaustive scans accept.
inline constexpr std::uint64_t kEnumerationCap = 1'000'000;

/// All x in Q with f(x) != 0, in grid order (last coordinate fastest).
std::vector<Point> nonzero_set(const SparsePoly& f, const RectangularDomain& q);
std::uint64_t count_nonzeros(const SparsePoly& f, const RectangularDomain& q);

/// f(x) = 0 for every x in Q sharing at least one coordinate with a.
bool is_absorbing(const SparsePoly& f, const Point& a, const RectangularDomain& q);

/// g * prod (X_i - a_i) reduced modulo the vanishing ideal of Q; absorbing at
/// a with deg_{X_i} < |A_i|.
SparsePoly make_absorbing(const SparsePoly& g, const Point& a, const RectangularDomain& q);

/// f absorbing at a for Q; when b is present, f(b) != 0.
struct AbsorbingInstance {
  SparsePoly f;
  RectangularDomain q;
  Point a;
  std::optional<Point> b;
};

/// Q = {a_1,b_1} x ... x {a_N,b_N} with a_i != b_i nonzero, a_i^{r_i} = b_i^{r_i},
/// f absorbing at a and f(b) prod b_i != 0. Checks M(f) prod (r_i - 1) >= prod r_i.
bool verify_coeffs_bound(const AbsorbingInstance& inst, std::span<const std::uint64_t> r);
/// Same with r_i = ord(b_i / a_i), the smallest valid choice.
bool verify_coeffs_bound(const AbsorbingInstance& inst);

/// S a multiplicative subgroup of order d, f absorbing at a in S^N and not
/// identically zero there. Checks M(f) (d-1)^N >= d^N.
bool verify_kw_bound(const SparsePoly& f, const std::vector<FieldElement>& s, const Point& a);

/// Q = {a_1,b_1} x ... x {a_N,b_N}, zero-free, with a_i^r = b_i^r, r >= 2,
/// and f not vanishing on Q. Checks |W| >= 2^N / t^{log_t M}, t = r/(r-1),
/// in the log domain with outward rounding.
bool verify_2elements_density(const SparsePoly& f, const RectangularDomain& q, std::uint64_t r);

struct DensityCheck {
  std::uint64_t nonzeros = 0;
  std::size_t monomials = 0;
  std::uint64_t ratio_order = 0;
  std::size_t k = 0;  // floor(log_t M)
  bool volume_form = false;
  bool power_form = false;
  /// Entropy form in base q under M <= t^{N(q-1)/q}.
  std::optional<bool> entropy_q;
  /// Entropy form in base s = |S| under M <= t^{N(s-1)/s}.
  std::optional<bool> entropy_s;

  bool all_hold() const {
    return volume_form && power_form && entropy_q.value_or(true) && entropy_s.value_or(true);
  }
};

/// S zero-free with |S| >= 2 and f not vanishing on S^N. Checks the volume
/// form |W| >= s^N / Vol_s(N, k) exactly and the power and entropy forms in
/// the log domain.
DensityCheck verify_density_bounds(const SparsePoly& f, const std::vector<FieldElement>& s,
                                   std::size_t n);

/// deg_{X_i} f < |A_i|, a in prod (A_i \ {0}), f absorbing at a and nonzero
/// somewhere on Q. Checks M(f) >= 2^N.
bool verify_redcoeffs(const SparsePoly& f, const RectangularDomain& q, const Point& a);

/// Q = {a_1,0} x ... x {a_N,0}, f absorbing at a, f(0) != 0. Checks M(f) >= 2^N.
bool verify_coeffs2(const SparsePoly& f, const RectangularDomain& q, const Point& a);

/// sum over I of (-1)^{N-|I|} p(c^I), where c^I takes b_i on I and a_i off I.
FieldElement alternating_difference(const SparsePoly& p, const Point& a, const Point& b);

/// First q in {0..r_1-1} x ... x {0..r_N-1} (last coordinate fastest) that
/// agrees with every s in S in at least one coordinate.
std::optional<std::vector<std::uint32_t>> find_covering_tuple(
    const std::vector<std::vector<std::uint32_t>>& s, std::span<const std::uint32_t> r);

/// |S| prod (r_i - 1) < prod r_i, the condition under which a covering tuple
/// is guaranteed.
bool covering_guaranteed(std::size_t s_size, std::span<const std::uint32_t> r);

struct CombCheck {
  /// E is nonempty and for every e in E and every j some e' in E differs
  /// from e exactly in coordinate j.
  bool property = false;
  /// |E| >= 2^N.
  bool bound = false;
};

/// E a set of integer tuples inside A_1 x ... x A_N; throws
/// std::invalid_argument otherwise.
CombCheck check_comb_property(const std::vector<std::vector<std::uint32_t>>& e,
                              const std::vector<std::vector<std::uint32_t>>& a);

}  // namespace sparsezt
