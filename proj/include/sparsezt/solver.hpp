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
#include <span>
#include <vector>

#include "sparsezt/bigint.hpp"
#include "sparsezt/domain.hpp"
#include "sparsezt/poly.hpp"
#include "sparsezt/tester.hpp"

namespace sparsezt {

/// f_1 = ... = f_r = 0 with every f_i nonzero and all sharing field and N.
class PolySystem {
 public:
  explicit PolySystem(std::vector<SparsePoly> polys);

  const Field& field() const { return *field_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return polys_.size(); }
  const std::vector<SparsePoly>& polys() const { return polys_; }
  const std::vector<std::size_t>& monomial_counts() const { return counts_; }
  /// prod (1 + M(f_i)^{q-1}), an upper bound on the monomial count of the
  /// indicator polynomial prod (1 - f_i^{q-1}).
  const BigInt& indicator_bound() const { return indicator_bound_; }

 private:
  const Field* field_;
  std::size_t nvars_;
  std::vector<SparsePoly> polys_;
  std::vector<std::size_t> counts_;
  BigInt indicator_bound_;
};

/// g(x) = prod (1 - f_i(x)^{q-1}), evaluated pointwise and never expanded.
/// Equals one exactly on the common zeros.
FieldElement indicator_value(const PolySystem& sys, std::span<const FieldElement> x);

/// The indicator as a black box with bound indicator_bound().
class IndicatorOracle final : public EvaluationOracle {
 public:
  explicit IndicatorOracle(const PolySystem& sys);
  bool concurrency_safe() const override { return true; }

 protected:
  std::uint32_t evaluate_point(std::span<const FieldElement> x) override;
  void evaluate_points(std::span<const Point> points, std::span<std::uint32_t> out) override;

 private:
  std::vector<kernels::EvalProgram> progs_;
  std::vector<kernels::KernelKind> kinds_;
};

struct SystemRadius {
  BigInt indicator_bound;
  std::uint64_t ratio_order = 2;
  /// floor(log_t M^) with t = r/(r-1), exact.
  std::size_t sharp = 0;
  /// min(sharp, N).
  std::size_t sharp_clamped = 0;
  /// (r + (q-1) sum log2 M(f_i)) / log2((q-1)/(q-2)).
  double closed_form = 0.0;
  double closed_form_clamped = 0.0;
};

/// Throws for q = 2.
SystemRadius system_radius(const PolySystem& sys, std::uint64_t ratio_order);

/// Nearest common zero in a zero-free Q, searched within the sharp radius.
/// "Vanishes" in the report means the system has no solution in Q.
SearchReport solve_near(const PolySystem& sys, const Point& anchor, const RectangularDomain& q,
                        const SearchOptions& options = {});

/// For systems solved by the origin: a solution in {a_1,0} x ... x {a_N,0}
/// with at most floor(log2 M^) zero entries. Throws if the origin is not a
/// solution or some a_i is zero.
SearchReport solve_near_zero_domain(const PolySystem& sys, const Point& a,
                                    const SearchOptions& options = {});

struct NonSingletonCheck {
  bool applicable = false;
  /// (r + (q-1) sum log2 M(f_i)) / log2 t, for display only.
  double threshold = 0.0;
};

/// Whether N > (r + (q-1) sum log2 M(f_i)) / log2 t, decided exactly as
/// (q-1)^N > (q-2)^N 2^r prod M(f_i)^{q-1}. When it holds the solution set
/// in Q is never a singleton. Requires |A_i| >= 2 and a zero-free Q.
NonSingletonCheck check_not_singleton(const PolySystem& sys, const RectangularDomain& q);

}  // namespace sparsezt
