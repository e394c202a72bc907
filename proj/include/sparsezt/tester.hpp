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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sparsezt/bigint.hpp"
#include "sparsezt/domain.hpp"
#include "sparsezt/kernels.hpp"
#include "sparsezt/poly.hpp"

namespace sparsezt {

/// Black-box access to a polynomial with a declared monomial bound M.
/// The caller guarantees M >= M(f); every evaluated point bumps the counter
/// by exactly one.
class EvaluationOracle {
 public:
  EvaluationOracle(const Field& field, std::size_t arity, BigInt bound);
  virtual ~EvaluationOracle() = default;
  EvaluationOracle(const EvaluationOracle&) = delete;
  EvaluationOracle& operator=(const EvaluationOracle&) = delete;

  const Field& field() const { return *field_; }
  std::size_t arity() const { return arity_; }
  const BigInt& bound() const { return bound_; }
  std::uint64_t evaluations() const { return evaluations_.load(); }

  FieldElement evaluate(std::span<const FieldElement> x);
  /// out[i] = canonical index of f(points[i]).
  void evaluate_batch(std::span<const Point> points, std::span<std::uint32_t> out);

  /// True if evaluate_batch may be called from several threads at once.
  virtual bool concurrency_safe() const { return false; }

 protected:
  virtual std::uint32_t evaluate_point(std::span<const FieldElement> x) = 0;
  virtual void evaluate_points(std::span<const Point> points, std::span<std::uint32_t> out);

 private:
  const Field* field_;
  std::size_t arity_;
  BigInt bound_;
  std::atomic<std::uint64_t> evaluations_{0};
};

/// Oracle backed by an explicit polynomial, evaluated through the batch
/// kernels. Default bound is max(1, M(f)).
class PolynomialOracle final : public EvaluationOracle {
 public:
  explicit PolynomialOracle(const SparsePoly& f);
  PolynomialOracle(const SparsePoly& f, BigInt bound);

  const SparsePoly& polynomial() const { return poly_; }
  bool concurrency_safe() const override { return true; }

 protected:
  std::uint32_t evaluate_point(std::span<const FieldElement> x) override;
  void evaluate_points(std::span<const Point> points, std::span<std::uint32_t> out) override;

 private:
  SparsePoly poly_;
  kernels::EvalProgram prog_;
  kernels::KernelKind kind_;
};

/// Oracle wrapping an arbitrary callable.
class FunctionOracle final : public EvaluationOracle {
 public:
  using Fn = std::function<FieldElement(std::span<const FieldElement>)>;
  FunctionOracle(const Field& field, std::size_t arity, BigInt bound, Fn fn);

 protected:
  std::uint32_t evaluate_point(std::span<const FieldElement> x) override;

 private:
  Fn fn_;
};

enum class Verdict { kVanishes, kWitnessFound };

/// Which sphere bound justified the search radius.
enum class RadiusRule {
  kRatioOrder,     // log_t M with t = r/(r-1), r the largest ratio order; zero-free domains
  kDegreeBounded,  // log_2 M when deg_{X_i} < |A_i| and the anchor is zero-free
  kZeroDomain,     // log_2 M on {a_1,0} x ... x {a_N,0} when f(0) != 0
  kSinglePoint,    // |S^N| = 1
  kFullDomain,     // no bound applies; the ball is all of Q
};

std::string_view rule_name(RadiusRule rule);

enum class ReportKind { kZeroTest, kSystem };

struct SearchReport {
  ReportKind kind = ReportKind::kZeroTest;
  Verdict verdict = Verdict::kVanishes;
  std::optional<Point> witness;
  std::optional<std::size_t> distance;
  std::size_t radius = 0;
  RadiusRule rule = RadiusRule::kFullDomain;
  std::uint64_t evaluations = 0;
  /// Evaluation budget max(1, C(N,k)) |S|^k for power-domain zero tests.
  std::optional<BigInt> budget;
  /// Solver only: the logarithmic closed-form radius, for comparison.
  std::optional<double> closed_form_radius;
  /// Solver only: prod (1 + M(f_i)^{q-1}).
  std::optional<BigInt> monomial_bound;
};

/// floor(log_t M) for t = r/(r-1), i.e. the largest k with
/// r^k <= M (r-1)^k, computed with exact integers.
std::size_t radius_general(const BigInt& m, std::uint64_t r);
/// min(radius_general(m, r), cap) without computing powers beyond cap.
std::size_t radius_general_clamped(const BigInt& m, std::uint64_t r, std::size_t cap);
/// floor(log_2 M).
std::size_t radius_degree_bounded(const BigInt& m);

/// max(1, C(N, k)) * s^k with k = floor(log_t M), t = (q-1)/(q-2).
BigInt zero_test_budget(const BigInt& m, std::uint32_t q, std::size_t s, std::size_t n);

struct RadiusChoice {
  std::size_t radius = 0;
  RadiusRule rule = RadiusRule::kFullDomain;
};

/// Smallest applicable radius for an explicit polynomial. `bound` defaults
/// to max(1, M(p)). May spend one evaluation of p at the origin, counted in
/// *origin_evaluations when given.
RadiusChoice select_radius(const SparsePoly& p, const RectangularDomain& q, const Point& anchor,
                           std::optional<BigInt> bound = std::nullopt,
                           std::uint64_t* origin_evaluations = nullptr);
/// Black-box variant: only the ratio-order and zero-domain rules can apply.
/// Throws if the domain contains zero and neither applies.
RadiusChoice select_radius(EvaluationOracle& oracle, const RectangularDomain& q,
                           const Point& anchor);

struct SearchOptions {
  unsigned jobs = 1;
};

struct BallSearchResult {
  std::optional<Point> witness;
  std::size_t distance = 0;
};

/// Evaluates the ball in enumeration order and stops at the first nonzero,
/// which is therefore a nearest one.
BallSearchResult search_ball(EvaluationOracle& oracle, const RectangularDomain& q,
                             const Point& anchor, std::size_t radius,
                             const SearchOptions& options = {});

/// Decides whether the oracle's polynomial vanishes on S^N by evaluating the
/// Hamming ball of radius floor(log_t M) around (s, ..., s), s = min S.
SearchReport test_zero_on_power_domain(EvaluationOracle& oracle, std::vector<FieldElement> s,
                                       std::size_t n, const SearchOptions& options = {});

/// Nearest nonzero of p in Q around the anchor, searching only as far as the
/// selected sphere bound. "Vanishes" means p is zero on all of Q.
SearchReport find_nonzero_near(const SparsePoly& p, const Point& anchor, const RectangularDomain& q,
                               const SearchOptions& options = {});
SearchReport find_nonzero_near(EvaluationOracle& oracle, const Point& anchor,
                               const RectangularDomain& q, const SearchOptions& options = {});

}  // namespace sparsezt
