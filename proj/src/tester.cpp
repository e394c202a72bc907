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

#include "sparsezt/tester.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

namespace sparsezt {

// ---------------------------------------------------------------------------
// Oracles

EvaluationOracle::EvaluationOracle(const Field& field, std::size_t arity, BigInt bound)
    : field_(&field), arity_(arity), bound_(std::move(bound)) {
  if (bound_ < 1) throw std::invalid_argument("monomial bound must be at least 1");
}

FieldElement EvaluationOracle::evaluate(std::span<const FieldElement> x) {
  if (x.size() != arity_) throw std::invalid_argument("oracle called with wrong arity");
  evaluations_.fetch_add(1);
  return field_->element(evaluate_point(x));
}

void EvaluationOracle::evaluate_batch(std::span<const Point> points, std::span<std::uint32_t> out) {
  if (out.size() < points.size()) throw std::invalid_argument("evaluate_batch: output too small");
  for (const auto& x : points) {
    if (x.size() != arity_) throw std::invalid_argument("oracle called with wrong arity");
  }
  evaluations_.fetch_add(points.size());
  evaluate_points(points, out);
}

void EvaluationOracle::evaluate_points(std::span<const Point> points, std::span<std::uint32_t> out) {
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = evaluate_point(points[i]);
}

namespace {

BigInt default_bound(const SparsePoly& f) {
  return BigInt(std::max<std::size_t>(1, f.monomial_count()));
}

}  // namespace

PolynomialOracle::PolynomialOracle(const SparsePoly& f) : PolynomialOracle(f, default_bound(f)) {}

PolynomialOracle::PolynomialOracle(const SparsePoly& f, BigInt bound)
    : EvaluationOracle(f.field(), f.nvars(), std::move(bound)),
      poly_(f),
      prog_(kernels::EvalProgram::compile(f)),
      kind_(kernels::select_kernel(prog_)) {}

std::uint32_t PolynomialOracle::evaluate_point(std::span<const FieldElement> x) {
  std::uint32_t out = 0;
  Point p(x.begin(), x.end());
  evaluate_points(std::span<const Point>(&p, 1), std::span<std::uint32_t>(&out, 1));
  return out;
}

void PolynomialOracle::evaluate_points(std::span<const Point> points, std::span<std::uint32_t> out) {
  // Local scratch so concurrent callers never share buffers.
  const std::size_t count = points.size();
  const std::size_t n = prog_.nvars;
  const Field& f = field();
  const auto log_table = f.log_table();
  std::vector<std::int32_t> logs(n * count);
  std::vector<std::int32_t> result(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const FieldElement& xj = points[i][j];
      if (xj.field_ptr() != &f) throw std::invalid_argument("oracle called with a foreign element");
      logs[j * count + i] = static_cast<std::int32_t>(log_table[xj.index()]);
    }
  }
  kernels::evaluate_batch(kind_, prog_, logs.data(), count, count, result.data());
  const auto exp_table = f.exp_table();
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = result[i] == prog_.m ? 0U : exp_table[static_cast<std::size_t>(result[i])];
  }
}

FunctionOracle::FunctionOracle(const Field& field, std::size_t arity, BigInt bound, Fn fn)
    : EvaluationOracle(field, arity, std::move(bound)), fn_(std::move(fn)) {}

std::uint32_t FunctionOracle::evaluate_point(std::span<const FieldElement> x) {
  const FieldElement v = fn_(x);
  if (v.field_ptr() != &field()) throw std::invalid_argument("oracle returned a foreign element");
  return v.index();
}

// ---------------------------------------------------------------------------
// Radii

std::string_view rule_name(RadiusRule rule) {
  switch (rule) {
    case RadiusRule::kRatioOrder:
      return "ratio-order";
    case RadiusRule::kDegreeBounded:
      return "degree-bounded";
    case RadiusRule::kZeroDomain:
      return "zero-domain";
    case RadiusRule::kSinglePoint:
      return "single-point";
    case RadiusRule::kFullDomain:
      return "full-domain";
  }
  return "unknown";
}

namespace {

void check_radius_args(const BigInt& m, std::uint64_t r) {
  if (m < 1) throw std::invalid_argument("monomial bound must be at least 1");
  if (r < 2) throw std::invalid_argument("ratio order must be at least 2");
}

// r^k <= m (r-1)^k
bool radius_holds(const BigInt& m, std::uint64_t r, std::size_t k) {
  return big_pow(BigInt(r), k) <= m * big_pow(BigInt(r - 1), k);
}

long double log2_big(const BigInt& x) {
  const std::uint64_t top = floor_log2(x);
  if (top < 60) return std::log2(static_cast<long double>(x.convert_to<std::uint64_t>()));
  const BigInt head = x >> (top - 60);
  return static_cast<long double>(top - 60) +
         std::log2(static_cast<long double>(head.convert_to<std::uint64_t>()));
}

}  // namespace

std::size_t radius_general(const BigInt& m, std::uint64_t r) {
  check_radius_args(m, r);
  if (r == 2) return floor_log2(m);
  // Floating estimate, then settle the boundary exactly.
  const long double t = std::log2(static_cast<long double>(r)) - std::log2(static_cast<long double>(r - 1));
  auto k = static_cast<std::size_t>(std::floor(log2_big(m) / t));
  while (k > 0 && !radius_holds(m, r, k)) --k;
  while (radius_holds(m, r, k + 1)) ++k;
  return k;
}

std::size_t radius_general_clamped(const BigInt& m, std::uint64_t r, std::size_t cap) {
  check_radius_args(m, r);
  if (radius_holds(m, r, cap)) return cap;
  return radius_general(m, r);
}

std::size_t radius_degree_bounded(const BigInt& m) {
  if (m < 1) throw std::invalid_argument("monomial bound must be at least 1");
  return floor_log2(m);
}

BigInt zero_test_budget(const BigInt& m, std::uint32_t q, std::size_t s, std::size_t n) {
  if (q <= 2) return 1;
  const std::size_t k = radius_general(m, q - 1);
  return std::max(BigInt(1), binomial(n, k)) * big_pow(BigInt(s), k);
}

namespace {

void check_anchor(const RectangularDomain& q, const Point& anchor) {
  if (!q.contains(anchor)) throw std::invalid_argument("anchor is not a point of the domain");
}

bool anchor_zero_free(const Point& anchor) {
  return std::none_of(anchor.begin(), anchor.end(), [](const FieldElement& x) { return x.is_zero(); });
}

bool anchor_is_nonzero_corner(const RectangularDomain& q, const Point& anchor) {
  if (!q.is_zero_pair_domain()) return false;
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    if (anchor[i] != q.set(i)[1]) return false;
  }
  return true;
}

void consider(std::optional<RadiusChoice>& best, std::size_t radius, RadiusRule rule) {
  if (!best || radius < best->radius) best = RadiusChoice{radius, rule};
}

}  // namespace

RadiusChoice select_radius(const SparsePoly& p, const RectangularDomain& q, const Point& anchor,
                           std::optional<BigInt> bound, std::uint64_t* origin_evaluations) {
  check_anchor(q, anchor);
  if (&p.field() != &q.field() || p.nvars() != q.dimension()) {
    throw std::invalid_argument("polynomial and domain do not match");
  }
  const BigInt m = bound ? *bound : default_bound(p);
  if (m < BigInt(p.monomial_count())) {
    throw std::invalid_argument("declared monomial bound is smaller than M(p)");
  }
  const std::size_t n = q.dimension();
  std::optional<RadiusChoice> best;
  if (!q.contains_zero()) {
    consider(best, radius_general_clamped(m, max_ratio_order(q.sets()), n), RadiusRule::kRatioOrder);
  }
  bool degree_ok = anchor_zero_free(anchor);
  for (std::size_t i = 0; i < n && degree_ok; ++i) {
    degree_ok = p.degree_in_variable(i) < static_cast<int>(q.set(i).size());
  }
  if (degree_ok) {
    consider(best, std::min(radius_degree_bounded(m), n), RadiusRule::kDegreeBounded);
  } else if (anchor_is_nonzero_corner(q, anchor)) {
    if (origin_evaluations != nullptr) ++*origin_evaluations;
    const Point origin(n, q.field().zero());
    if (!p.evaluate(origin).is_zero()) {
      consider(best, std::min(radius_degree_bounded(m), n), RadiusRule::kZeroDomain);
    }
  }
  if (!best) return RadiusChoice{n, RadiusRule::kFullDomain};
  return *best;
}

RadiusChoice select_radius(EvaluationOracle& oracle, const RectangularDomain& q, const Point& anchor) {
  check_anchor(q, anchor);
  if (&oracle.field() != &q.field() || oracle.arity() != q.dimension()) {
    throw std::invalid_argument("oracle and domain do not match");
  }
  const std::size_t n = q.dimension();
  if (!q.contains_zero()) {
    return RadiusChoice{radius_general_clamped(oracle.bound(), max_ratio_order(q.sets()), n),
                        RadiusRule::kRatioOrder};
  }
  if (anchor_is_nonzero_corner(q, anchor)) {
    const Point origin(n, q.field().zero());
    if (!oracle.evaluate(origin).is_zero()) {
      return RadiusChoice{std::min(radius_degree_bounded(oracle.bound()), n), RadiusRule::kZeroDomain};
    }
  }
  throw std::invalid_argument(
      "no sphere bound applies to a black-box polynomial on a domain containing zero");
}

// ---------------------------------------------------------------------------
// Search

namespace {

constexpr std::size_t kMaxBatch = 4096;
constexpr std::size_t kParallelThreshold = 512;

void evaluate_parallel(EvaluationOracle& oracle, std::span<const Point> points,
                       std::span<std::uint32_t> out, unsigned jobs) {
  if (jobs <= 1 || !oracle.concurrency_safe() || points.size() < kParallelThreshold) {
    oracle.evaluate_batch(points, out);
    return;
  }
  const std::size_t chunk = (points.size() + jobs - 1) / jobs;
  std::vector<std::jthread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    const std::size_t begin = w * chunk;
    if (begin >= points.size()) break;
    const std::size_t len = std::min(chunk, points.size() - begin);
    workers.emplace_back([&, w, begin, len] {
      try {
        oracle.evaluate_batch(points.subspan(begin, len), out.subspan(begin, len));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  workers.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

BallSearchResult search_ball(EvaluationOracle& oracle, const RectangularDomain& q, const Point& anchor,
                             std::size_t radius, const SearchOptions& options) {
  BallEnumerator ball(q, anchor, radius);
  std::vector<Point> batch;
  std::vector<std::uint32_t> values;
  // The first batch is the anchor alone, so a nonzero anchor costs exactly
  // one evaluation.
  std::size_t batch_size = 1;
  bool more = true;
  while (more) {
    batch.clear();
    while (batch.size() < batch_size && (more = ball.next())) batch.push_back(ball.current());
    if (batch.empty()) break;
    values.resize(batch.size());
    evaluate_parallel(oracle, batch, values, std::max(1U, options.jobs));
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (values[i] != 0) return BallSearchResult{batch[i], hamming_distance(batch[i], anchor)};
    }
    batch_size = std::min(kMaxBatch, batch_size * 8);
  }
  return {};
}

SearchReport test_zero_on_power_domain(EvaluationOracle& oracle, std::vector<FieldElement> s,
                                       std::size_t n, const SearchOptions& options) {
  if (s.empty()) throw std::invalid_argument("test set S is empty");
  const Field& field = oracle.field();
  if (oracle.arity() != n) throw std::invalid_argument("oracle arity does not match N");
  for (const auto& x : s) {
    if (x.field_ptr() != &field) throw std::invalid_argument("S contains a foreign element");
    if (x.is_zero()) throw std::invalid_argument("S must not contain zero");
  }
  const RectangularDomain q = RectangularDomain::power(field, s, n);
  const FieldElement base = *std::min_element(s.begin(), s.end());
  const Point anchor(n, base);
  const std::uint64_t before = oracle.evaluations();

  SearchReport report;
  report.kind = ReportKind::kZeroTest;
  if (field.order() == 2) {
    // S = {1}: S^N is a single point.
    report.radius = 0;
    report.rule = RadiusRule::kSinglePoint;
    report.budget = BigInt(1);
  } else {
    const std::uint64_t r = n == 0 ? 2 : max_ratio_order(q.sets());
    report.radius = radius_general_clamped(oracle.bound(), r, n);
    report.rule = RadiusRule::kRatioOrder;
    report.budget = zero_test_budget(oracle.bound(), field.order(), s.size(), n);
  }
  const BallSearchResult found = search_ball(oracle, q, anchor, report.radius, options);
  report.evaluations = oracle.evaluations() - before;
  if (found.witness) {
    report.verdict = Verdict::kWitnessFound;
    report.witness = found.witness;
    report.distance = found.distance;
  }
  return report;
}

SearchReport find_nonzero_near(const SparsePoly& p, const Point& anchor, const RectangularDomain& q,
                               const SearchOptions& options) {
  std::uint64_t origin_evals = 0;
  const RadiusChoice choice = select_radius(p, q, anchor, std::nullopt, &origin_evals);
  PolynomialOracle oracle(p);
  const BallSearchResult found = search_ball(oracle, q, anchor, choice.radius, options);
  SearchReport report;
  report.radius = choice.radius;
  report.rule = choice.rule;
  report.evaluations = oracle.evaluations() + origin_evals;
  if (found.witness) {
    report.verdict = Verdict::kWitnessFound;
    report.witness = found.witness;
    report.distance = found.distance;
  }
  return report;
}

SearchReport find_nonzero_near(EvaluationOracle& oracle, const Point& anchor,
                               const RectangularDomain& q, const SearchOptions& options) {
  const std::uint64_t before = oracle.evaluations();
  const RadiusChoice choice = select_radius(oracle, q, anchor);
  const BallSearchResult found = search_ball(oracle, q, anchor, choice.radius, options);
  SearchReport report;
  report.radius = choice.radius;
  report.rule = choice.rule;
  report.evaluations = oracle.evaluations() - before;
  if (found.witness) {
    report.verdict = Verdict::kWitnessFound;
    report.witness = found.witness;
    report.distance = found.distance;
  }
  return report;
}

}  // namespace sparsezt
