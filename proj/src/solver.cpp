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

#include "sparsezt/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sparsezt {

PolySystem::PolySystem(std::vector<SparsePoly> polys) : polys_(std::move(polys)) {
  if (polys_.empty()) throw std::invalid_argument("a system needs at least one polynomial");
  field_ = &polys_.front().field();
  nvars_ = polys_.front().nvars();
  indicator_bound_ = 1;
  const std::uint64_t qm1 = field_->group_order();
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    const SparsePoly& f = polys_[i];
    if (&f.field() != field_ || f.nvars() != nvars_) {
      throw std::invalid_argument("system polynomials must share field and variable count");
    }
    if (f.is_zero()) throw std::invalid_argument("polynomial " + std::to_string(i + 1) + " is zero");
    counts_.push_back(f.monomial_count());
    indicator_bound_ *= 1 + big_pow(BigInt(f.monomial_count()), qm1);
  }
}

FieldElement indicator_value(const PolySystem& sys, std::span<const FieldElement> x) {
  if (x.size() != sys.nvars()) throw std::invalid_argument("indicator_value: dimension mismatch");
  const Field& field = sys.field();
  FieldElement g = field.one();
  for (const auto& f : sys.polys()) {
    g *= field.one() - f.evaluate(x).pow(field.group_order());
  }
  return g;
}

// ---------------------------------------------------------------------------

IndicatorOracle::IndicatorOracle(const PolySystem& sys)
    : EvaluationOracle(sys.field(), sys.nvars(), sys.indicator_bound()) {
  for (const auto& f : sys.polys()) {
    progs_.push_back(kernels::EvalProgram::compile(f));
    kinds_.push_back(kernels::select_kernel(progs_.back()));
  }
}

std::uint32_t IndicatorOracle::evaluate_point(std::span<const FieldElement> x) {
  Point p(x.begin(), x.end());
  std::uint32_t out = 0;
  evaluate_points(std::span<const Point>(&p, 1), std::span<std::uint32_t>(&out, 1));
  return out;
}

void IndicatorOracle::evaluate_points(std::span<const Point> points, std::span<std::uint32_t> out) {
  const std::size_t count = points.size();
  const std::size_t n = arity();
  const auto log_table = field().log_table();
  std::vector<std::int32_t> logs(n * count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const FieldElement& xj = points[i][j];
      if (xj.field_ptr() != &field()) throw std::invalid_argument("oracle called with a foreign element");
      logs[j * count + i] = static_cast<std::int32_t>(log_table[xj.index()]);
    }
  }
  // 1 - f^{q-1} is 1 when f = 0 and 0 otherwise, so g is the conjunction.
  std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(count), 1U);
  std::vector<std::int32_t> values(count);
  for (std::size_t k = 0; k < progs_.size(); ++k) {
    kernels::evaluate_batch(kinds_[k], progs_[k], logs.data(), count, count, values.data());
    for (std::size_t i = 0; i < count; ++i) {
      if (values[i] != progs_[k].m) out[i] = 0;
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

void require_odd_order(const Field& field) {
  if (field.order() <= 2) {
    throw std::invalid_argument("system solving needs a field with more than two elements");
  }
}

double closed_form_radius(const PolySystem& sys) {
  const double q = sys.field().order();
  double sum = 0.0;
  for (auto m : sys.monomial_counts()) sum += std::log2(static_cast<double>(m));
  const double log2t = std::log2((q - 1.0) / (q - 2.0));
  return (static_cast<double>(sys.size()) + (q - 1.0) * sum) / log2t;
}

void check_system_point(const PolySystem& sys, const RectangularDomain& q, const Point& anchor) {
  if (&q.field() != &sys.field() || q.dimension() != sys.nvars()) {
    throw std::invalid_argument("system and domain do not match");
  }
  if (!q.contains(anchor)) throw std::invalid_argument("anchor is not a point of the domain");
}

SearchReport make_report(const BallSearchResult& found, std::size_t radius, RadiusRule rule,
                         std::uint64_t evaluations) {
  SearchReport report;
  report.kind = ReportKind::kSystem;
  report.radius = radius;
  report.rule = rule;
  report.evaluations = evaluations;
  if (found.witness) {
    report.verdict = Verdict::kWitnessFound;
    report.witness = found.witness;
    report.distance = found.distance;
  }
  return report;
}

}  // namespace

SystemRadius system_radius(const PolySystem& sys, std::uint64_t ratio_order) {
  require_odd_order(sys.field());
  SystemRadius out;
  out.indicator_bound = sys.indicator_bound();
  out.ratio_order = ratio_order;
  out.sharp = radius_general(out.indicator_bound, ratio_order);
  out.sharp_clamped = std::min(out.sharp, sys.nvars());
  out.closed_form = closed_form_radius(sys);
  out.closed_form_clamped = std::min(out.closed_form, static_cast<double>(sys.nvars()));
  return out;
}

SearchReport solve_near(const PolySystem& sys, const Point& anchor, const RectangularDomain& q,
                        const SearchOptions& options) {
  require_odd_order(sys.field());
  check_system_point(sys, q, anchor);
  if (q.contains_zero()) {
    throw std::invalid_argument("solve_near needs a zero-free domain; use solve_near_zero_domain");
  }
  const SystemRadius radius = system_radius(sys, max_ratio_order(q.sets()));
  IndicatorOracle oracle(sys);
  const BallSearchResult found = search_ball(oracle, q, anchor, radius.sharp_clamped, options);
  SearchReport report = make_report(found, radius.sharp_clamped, RadiusRule::kRatioOrder, oracle.evaluations());
  report.closed_form_radius = radius.closed_form_clamped;
  report.monomial_bound = radius.indicator_bound;
  return report;
}

SearchReport solve_near_zero_domain(const PolySystem& sys, const Point& a, const SearchOptions& options) {
  const Field& field = sys.field();
  if (a.size() != sys.nvars()) throw std::invalid_argument("anchor dimension mismatch");
  std::vector<std::vector<FieldElement>> sets;
  for (const auto& ai : a) {
    if (ai.field_ptr() != &field) throw std::invalid_argument("anchor from a foreign field");
    if (ai.is_zero()) throw std::invalid_argument("zero-domain anchor must have nonzero entries");
    sets.push_back({field.zero(), ai});
  }
  const RectangularDomain q(field, std::move(sets));
  const Point origin(sys.nvars(), field.zero());
  std::uint64_t evaluations = 0;
  for (const auto& f : sys.polys()) {
    ++evaluations;
    if (!f.evaluate(origin).is_zero()) throw std::invalid_argument("the origin is not a solution");
  }
  const std::size_t radius = std::min(radius_degree_bounded(sys.indicator_bound()), sys.nvars());
  IndicatorOracle oracle(sys);
  const BallSearchResult found = search_ball(oracle, q, a, radius, options);
  SearchReport report = make_report(found, radius, RadiusRule::kZeroDomain, evaluations + oracle.evaluations());
  double sum = 0.0;
  for (auto m : sys.monomial_counts()) sum += std::log2(static_cast<double>(m));
  report.closed_form_radius = std::min(static_cast<double>(sys.size()) + (field.order() - 1.0) * sum,
                                       static_cast<double>(sys.nvars()));
  report.monomial_bound = sys.indicator_bound();
  return report;
}

NonSingletonCheck check_not_singleton(const PolySystem& sys, const RectangularDomain& q) {
  require_odd_order(sys.field());
  if (&q.field() != &sys.field() || q.dimension() != sys.nvars()) {
    throw std::invalid_argument("system and domain do not match");
  }
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    if (q.set(i).size() < 2) throw std::invalid_argument("every coordinate set needs at least two elements");
  }
  if (q.contains_zero()) throw std::invalid_argument("check_not_singleton needs a zero-free domain");
  const std::uint64_t qq = sys.field().order();
  const std::size_t n = sys.nvars();
  BigInt rhs = big_pow(BigInt(qq - 2), n) * big_pow(BigInt(2), sys.size());
  for (auto m : sys.monomial_counts()) rhs *= big_pow(BigInt(m), qq - 1);
  NonSingletonCheck out;
  out.applicable = big_pow(BigInt(qq - 1), n) > rhs;
  out.threshold = closed_form_radius(sys);
  return out;
}

}  // namespace sparsezt
