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

#include "sparsezt/kernels.hpp"
#include "sparsezt/random.hpp"

using namespace sparsezt;
using namespace sparsezt::kernels;

namespace {

struct Batch {
  std::vector<std::int32_t> logs;
  std::vector<Point> points;
};

Batch random_batch(const Field& field, std::size_t nvars, std::size_t count, Rng& rng) {
  Batch b;
  b.logs.resize(nvars * count);
  for (std::size_t i = 0; i < count; ++i) {
    Point x;
    for (std::size_t j = 0; j < nvars; ++j) {
      // Zeros are over-represented so the vanishing-term path is exercised.
      x.push_back(rng.below(4) == 0 ? field.zero() : random_element(field, rng));
      b.logs[j * count + i] = static_cast<std::int32_t>(field.log_table()[x.back().index()]);
    }
    b.points.push_back(std::move(x));
  }
  return b;
}

std::uint32_t from_log(const Field& field, std::int32_t v) {
  return v == static_cast<std::int32_t>(field.zero_log()) ? 0 : field.exp(static_cast<std::uint64_t>(v));
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}, {2, 5}, {31, 1}, {2, 8}, {3, 5}, {4093, 1}, {2, 12}, {2, 13}};

}  // namespace

TEST_CASE("kernel names and selection") {
  CHECK(kernel_name(KernelKind::kScalar) == "scalar");
  CHECK(kernel_name(KernelKind::kAvx2) == "avx2");
  const Field& big = make_field(2, 13);
  const EvalProgram prog = EvalProgram::compile(SparsePoly::constant(big, 1, big.one()));
  CHECK_FALSE(kernel_supports(KernelKind::kAvx2, prog));
  CHECK(select_kernel(prog) == KernelKind::kScalar);
  CHECK(kernel_supports(KernelKind::kScalar, prog));
  std::int32_t out = 0;
  const std::int32_t logs = 0;
  CHECK_THROWS(evaluate_batch(KernelKind::kAvx2, prog, &logs, 1, 1, &out));

  set_kernel_override(KernelKind::kScalar);
  const Field& f7 = make_field(7, 1);
  CHECK(select_kernel(EvalProgram::compile(SparsePoly::constant(f7, 1, f7.one()))) == KernelKind::kScalar);
  set_kernel_override(std::nullopt);
}

TEST_CASE("scalar kernel matches SparsePoly::evaluate") {
  Rng rng(2024);
  for (auto [p, k] : kFields) {
    const Field& field = make_field(p, k);
    CAPTURE(field.name());
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = rng.range(0, 5);
      const SparsePoly f = random_poly(field, n, rng.range(0, 12), static_cast<std::uint32_t>(rng.range(0, 3 * field.order())), rng);
      const std::size_t count = rng.range(1, 70);
      const Batch b = random_batch(field, n, count, rng);
      const EvalProgram prog = EvalProgram::compile(f);
      std::vector<std::int32_t> out(count);
      evaluate_batch_scalar(prog, b.logs.data(), count, count, out.data());
      bool ok = true;
      for (std::size_t i = 0; i < count; ++i) ok = ok && from_log(field, out[i]) == f.evaluate(b.points[i]).index();
      CHECK(ok);
    }
  }
}

TEST_CASE("AVX2 kernel matches the scalar kernel") {
  if (!cpu_has_avx2()) {
    MESSAGE("CPU without AVX2; equivalence test skipped");
    return;
  }
  Rng rng(99);
  for (auto [p, k] : kFields) {
    const Field& field = make_field(p, k);
    CAPTURE(field.name());
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = rng.range(0, 6);
      const SparsePoly f = random_poly(field, n, rng.range(0, 16), static_cast<std::uint32_t>(rng.range(0, 5 * field.order())), rng);
      const EvalProgram prog = EvalProgram::compile(f);
      if (!kernel_supports(KernelKind::kAvx2, prog)) {
        CHECK(field.group_order() > static_cast<std::uint32_t>(kAvx2MaxGroupOrder));
        continue;
      }
      // Counts straddle the 8-lane width to cover the scalar tail.
      const std::size_t count = rng.range(1, 100);
      const Batch b = random_batch(field, n, count, rng);
      std::vector<std::int32_t> scalar(count), simd(count);
      evaluate_batch(KernelKind::kScalar, prog, b.logs.data(), count, count, scalar.data());
      evaluate_batch(KernelKind::kAvx2, prog, b.logs.data(), count, count, simd.data());
      CHECK(scalar == simd);
    }
  }
}

TEST_CASE("BatchEvaluator returns canonical indices") {
  Rng rng(5);
  const Field& field = make_field(3, 2);
  const SparsePoly f = random_poly(field, 3, 7, 20, rng);
  for (KernelKind kind : {KernelKind::kScalar, KernelKind::kAvx2}) {
    if (kind == KernelKind::kAvx2 && !cpu_has_avx2()) continue;
    BatchEvaluator eval(f, kind);
    CHECK(eval.kind() == kind);
    const Batch b = random_batch(field, 3, 50, rng);
    std::vector<std::uint32_t> out(50);
    eval.evaluate(b.points, out);
    for (std::size_t i = 0; i < 50; ++i) CHECK(out[i] == f.evaluate(b.points[i]).index());
    CHECK(eval.evaluate_one(b.points[0]) == out[0]);
  }
  BatchEvaluator eval(f);
  CHECK_THROWS(eval.evaluate_one(Point{field.one()}));
}
