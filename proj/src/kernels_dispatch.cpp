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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "sparsezt/kernels.hpp"

namespace sparsezt::kernels {

namespace {

// -1: automatic, otherwise a KernelKind value.
std::atomic<int>& override_slot() {
  static std::atomic<int> slot = [] {
    const char* env = std::getenv("SPARSEZT_KERNEL");
    if (env != nullptr && std::string(env) == "scalar") return static_cast<int>(KernelKind::kScalar);
    return -1;
  }();
  return slot;
}

}  // namespace

std::string_view kernel_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::kScalar:
      return "scalar";
    case KernelKind::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool cpu_has_avx2() {
#if defined(SPARSEZT_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

bool kernel_supports(KernelKind kind, const EvalProgram& prog) {
  switch (kind) {
    case KernelKind::kScalar:
      return true;
    case KernelKind::kAvx2:
      return cpu_has_avx2() && prog.m <= kAvx2MaxGroupOrder;
  }
  return false;
}

void set_kernel_override(std::optional<KernelKind> kind) {
  override_slot().store(kind ? static_cast<int>(*kind) : -1);
}

KernelKind select_kernel(const EvalProgram& prog) {
  const int forced = override_slot().load();
  if (forced >= 0) {
    const auto kind = static_cast<KernelKind>(forced);
    return kernel_supports(kind, prog) ? kind : KernelKind::kScalar;
  }
  return kernel_supports(KernelKind::kAvx2, prog) ? KernelKind::kAvx2 : KernelKind::kScalar;
}

void evaluate_batch(KernelKind kind, const EvalProgram& prog, const std::int32_t* logs,
                    std::size_t stride, std::size_t count, std::int32_t* out) {
  if (!kernel_supports(kind, prog)) {
    throw std::invalid_argument(std::string("kernel ") + std::string(kernel_name(kind)) +
                                " cannot run this program on this machine");
  }
  switch (kind) {
    case KernelKind::kScalar:
      evaluate_batch_scalar(prog, logs, stride, count, out);
      return;
    case KernelKind::kAvx2:
#if defined(SPARSEZT_HAVE_AVX2_KERNEL)
      evaluate_batch_avx2(prog, logs, stride, count, out);
#endif
      return;
  }
}

// ---------------------------------------------------------------------------

BatchEvaluator::BatchEvaluator(const SparsePoly& f)
    : prog_(EvalProgram::compile(f)), kind_(select_kernel(prog_)) {}

BatchEvaluator::BatchEvaluator(const SparsePoly& f, KernelKind kind)
    : prog_(EvalProgram::compile(f)), kind_(kind) {
  if (!kernel_supports(kind, prog_)) {
    throw std::invalid_argument(std::string("kernel ") + std::string(kernel_name(kind)) +
                                " is not available for " + f.field().name());
  }
}

void BatchEvaluator::evaluate(std::span<const Point> points, std::span<std::uint32_t> out) {
  if (out.size() < points.size()) throw std::invalid_argument("BatchEvaluator: output too small");
  const std::size_t count = points.size();
  const std::size_t n = prog_.nvars;
  logs_.resize(n * count);
  result_.resize(count);
  const Field& field = *prog_.field;
  const auto log_table = field.log_table();
  for (std::size_t i = 0; i < count; ++i) {
    const Point& x = points[i];
    if (x.size() != n) throw std::invalid_argument("BatchEvaluator: point dimension mismatch");
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j].field_ptr() != &field) throw std::invalid_argument("BatchEvaluator: foreign field element");
      logs_[j * count + i] = static_cast<std::int32_t>(log_table[x[j].index()]);
    }
  }
  evaluate_batch(kind_, prog_, logs_.data(), count, count, result_.data());
  const auto exp_table = field.exp_table();
  for (std::size_t i = 0; i < count; ++i) {
    const std::int32_t l = result_[i];
    out[i] = (l == prog_.m) ? 0U : exp_table[static_cast<std::size_t>(l)];
  }
}

std::uint32_t BatchEvaluator::evaluate_one(std::span<const FieldElement> x) {
  Point p(x.begin(), x.end());
  std::uint32_t out = 0;
  evaluate(std::span<const Point>(&p, 1), std::span<std::uint32_t>(&out, 1));
  return out;
}

}  // namespace sparsezt::kernels
