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
#include <string_view>
#include <vector>

#include "sparsezt/domain.hpp"
#include "sparsezt/poly.hpp"

// Batched polynomial evaluation in the discrete-log domain.
//
// A SparsePoly is compiled into an EvalProgram whose coefficients and points
// are carried as discrete logarithms base the field's primitive element, with
// the sentinel m = q - 1 standing for zero. A term is then a sum of
// exponent * log products mod m, and field addition is a Zech-logarithm table
// lookup. Both steps are branch-free integer arithmetic plus table gathers,
// which is what the SIMD variants vectorize across points.

namespace sparsezt::kernels {

enum class KernelKind { kScalar, kAvx2 };

std::string_view kernel_name(KernelKind kind);

struct EvalProgram {
  const Field* field = nullptr;
  std::int32_t m = 1;  // q - 1, also the zero sentinel
  std::size_t nvars = 0;
  std::size_t nterms = 0;
  std::vector<std::int32_t> coeff_log;     // [nterms]
  std::vector<std::int32_t> exp_mod;       // [nterms * nvars], e mod m
  std::vector<std::int32_t> exp_positive;  // [nterms * nvars], -1 if e > 0 else 0
  std::span<const std::uint32_t> zech;     // m + 1 entries

  static EvalProgram compile(const SparsePoly& f);
};

/// Point layout: logs[j * stride + i] is the log of coordinate j of point i.
/// Writes the log-domain value of each of the `count` points to out.
void evaluate_batch_scalar(const EvalProgram& prog, const std::int32_t* logs, std::size_t stride,
                           std::size_t count, std::int32_t* out);

#if defined(SPARSEZT_HAVE_AVX2_KERNEL)
void evaluate_batch_avx2(const EvalProgram& prog, const std::int32_t* logs, std::size_t stride,
                         std::size_t count, std::int32_t* out);
#endif

/// Largest m the AVX2 kernel accepts: products e * log stay below 2^24 so
/// they are exact in single precision.
inline constexpr std::int32_t kAvx2MaxGroupOrder = 4095;

bool cpu_has_avx2();
bool kernel_supports(KernelKind kind, const EvalProgram& prog);

/// Forces a kernel for every subsequent dispatch (tests, benchmarks);
/// std::nullopt restores automatic selection. The environment variable
/// SPARSEZT_KERNEL=scalar has the same effect at startup.
void set_kernel_override(std::optional<KernelKind> kind);
KernelKind select_kernel(const EvalProgram& prog);

void evaluate_batch(KernelKind kind, const EvalProgram& prog, const std::int32_t* logs,
                    std::size_t stride, std::size_t count, std::int32_t* out);

/// Owns a compiled program plus scratch buffers and evaluates lists of
/// points. Not thread-safe; give each worker its own instance.
class BatchEvaluator {
 public:
  explicit BatchEvaluator(const SparsePoly& f);
  BatchEvaluator(const SparsePoly& f, KernelKind kind);

  const EvalProgram& program() const { return prog_; }
  KernelKind kind() const { return kind_; }

  /// out[i] receives the canonical index of f(points[i]).
  void evaluate(std::span<const Point> points, std::span<std::uint32_t> out);
  std::uint32_t evaluate_one(std::span<const FieldElement> x);

 private:
  EvalProgram prog_;
  KernelKind kind_;
  std::vector<std::int32_t> logs_;
  std::vector<std::int32_t> result_;
};

}  // namespace sparsezt::kernels
