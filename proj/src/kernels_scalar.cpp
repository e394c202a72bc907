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

#include <cstdint>

#include "sparsezt/kernels.hpp"

namespace sparsezt::kernels {

EvalProgram EvalProgram::compile(const SparsePoly& f) {
  const Field& field = f.field();
  EvalProgram prog;
  prog.field = &field;
  prog.m = static_cast<std::int32_t>(field.group_order());
  prog.nvars = f.nvars();
  prog.nterms = f.monomial_count();
  prog.zech = field.zech_table();
  prog.coeff_log.reserve(prog.nterms);
  prog.exp_mod.reserve(prog.nterms * prog.nvars);
  prog.exp_positive.reserve(prog.nterms * prog.nvars);
  const auto m = static_cast<std::uint32_t>(prog.m);
  for (const auto& [e, c] : f.terms()) {
    prog.coeff_log.push_back(static_cast<std::int32_t>(field.log(c.index())));
    for (std::uint32_t ei : e) {
      prog.exp_mod.push_back(static_cast<std::int32_t>(ei % m));
      prog.exp_positive.push_back(ei > 0 ? -1 : 0);
    }
  }
  return prog;
}

void evaluate_batch_scalar(const EvalProgram& prog, const std::int32_t* logs, std::size_t stride,
                           std::size_t count, std::int32_t* out) {
  const std::int64_t m = prog.m;
  const std::int32_t zero = prog.m;
  const std::size_t n = prog.nvars;
  for (std::size_t i = 0; i < count; ++i) {
    std::int32_t acc = zero;
    for (std::size_t t = 0; t < prog.nterms; ++t) {
      const std::int32_t* em = prog.exp_mod.data() + t * n;
      const std::int32_t* ep = prog.exp_positive.data() + t * n;
      std::int64_t sum = prog.coeff_log[t];
      bool vanishes = false;
      for (std::size_t j = 0; j < n; ++j) {
        const std::int32_t l = logs[j * stride + i];
        vanishes |= (l == zero) && (ep[j] != 0);
        sum += static_cast<std::int64_t>(em[j]) * l;
      }
      if (vanishes) continue;
      const auto term = static_cast<std::int32_t>(sum % m);
      if (acc == zero) {
        acc = term;
        continue;
      }
      std::int32_t d = term - acc;
      if (d < 0) d += prog.m;
      const auto z = static_cast<std::int32_t>(prog.zech[static_cast<std::size_t>(d)]);
      if (z == zero) {
        acc = zero;
      } else {
        acc += z;
        if (acc >= prog.m) acc -= prog.m;
      }
    }
    out[i] = acc;
  }
}

}  // namespace sparsezt::kernels
