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

// Compiled with -mavx2; only reached after cpu_has_avx2() succeeds.

#include <immintrin.h>

#include <cstdint>

#include "sparsezt/kernels.hpp"

namespace sparsezt::kernels {

namespace {

// x mod m for 0 <= x < 2^24, lane-wise. The float quotient is off by at most
// one, which the two conditional corrections absorb.
inline __m256i mod_small(__m256i x, __m256i m, __m256 inv_m) {
  const __m256 qf = _mm256_floor_ps(_mm256_mul_ps(_mm256_cvtepi32_ps(x), inv_m));
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(_mm256_cvttps_epi32(qf), m));
  r = _mm256_add_epi32(r, _mm256_and_si256(m, _mm256_cmpgt_epi32(_mm256_setzero_si256(), r)));
  const __m256i m_minus_1 = _mm256_sub_epi32(m, _mm256_set1_epi32(1));
  r = _mm256_sub_epi32(r, _mm256_and_si256(m, _mm256_cmpgt_epi32(r, m_minus_1)));
  return r;
}

}  // namespace

void evaluate_batch_avx2(const EvalProgram& prog, const std::int32_t* logs, std::size_t stride,
                         std::size_t count, std::int32_t* out) {
  const std::size_t n = prog.nvars;
  const __m256i m = _mm256_set1_epi32(prog.m);
  const __m256i m_minus_1 = _mm256_set1_epi32(prog.m - 1);
  const __m256i zero_log = m;
  const __m256 inv_m = _mm256_set1_ps(1.0F / static_cast<float>(prog.m));
  const auto* zech = reinterpret_cast<const int*>(prog.zech.data());

  std::size_t i = 0;
  for (; i + 8 <= count; i += 8) {
    __m256i acc = zero_log;
    for (std::size_t t = 0; t < prog.nterms; ++t) {
      const std::int32_t* em = prog.exp_mod.data() + t * n;
      const std::int32_t* ep = prog.exp_positive.data() + t * n;
      __m256i sum = _mm256_set1_epi32(prog.coeff_log[t]);
      __m256i vanish = _mm256_setzero_si256();
      for (std::size_t j = 0; j < n; ++j) {
        const __m256i l =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(logs + j * stride + i));
        vanish = _mm256_or_si256(
            vanish, _mm256_and_si256(_mm256_cmpeq_epi32(l, zero_log), _mm256_set1_epi32(ep[j])));
        if (em[j] == 0) continue;
        const __m256i r = mod_small(_mm256_mullo_epi32(l, _mm256_set1_epi32(em[j])), m, inv_m);
        sum = _mm256_add_epi32(sum, r);
        sum = _mm256_sub_epi32(sum, _mm256_and_si256(m, _mm256_cmpgt_epi32(sum, m_minus_1)));
      }
      // Zech step: acc + term = g^acc (1 + g^(term - acc)).
      __m256i d = _mm256_sub_epi32(sum, acc);
      d = _mm256_add_epi32(d, _mm256_and_si256(m, _mm256_cmpgt_epi32(_mm256_setzero_si256(), d)));
      const __m256i z = _mm256_i32gather_epi32(zech, d, 4);
      __m256i merged = _mm256_add_epi32(acc, z);
      merged = _mm256_sub_epi32(merged, _mm256_and_si256(m, _mm256_cmpgt_epi32(merged, m_minus_1)));
      merged = _mm256_blendv_epi8(merged, zero_log, _mm256_cmpeq_epi32(z, zero_log));
      merged = _mm256_blendv_epi8(merged, sum, _mm256_cmpeq_epi32(acc, zero_log));
      acc = _mm256_blendv_epi8(merged, acc, vanish);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), acc);
  }
  if (i < count) evaluate_batch_scalar(prog, logs + i, stride, count - i, out + i);
}

}  // namespace sparsezt::kernels
