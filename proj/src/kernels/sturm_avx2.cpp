/* Copyright 2026 The diracac Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Compiled with -mavx2 only; reached exclusively through the runtime check in
// sturm_dispatch.cpp.
#include "diracac/kernels/sturm.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

#include <array>
#endif

namespace diracac::kernels {

#if defined(__AVX2__)

void sturm_counts_avx2(std::span<const double> diag, std::span<const double> off_sq,
                       std::span<const double> shifts, std::span<int> counts) {
  const std::size_t n = diag.size();
  const __m256d pivmin = _mm256_set1_pd(kPivotMin);
  const __m256d neg_pivmin = _mm256_set1_pd(-kPivotMin);
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);

  for (std::size_t j = 0; j < shifts.size(); j += 4) {
    const std::size_t lanes = shifts.size() - j < 4 ? shifts.size() - j : 4;
    // Short tails repeat the last shift; the duplicate lanes are discarded.
    std::array<double, 4> lam{};
    for (std::size_t l = 0; l < 4; ++l) lam[l] = shifts[j + (l < lanes ? l : lanes - 1)];
    const __m256d lambda = _mm256_loadu_pd(lam.data());

    __m256d count = zero;
    __m256d q = zero;
    for (std::size_t i = 0; i < n; ++i) {
      const __m256d d = _mm256_sub_pd(_mm256_set1_pd(diag[i]), lambda);
      q = i == 0 ? d : _mm256_sub_pd(d, _mm256_div_pd(_mm256_set1_pd(off_sq[i - 1]), q));
      const __m256d tiny = _mm256_cmp_pd(_mm256_andnot_pd(sign_mask, q), pivmin, _CMP_LT_OQ);
      q = _mm256_blendv_pd(q, neg_pivmin, tiny);
      count = _mm256_add_pd(count, _mm256_and_pd(_mm256_cmp_pd(q, zero, _CMP_LT_OQ), one));
    }
    std::array<double, 4> out{};
    _mm256_storeu_pd(out.data(), count);
    for (std::size_t l = 0; l < lanes; ++l) counts[j + l] = static_cast<int>(out[l]);
  }
}

#else

void sturm_counts_avx2(std::span<const double> diag, std::span<const double> off_sq,
                       std::span<const double> shifts, std::span<int> counts) {
  sturm_counts_scalar(diag, off_sq, shifts, counts);
}

#endif

}  // namespace diracac::kernels
