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

#include <cmath>

#include "diracac/kernels/sturm.hpp"

namespace diracac::kernels {

void sturm_counts_scalar(std::span<const double> diag, std::span<const double> off_sq,
                         std::span<const double> shifts, std::span<int> counts) {
  const std::size_t n = diag.size();
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    const double lambda = shifts[j];
    int count = 0;
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      q = i == 0 ? diag[0] - lambda : (diag[i] - lambda) - off_sq[i - 1] / q;
      if (std::abs(q) < kPivotMin) q = -kPivotMin;
      count += q < 0.0 ? 1 : 0;
    }
    counts[j] = count;
  }
}

}  // namespace diracac::kernels
