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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "diracac/kernels/sturm.hpp"

namespace diracac::kernels {

namespace {

Isa detect() {
  if (const char* env = std::getenv("DIRACAC_ISA"); env && std::string_view(env) == "scalar") {
    return Isa::Scalar;
  }
  return avx2_supported() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool avx2_supported() {
#if defined(DIRACAC_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

Isa select_isa(Isa isa) {
  if (isa == Isa::Avx2 && !avx2_supported()) isa = Isa::Scalar;
  current().store(isa, std::memory_order_relaxed);
  return isa;
}

void sturm_counts(std::span<const double> diag, std::span<const double> off_sq,
                  std::span<const double> shifts, std::span<int> counts) {
#if defined(DIRACAC_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    sturm_counts_avx2(diag, off_sq, shifts, counts);
    return;
  }
#endif
  sturm_counts_scalar(diag, off_sq, shifts, counts);
}

}  // namespace diracac::kernels
