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

#pragma once

#include <span>
#include <string_view>

namespace diracac::kernels {

/// Instruction-set variants of the Sturm-count kernel.
enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Sign-change counts of the LDL^T pivots of T - shift I, i.e. the number of
/// eigenvalues of the symmetric tridiagonal T strictly below each shift.
/// `off_sq` holds the squared off-diagonal (size diag.size() - 1). Pivots
/// smaller than `kPivotMin` in magnitude are replaced by -kPivotMin.
///
/// All variants perform the same IEEE operations in the same order and
/// therefore return identical counts.
inline constexpr double kPivotMin = 1e-290;

void sturm_counts_scalar(std::span<const double> diag, std::span<const double> off_sq,
                         std::span<const double> shifts, std::span<int> counts);

/// AVX2 variant: four shifts per pass. Must only be called when
/// avx2_supported() is true.
void sturm_counts_avx2(std::span<const double> diag, std::span<const double> off_sq,
                       std::span<const double> shifts, std::span<int> counts);

/// True when the AVX2 variant was compiled in and the CPU executes it.
bool avx2_supported();

/// Variant used by sturm_counts(). Defaults to the widest supported one; the
/// environment variable DIRACAC_ISA=scalar forces the reference kernel.
Isa active_isa();

/// Pins the dispatch target (tests, benchmarks). Requests for an unsupported
/// variant fall back to Scalar; returns the variant now active.
Isa select_isa(Isa isa);

void sturm_counts(std::span<const double> diag, std::span<const double> off_sq,
                  std::span<const double> shifts, std::span<int> counts);

}  // namespace diracac::kernels
