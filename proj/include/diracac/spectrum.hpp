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
#include <string>
#include <vector>

#include "diracac/params.hpp"

namespace diracac {

struct SpectrumPoint {
  double energy = 0.0;
  QuantumNumbers qn{0, 1};
  DerivedQuantities derived;
  /// n_s + (|gamma| - gamma) / (2 eta); never negative.
  double bracket = 0.0;
};

/// Relativistic level
///   E = mu B/eta +- sqrt(m0^2 + 4 m0 omega_bar * bracket),
/// with + on the particle branch. Flat is the eta = 1 case. At omega_bar = 0
/// every state collapses onto mu B/eta +- m0.
SpectrumPoint energy(const PhysicalConfig& config, const QuantumNumbers& qn);

/// Nonrelativistic level Ebar = mu B/eta + 2 omega_bar * bracket, from
/// E = Ebar + m0 at weak coupling. Particle branch only (BranchError).
SpectrumPoint energy_nonrel(const PhysicalConfig& config, const QuantumNumbers& qn);

/// Bracket of a derived state; shared with the oracle and the wavefunctions.
double level_bracket(const DerivedQuantities& derived) noexcept;

/// Parameters that `sweep` can scan.
enum class Axis { B, Omega, Mu, Lambda1, Lambda2, Eta, PhiAcOverride };

/// Throws UnknownAxis for names outside
/// {B, omega, mu, lambda1, lambda2, eta, phi_ac_override}.
Axis parse_axis(const std::string& name);
std::string axis_name(Axis axis);

struct AxisRange {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
};

/// Inclusive grid start, start+step, ..., stop (within rounding). EmptyRange
/// when step <= 0 or stop < start.
std::vector<double> range_values(const AxisRange& range);

/// Copy of `config` with one parameter replaced.
PhysicalConfig with_axis_value(PhysicalConfig config, Axis axis, double value);

struct SweepRow {
  double axis_value = 0.0;
  QuantumNumbers qn{0, 1};
  bool ok = false;
  SpectrumPoint point;  // meaningful only when ok
  std::string error;    // reason when !ok
};

/// Dense (axis value x qn) table. Rows are ordered by axis value, then
/// (n, two_ml, branch). A value whose config fails validation yields rows
/// with ok = false instead of being dropped.
std::vector<SweepRow> sweep(const PhysicalConfig& config, Axis axis, const AxisRange& range,
                            std::span<const QuantumNumbers> qn_set, bool nonrel = false);

}  // namespace diracac
