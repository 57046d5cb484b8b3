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

#include <optional>
#include <variant>

namespace diracac {

struct Flat {};

/// Conical background with deficit parameter 0 < eta <= 1.
struct CosmicString {
  double eta = 1.0;
};

using Background = std::variant<Flat, CosmicString>;

/// Deficit parameter of a background; Flat behaves exactly like eta = 1.
double eta_of(const Background& background) noexcept;

/// Physical inputs in natural units (hbar = c = 1). The field-source geometry
/// is represented only through the effective parameters lambda1, lambda2, B.
struct PhysicalConfig {
  double m0 = 1.0;
  double omega = 0.0;
  double mu = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double b_field = 0.0;
  int s = +1;  // dipole projection, +1 or -1
  Background background = Flat{};
  /// Sets the Aharonov-Casher phase directly, bypassing lambda1.
  std::optional<double> phi_ac_override;
};

enum class Branch { Particle, Antiparticle };

/// Radial index and orbital number. m_l is half-integer, kept doubled so all
/// angular arithmetic stays exact.
class QuantumNumbers {
 public:
  /// Throws DomainError unless n >= 0 and two_ml is odd.
  QuantumNumbers(int n, int two_ml, Branch branch = Branch::Particle);

  int n() const noexcept { return n_; }
  int two_ml() const noexcept { return two_ml_; }
  Branch branch() const noexcept { return branch_; }
  double ml() const noexcept { return 0.5 * two_ml_; }
  /// m_j = m_l + s/2, always integral.
  int mj(int s) const noexcept { return (two_ml_ + s) / 2; }

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;

 private:
  int n_;
  int two_ml_;
  Branch branch_;
};

struct DerivedQuantities {
  double omega_ac = 0.0;   // mu lambda2 / (eta m0)
  double omega_bar = 0.0;  // omega - omega_ac / 2
  double phi_ac = 0.0;
  double gamma = 0.0;      // m_l + s phi/pi - s eta/2
  int n_s = 0;             // n + (1 - s)/2
  double eta = 1.0;

  friend bool operator==(const DerivedQuantities&, const DerivedQuantities&) = default;
};

/// Throws diracac::Error on the first violated constraint.
void validate(const PhysicalConfig& config);

/// Validates, then evaluates every derived quantity for one state.
DerivedQuantities derive(const PhysicalConfig& config, const QuantumNumbers& qn);

/// Aharonov-Casher phase of a config (override, or 2 s pi mu lambda1).
double phi_ac(const PhysicalConfig& config) noexcept;

/// mu B / eta: the additive magnetic shift of every level.
double magnetic_shift(const PhysicalConfig& config) noexcept;

}  // namespace diracac
