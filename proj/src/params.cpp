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

#include "diracac/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "diracac/error.hpp"

namespace diracac {

namespace {

void require_finite(double value, const char* field) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::DomainError, field, "must be finite");
  }
}

double omega_ac_of(const PhysicalConfig& c) {
  return c.mu * c.lambda2 / (eta_of(c.background) * c.m0);
}

}  // namespace

double eta_of(const Background& background) noexcept {
  if (const auto* cs = std::get_if<CosmicString>(&background)) return cs->eta;
  return 1.0;
}

QuantumNumbers::QuantumNumbers(int n, int two_ml, Branch branch)
    : n_(n), two_ml_(two_ml), branch_(branch) {
  if (n < 0) throw Error(ErrorKind::DomainError, "n", "must be >= 0");
  if (two_ml % 2 == 0) {
    throw Error(ErrorKind::DomainError, "two_ml", "must be odd (m_l half-integer)");
  }
}

double phi_ac(const PhysicalConfig& c) noexcept {
  if (c.phi_ac_override) return *c.phi_ac_override;
  return 2.0 * c.s * std::numbers::pi * c.mu * c.lambda1;
}

double magnetic_shift(const PhysicalConfig& c) noexcept {
  return c.mu * c.b_field / eta_of(c.background);
}

void validate(const PhysicalConfig& c) {
  require_finite(c.m0, "m0");
  require_finite(c.omega, "omega");
  require_finite(c.mu, "mu");
  require_finite(c.lambda1, "lambda1");
  require_finite(c.lambda2, "lambda2");
  require_finite(c.b_field, "B");
  if (c.phi_ac_override) require_finite(*c.phi_ac_override, "phi_ac");
  if (!(c.m0 > 0.0)) throw Error(ErrorKind::DomainError, "m0", "must be > 0");
  if (c.s != 1 && c.s != -1) throw Error(ErrorKind::DomainError, "s", "must be +1 or -1");
  const double eta = eta_of(c.background);
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw Error(ErrorKind::DomainError, "eta", "must satisfy 0 < eta <= 1");
  }
  if (c.omega < 0.0) throw Error(ErrorKind::DomainError, "omega", "must be >= 0");
  if (c.lambda1 < 0.0) throw Error(ErrorKind::DomainError, "lambda1", "must be >= 0");
  if (c.lambda2 < 0.0) throw Error(ErrorKind::DomainError, "lambda2", "must be >= 0");
  const double omega_bar = c.omega - 0.5 * omega_ac_of(c);
  if (omega_bar < 0.0) {
    throw Error(ErrorKind::NegativeEffectiveFrequency, "omega",
                "omega - omega_ac/2 = " + std::to_string(omega_bar) + " < 0");
  }
}

DerivedQuantities derive(const PhysicalConfig& c, const QuantumNumbers& qn) {
  validate(c);
  DerivedQuantities d;
  d.eta = eta_of(c.background);
  d.omega_ac = omega_ac_of(c);
  d.omega_bar = c.omega - 0.5 * d.omega_ac;
  d.phi_ac = phi_ac(c);
  d.gamma = qn.ml() + c.s * d.phi_ac / std::numbers::pi - 0.5 * c.s * d.eta;
  d.n_s = qn.n() + (1 - c.s) / 2;
  return d;
}

}  // namespace diracac
