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

#include <complex>
#include <span>
#include <vector>

#include "diracac/params.hpp"

namespace diracac {

/// One radial component c * rho^q * exp(-alpha rho^2 / 2) * 1F1(-k, q + 1, alpha rho^2).
///
/// `g` is the signed centrifugal parameter (gamma_c / eta) of the component's
/// second-order equation; the exponent q is +|g| for a regular component. The
/// partner of the quantized component follows from the first-order coupling
/// and can carry q = -|g| (square-integrable, |g| < 1) when the pair cannot be
/// regular at once. degree == -1 marks a component that vanishes identically.
struct RadialComponent {
  double g = 0.0;
  double exponent = 0.0;
  int degree = 0;
  double c = 0.0;

  bool vanishes() const noexcept { return degree < 0 || c == 0.0; }
};

struct RadialSolution {
  RadialComponent upper;  // phi_+
  RadialComponent lower;  // phi_-
  double alpha = 0.0;     // m0 * omega_bar
  int n = 0;              // degree of the quantized component (the one labelled by s)
  double eta = 1.0;
  double energy = 0.0;
};

struct RadialValue {
  double value = 0.0;
  double d1 = 0.0;  // d/drho
  double d2 = 0.0;  // d^2/drho^2
};

/// Unit-constant shape of a component and its first two rho-derivatives,
/// all from closed forms (Kummer derivative identity, no differencing).
RadialValue component_shape(const RadialComponent& comp, double alpha, double rho);

/// Component including its constant c.
RadialValue component_value(const RadialComponent& comp, double alpha, double rho);

/// Exponents, degrees and energy of a state with both constants set to 1.
/// Throws DegenerateOscillator at omega_bar = 0.
RadialSolution radial_shape(const PhysicalConfig& config, const QuantumNumbers& qn);

/// Closed-form state: radial_shape, then c_-/c_+ from the first-order
/// coupling, then unit total probability.
RadialSolution build_solution(const PhysicalConfig& config, const QuantumNumbers& qn);

/// 8 probe radii spread over [0.5, 2.5] / sqrt(alpha).
std::vector<double> probe_grid(double alpha);

/// c_-/c_+ fixing the spinor. For s = +1 it comes from
///   (m0 - mu B/eta + E) phi_- = [d/drho + alpha rho - g_+/rho] phi_+,
/// for s = -1 from
///   (m0 + mu B/eta - E) phi_+ = [d/drho - alpha rho + g_-/rho] phi_-,
/// evaluated at every probe radius. Throws InconsistentRatio when the probes
/// disagree beyond 1e-8 relative, or when the state cannot satisfy the other
/// equation (a vanishing partner needs a vanishing coupling coefficient).
double component_ratio(const PhysicalConfig& config, const QuantumNumbers& qn,
                       const RadialSolution& solution);

/// Max over grid and both components of
///   |[d2 + d/rho - g^2/rho^2 - alpha^2 rho^2 + E_c] phi_c| / max|term|,
/// with E_c = (mu B/eta - E)^2 - m0^2 + 2 alpha g_c + 2 c alpha using
/// solution.energy. The grid must be strictly positive.
double ode_residual(const PhysicalConfig& config, const QuantumNumbers& qn,
                    const RadialSolution& solution, std::span<const double> rho_grid);

struct ClosureResiduals {
  double upper_equation = 0.0;  // (m0 + mu B/eta - E) phi_+ = D_- phi_-
  double lower_equation = 0.0;  // (m0 - mu B/eta + E) phi_- = D_+ phi_+
  /// The equation that component_ratio did not use.
  double independent(int s) const noexcept { return s > 0 ? upper_equation : lower_equation; }
};

/// Term-scaled residuals of both first-order equations, max over the grid.
ClosureResiduals closure_residuals(const PhysicalConfig& config, const RadialSolution& solution,
                                   std::span<const double> rho_grid);

struct SpinorSample {
  double t = 0.0;
  double rho = 0.0;
  double theta = 0.0;
  std::complex<double> upper;
  std::complex<double> lower;

  double density() const noexcept { return std::norm(upper) + std::norm(lower); }
};

/// upper = c_+ phi_+ e^{i(m_l - 1/2) theta} e^{-iEt},
/// lower = i c_- phi_- e^{i(m_l + 1/2) theta} e^{-iEt}.
SpinorSample spinor_at(const PhysicalConfig& config, const QuantumNumbers& qn,
                       const RadialSolution& solution, double t, double rho, double theta);

struct QuadratureSpec {
  double rel_tol = 1e-13;
  /// Cut-off is pushed out until the remaining tail is below this fraction.
  double tail_tol = 1e-14;
  int max_depth = 30;
};

/// 2 pi * integral_0^inf (phi_+^2 + phi_-^2) rho drho.
double total_probability(const RadialSolution& solution, const QuadratureSpec& spec = {});

/// 2 pi * integral (phi_+ phi'_+ + phi_- phi'_-) rho drho for two states that
/// share their exponents (same m_l, s and config).
double overlap(const RadialSolution& a, const RadialSolution& b, const QuadratureSpec& spec = {});

/// Rescales both constants to unit total probability. QuadratureFailure when
/// the tail bound cannot be met.
RadialSolution normalize(RadialSolution solution, const QuadratureSpec& spec = {});

}  // namespace diracac
