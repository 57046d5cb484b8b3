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

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "diracac/params.hpp"

namespace diracac::verify {

/// Seeded generator; uniform draws are built from raw 64-bit output so the
/// sequence is identical on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi);
  /// Integer in [0, n).
  int pick(int n);

 private:
  std::mt19937_64 gen_;
};

struct State {
  PhysicalConfig config;
  QuantumNumbers qn{0, 1};
};

/// m0, omega in [0.5, 2]; mu, lambda1, lambda2, B in [0, 1];
/// eta in {0.5, 0.8, 1}; s = +-1; m_l in {+-1/2, +-3/2}; n <= 3; either
/// branch; redrawn until omega_bar > 0.
State random_oracle_state(Rng& rng);

/// Every state with n <= 5, |two_ml| <= 9, s = +-1, both branches, for each
/// eta in `etas`, once field-free and once with all fields switched on.
std::vector<State> residual_suite(const std::vector<double>& etas);

struct CheckResult {
  std::string name;
  bool pass = false;
  double observed = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// One line: `PASS|FAIL name observed tolerance [detail]`.
std::string format_check(const CheckResult& r);

struct Options {
  std::uint64_t seed = 1;
  /// Adds 1e-3 to the closed-form bracket; the oracle comparison must notice.
  bool perturb_bracket = false;
};

/// Closed-form energy as used by the checks (honours perturb_bracket).
double closed_energy(const PhysicalConfig& config, const QuantumNumbers& qn, const Options& opts);

CheckResult check_ode_residual(const std::vector<double>& etas);
CheckResult check_coupled_closure(const std::vector<double>& etas);
/// E(phi_ac +- pi, m_l) = E(phi_ac, m_l +- s) over 50 random configs.
CheckResult check_periodicity(const Options& opts);
/// E(phi_ac +- 2 pi, m_l) = E(phi_ac, m_l +- 1) for s = +1 over 50 random configs.
CheckResult check_periodicity_two_pi(const Options& opts);
CheckResult check_flat_limit(const Options& opts);
CheckResult check_branch_symmetry(const Options& opts);
CheckResult check_resonance(const Options& opts);
CheckResult check_mu0_reduction(const Options& opts);
CheckResult check_oracle_agreement(const Options& opts, int n_configs = 20);
CheckResult check_nonrel_asymptotics(const Options& opts);
/// Richardson order within 2 +- 0.2 for gamma_eff in {0, 0.25, 1, 2}.
CheckResult check_fd_order();
/// Lowest four FD eigenvalues within 1e-4 (relative) of 4 alpha (k + (|g|+1)/2)
/// at 4000 points, same gamma_eff set.
CheckResult check_fd_deviation();
/// |P - 1| after normalize, with P from the closed-form Laguerre norm.
CheckResult check_normalization();
/// Overlaps between different n at fixed (m_l, s, branch).
CheckResult check_orthogonality();

/// The built-in suite run by `verify`, in report order.
std::vector<CheckResult> run_all(const Options& opts);

}  // namespace diracac::verify
