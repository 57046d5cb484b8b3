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
#include <vector>

#include "diracac/params.hpp"

namespace diracac {

/// Discretized radial operator
///   -d2/drho2 - (1/rho) d/drho + gamma_eff^2/rho^2 + alpha^2 rho^2
/// on [0, rho_max] with a Dirichlet wall at rho_max.
struct FdProblem {
  double gamma_eff = 0.0;
  double alpha = 1.0;
  double rho_max = 0.0;
  int n_points = 4000;

  /// Smallest rho_max that contains the k_max-th state's Gaussian tail:
  /// 6 sqrt((2 k_max + |gamma_eff| + 1) / alpha).
  static double required_rho_max(double gamma_eff, double alpha, int k_max);

  /// Problem on the default domain for eigenvalues up to index k_max.
  static FdProblem with_default_domain(double gamma_eff, double alpha, int k_max,
                                       int n_points = 4000);

  bool tail_contained(int k_max) const;
};

/// Lowest `count` (<= 10) eigenvalues, ascending.
///
/// The regular power is factored out, u = rho^{|gamma_eff|} w, which leaves
/// the radial Laplacian of dimension 2|gamma_eff| + 2 acting on a smooth w.
/// A cell-centred finite-volume stencil with exact cell-volume weights,
/// symmetrized by the square roots of those weights, yields a symmetric
/// tridiagonal matrix whose eigenvalues are isolated by Sturm-count
/// bisection to 1e-12. Throws GridTooCoarse below 100 points or when the
/// lowest eigenvalue moves by more than 0.1% from N to 2N points, and
/// DomainTooSmall when the lowest eigenvector keeps more than 1e-10 of its
/// mass in the outermost cell.
std::vector<double> fd_eigenvalues(const FdProblem& problem, int count);

/// Same eigenvalues without the N-vs-2N and tail guards.
std::vector<double> fd_eigenvalues_unchecked(const FdProblem& problem, int count);

/// 4 alpha (k + (|gamma_eff| + 1) / 2): the exact eigenvalues the oracle must approach.
double analytic_radial_eigenvalue(double gamma_eff, double alpha, int k);

/// Observed order log2((E_N - E_2N) / (E_2N - E_4N)) of the lowest eigenvalue.
double convergence_order(const FdProblem& problem);

struct OracleGrid {
  int n_points = 4000;
  std::optional<double> rho_max;  // default domain when empty
};

/// Full relativistic energy from the FD eigenvalue of index qn.n():
///   E = mu B/eta +- sqrt(m0^2 + Ehat - 2 alpha gamma/eta - 2 s alpha).
/// Throws DegenerateOscillator at omega_bar = 0, NegativeRadicand when the
/// expression under the root is not positive.
double oracle_energy(const PhysicalConfig& config, const QuantumNumbers& qn,
                     const OracleGrid& grid = {});

}  // namespace diracac
