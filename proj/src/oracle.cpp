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

#include "diracac/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diracac/error.hpp"
#include "diracac/kernels/sturm.hpp"

namespace diracac {

namespace {

constexpr double kBisectionTol = 1e-12;
constexpr int kMaxCount = 10;
constexpr int kMinPoints = 100;

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;     // T(i, i+1)
  std::vector<double> off_sq;
};

void check_problem(const FdProblem& p, int count) {
  if (!(p.alpha > 0.0)) throw Error(ErrorKind::DomainError, "alpha", "must be > 0");
  if (!(p.rho_max > 0.0)) throw Error(ErrorKind::DomainError, "rho_max", "must be > 0");
  if (!std::isfinite(p.gamma_eff)) throw Error(ErrorKind::DomainError, "gamma_eff", "must be finite");
  if (count < 1 || count > kMaxCount) {
    throw Error(ErrorKind::DomainError, "count", "must be in [1, 10]");
  }
  if (p.n_points < kMinPoints) {
    throw Error(ErrorKind::GridTooCoarse, "points",
                std::to_string(p.n_points) + " < " + std::to_string(kMinPoints));
  }
}

// Cells i = 1..N centred at (i - 1/2) h; the ghost centre (N + 1/2) h sits
// on the wall rho_max. With w = 2|gamma| + 1 the operator on w is
//   -(rho^{-w}) (rho^w w')' + alpha^2 rho^2 w.
Tridiagonal assemble(const FdProblem& p, int n) {
  const double power = 2.0 * std::abs(p.gamma_eff) + 1.0;
  const double h = p.rho_max / (n + 0.5);
  Tridiagonal t;
  t.diag.resize(n);
  t.off.resize(n - 1);
  t.off_sq.resize(n - 1);
  std::vector<double> volume(n);
  for (int i = 0; i < n; ++i) {
    const double lo = i * h;
    const double hi = (i + 1) * h;
    volume[i] = (std::pow(hi, power + 1.0) - std::pow(lo, power + 1.0)) / ((power + 1.0) * h);
  }
  for (int i = 0; i < n; ++i) {
    const double centre = (i + 0.5) * h;
    const double flux_lo = std::pow(i * h, power);
    const double flux_hi = std::pow((i + 1) * h, power);
    t.diag[i] = (flux_lo + flux_hi) / (h * h * volume[i]) + p.alpha * p.alpha * centre * centre;
    if (i + 1 < n) {
      t.off[i] = -flux_hi / (h * h * std::sqrt(volume[i] * volume[i + 1]));
      t.off_sq[i] = t.off[i] * t.off[i];
    }
  }
  return t;
}

std::vector<double> bisect(const Tridiagonal& t, int count) {
  const std::size_t n = t.diag.size();
  double lower = t.diag[0];
  double upper = t.diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    lower = std::min(lower, t.diag[i] - r);
    upper = std::max(upper, t.diag[i] + r);
  }

  std::vector<double> lo(count, lower), hi(count, upper), shifts, result(count);
  std::vector<int> counts;
  std::vector<int> active;
  for (;;) {
    active.clear();
    shifts.clear();
    for (int k = 0; k < count; ++k) {
      if (hi[k] - lo[k] > kBisectionTol) {
        active.push_back(k);
        shifts.push_back(0.5 * (lo[k] + hi[k]));
      }
    }
    if (active.empty()) break;
    counts.resize(shifts.size());
    kernels::sturm_counts(t.diag, t.off_sq, shifts, counts);
    for (std::size_t j = 0; j < active.size(); ++j) {
      const int k = active[j];
      const double mid = shifts[j];
      if (mid <= lo[k] || mid >= hi[k]) {  // interval at the resolution limit
        lo[k] = hi[k] = mid;
        continue;
      }
      if (counts[j] > k) {
        hi[k] = mid;
      } else {
        lo[k] = mid;
      }
    }
  }
  for (int k = 0; k < count; ++k) result[k] = 0.5 * (lo[k] + hi[k]);
  return result;
}

// Lowest eigenvector by inverse iteration (Thomas solves of T - shift I).
std::vector<double> lowest_eigenvector(const Tridiagonal& t, double eigenvalue) {
  const std::size_t n = t.diag.size();
  const double shift = eigenvalue - 1e-9 * std::max(1.0, std::abs(eigenvalue));
  std::vector<double> x(n, 1.0), c(n), d(n);
  for (int iter = 0; iter < 3; ++iter) {
    double denom = t.diag[0] - shift;
    c[0] = n > 1 ? t.off[0] / denom : 0.0;
    d[0] = x[0] / denom;
    for (std::size_t i = 1; i < n; ++i) {
      denom = (t.diag[i] - shift) - t.off[i - 1] * c[i - 1];
      c[i] = i + 1 < n ? t.off[i] / denom : 0.0;
      d[i] = (x[i] - t.off[i - 1] * d[i - 1]) / denom;
    }
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    for (double& v : x) v /= norm;
  }
  return x;
}

}  // namespace

double FdProblem::required_rho_max(double gamma_eff, double alpha, int k_max) {
  return 6.0 * std::sqrt((2.0 * k_max + std::abs(gamma_eff) + 1.0) / alpha);
}

FdProblem FdProblem::with_default_domain(double gamma_eff, double alpha, int k_max, int n_points) {
  return {gamma_eff, alpha, required_rho_max(gamma_eff, alpha, k_max), n_points};
}

bool FdProblem::tail_contained(int k_max) const {
  return rho_max >= required_rho_max(gamma_eff, alpha, k_max) * (1.0 - 1e-12);
}

double analytic_radial_eigenvalue(double gamma_eff, double alpha, int k) {
  return 4.0 * alpha * (k + 0.5 * (std::abs(gamma_eff) + 1.0));
}

std::vector<double> fd_eigenvalues_unchecked(const FdProblem& problem, int count) {
  check_problem(problem, count);
  return bisect(assemble(problem, problem.n_points), count);
}

std::vector<double> fd_eigenvalues(const FdProblem& problem, int count) {
  check_problem(problem, count);
  const Tridiagonal t = assemble(problem, problem.n_points);
  std::vector<double> values = bisect(t, count);

  FdProblem fine = problem;
  fine.n_points = 2 * problem.n_points;
  const double refined = bisect(assemble(fine, fine.n_points), 1).front();
  const double change = std::abs(refined - values.front()) / std::abs(refined);
  if (change > 1e-3) {
    throw Error(ErrorKind::GridTooCoarse, "points",
                "lowest eigenvalue moved by " + std::to_string(change) + " from N to 2N");
  }

  const std::vector<double> v = lowest_eigenvector(t, values.front());
  const double edge_mass = v.back() * v.back();
  if (edge_mass > 1e-10) {
    throw Error(ErrorKind::DomainTooSmall, "rho_max",
                "outermost cell holds " + std::to_string(edge_mass) + " of the ground state");
  }
  return values;
}

double convergence_order(const FdProblem& problem) {
  const double e1 = fd_eigenvalues(problem, 1).front();
  FdProblem p2 = problem;
  p2.n_points *= 2;
  const double e2 = fd_eigenvalues_unchecked(p2, 1).front();
  FdProblem p4 = problem;
  p4.n_points *= 4;
  const double e4 = fd_eigenvalues_unchecked(p4, 1).front();
  return std::log2(std::abs(e1 - e2) / std::abs(e2 - e4));
}

double oracle_energy(const PhysicalConfig& config, const QuantumNumbers& qn,
                     const OracleGrid& grid) {
  const DerivedQuantities d = derive(config, qn);
  if (!(d.omega_bar > 0.0)) {
    throw Error(ErrorKind::DegenerateOscillator, "omega", "oracle needs omega_bar > 0");
  }
  const double alpha = config.m0 * d.omega_bar;
  const double gamma_eff = d.gamma / d.eta;
  FdProblem problem = FdProblem::with_default_domain(gamma_eff, alpha, qn.n(), grid.n_points);
  if (grid.rho_max) problem.rho_max = *grid.rho_max;
  const double e_hat = fd_eigenvalues(problem, qn.n() + 1).back();
  const double radicand =
      config.m0 * config.m0 + e_hat - 2.0 * alpha * gamma_eff - 2.0 * config.s * alpha;
  if (!(radicand > 0.0)) {
    throw Error(ErrorKind::NegativeRadicand, "", "m0^2 + Ehat - ... = " + std::to_string(radicand));
  }
  const double sign = qn.branch() == Branch::Particle ? 1.0 : -1.0;
  return magnetic_shift(config) + sign * std::sqrt(radicand);
}

}  // namespace diracac
