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

#include "diracac/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "diracac/error.hpp"
#include "diracac/oracle.hpp"
#include "diracac/specfun.hpp"
#include "diracac/spectrum.hpp"
#include "diracac/table.hpp"
#include "diracac/wavefunction.hpp"

namespace diracac::verify {

namespace {

constexpr double kExact = 1e-12;
constexpr double kResidualTol = 1e-8;
constexpr double kOracleTol = 1e-4;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

CheckResult make(std::string name, double observed, double tolerance, std::string detail = {}) {
  return {std::move(name), observed <= tolerance, observed, tolerance, std::move(detail)};
}

Branch random_branch(Rng& rng) { return rng.pick(2) == 0 ? Branch::Particle : Branch::Antiparticle; }

int random_two_ml(Rng& rng, int max_abs) {
  const int choices = max_abs + 1;  // odd values in [-max_abs, max_abs]
  return -max_abs + 2 * rng.pick(choices);
}

// A valid config with a random override phase, for the periodicity family.
PhysicalConfig random_phase_config(Rng& rng, int s) {
  PhysicalConfig c;
  c.m0 = rng.uniform(0.5, 2.0);
  c.omega = rng.uniform(0.5, 2.0);
  c.mu = rng.uniform(0.0, 1.0);
  c.b_field = rng.uniform(0.0, 1.0);
  c.s = s;
  c.background = CosmicString{rng.uniform(0.3, 1.0)};
  c.phi_ac_override = rng.uniform(-kTwoPi, kTwoPi);
  return c;
}

PhysicalConfig field_free(double eta) {
  PhysicalConfig c;
  c.m0 = 1.0;
  c.omega = 1.0;
  c.background = CosmicString{eta};
  return c;
}

PhysicalConfig with_fields(double eta) {
  PhysicalConfig c;
  c.m0 = 1.3;
  c.omega = 1.1;
  c.mu = 0.4;
  c.lambda1 = 0.3;
  c.lambda2 = 0.5;
  c.b_field = 0.7;
  c.background = CosmicString{eta};
  return c;
}

std::vector<double> residual_grid(double alpha) {
  std::vector<double> grid;
  const double scale = 1.0 / std::sqrt(alpha);
  constexpr int kPoints = 60;
  for (int i = 0; i < kPoints; ++i) grid.push_back(scale * (0.1 + 5.9 * i / (kPoints - 1)));
  return grid;
}

// Runs `measure` over the residual suite; states whose spinor does not exist
// (InconsistentRatio) are counted, not failed.
template <class F>
CheckResult over_residual_suite(std::string name, const std::vector<double>& etas, F&& measure) {
  double worst = 0.0;
  int built = 0;
  int absent = 0;
  for (const State& st : residual_suite(etas)) {
    try {
      const RadialSolution sol = build_solution(st.config, st.qn);
      worst = std::max(worst, measure(st, sol));
      ++built;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InconsistentRatio) throw;
      ++absent;
    }
  }
  return make(std::move(name), worst, kResidualTol,
              std::to_string(built) + " states, " + std::to_string(absent) + " absent");
}

double analytic_component_norm(const RadialComponent& comp, double alpha) {
  if (comp.vanishes()) return 0.0;
  const double q = comp.exponent;
  const int k = comp.degree;
  using specfun::ln_gamma;
  const double laguerre_norm = std::exp(ln_gamma(k + 1.0) + 2.0 * ln_gamma(q + 1.0) - ln_gamma(k + q + 1.0));
  return comp.c * comp.c * laguerre_norm / (2.0 * std::pow(alpha, q + 1.0));
}

const std::vector<double> kFdGammas = {0.0, 0.25, 1.0, 2.0};

}  // namespace

double Rng::uniform(double lo, double hi) {
  const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int Rng::pick(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

State random_oracle_state(Rng& rng) {
  static const double kEtas[] = {0.5, 0.8, 1.0};
  static const int kTwoMl[] = {-3, -1, 1, 3};
  for (;;) {
    PhysicalConfig c;
    c.m0 = rng.uniform(0.5, 2.0);
    c.omega = rng.uniform(0.5, 2.0);
    c.mu = rng.uniform(0.0, 1.0);
    c.lambda1 = rng.uniform(0.0, 1.0);
    c.lambda2 = rng.uniform(0.0, 1.0);
    c.b_field = rng.uniform(0.0, 1.0);
    const double eta = kEtas[rng.pick(3)];
    c.background = eta == 1.0 ? Background{Flat{}} : Background{CosmicString{eta}};
    c.s = rng.pick(2) == 0 ? 1 : -1;
    const QuantumNumbers qn(rng.pick(4), kTwoMl[rng.pick(4)], random_branch(rng));
    const double omega_bar = c.omega - 0.5 * c.mu * c.lambda2 / (eta * c.m0);
    if (omega_bar > 0.0) return {c, qn};
  }
}

std::vector<State> residual_suite(const std::vector<double>& etas) {
  std::vector<State> out;
  for (double eta : etas) {
    for (const PhysicalConfig& base : {field_free(eta), with_fields(eta)}) {
      for (int s : {1, -1}) {
        PhysicalConfig c = base;
        c.s = s;
        for (int n = 0; n <= 5; ++n) {
          for (int two_ml = -9; two_ml <= 9; two_ml += 2) {
            for (Branch b : {Branch::Particle, Branch::Antiparticle}) {
              out.push_back({c, QuantumNumbers(n, two_ml, b)});
            }
          }
        }
      }
    }
  }
  return out;
}

std::string format_check(const CheckResult& r) {
  std::string line = (r.pass ? "PASS " : "FAIL ") + r.name + " " + format_double(r.observed) +
                     " " + format_double(r.tolerance);
  if (!r.detail.empty()) line += " (" + r.detail + ")";
  return line;
}

double closed_energy(const PhysicalConfig& config, const QuantumNumbers& qn, const Options& opts) {
  const SpectrumPoint p = energy(config, qn);
  if (!opts.perturb_bracket) return p.energy;
  const double bracket = p.bracket + 1e-3;
  const double root = std::sqrt(config.m0 * config.m0 + 4.0 * config.m0 * p.derived.omega_bar * bracket);
  return magnetic_shift(config) + (qn.branch() == Branch::Particle ? root : -root);
}

CheckResult check_ode_residual(const std::vector<double>& etas) {
  return over_residual_suite("ode_residual", etas, [](const State& st, const RadialSolution& sol) {
    return ode_residual(st.config, st.qn, sol, residual_grid(sol.alpha));
  });
}

CheckResult check_coupled_closure(const std::vector<double>& etas) {
  return over_residual_suite("coupled_closure", etas, [](const State& st, const RadialSolution& sol) {
    return closure_residuals(st.config, sol, probe_grid(sol.alpha)).independent(st.config.s);
  });
}

CheckResult check_periodicity(const Options& opts) {
  Rng rng(opts.seed ^ 0x5045524930ULL);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int s = rng.pick(2) == 0 ? 1 : -1;
    const PhysicalConfig c = random_phase_config(rng, s);
    const int n = rng.pick(5);
    const int two_ml = random_two_ml(rng, 7);
    const Branch b = random_branch(rng);
    for (int dir : {1, -1}) {
      PhysicalConfig shifted = c;
      shifted.phi_ac_override = *c.phi_ac_override + dir * std::numbers::pi;
      const double lhs = closed_energy(shifted, QuantumNumbers(n, two_ml, b), opts);
      const double rhs = closed_energy(c, QuantumNumbers(n, two_ml + 2 * dir * s, b), opts);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return make("periodicity", worst, kExact, "phi_ac +- pi <-> m_l +- s, 50 configs");
}

CheckResult check_periodicity_two_pi(const Options& opts) {
  Rng rng(opts.seed ^ 0x3250494FULL);
  double worst = 0.0;
  int violated = 0;
  for (int i = 0; i < 50; ++i) {
    const PhysicalConfig c = random_phase_config(rng, +1);
    const int n = rng.pick(5);
    const int two_ml = random_two_ml(rng, 7);
    const Branch b = random_branch(rng);
    double local = 0.0;
    for (int dir : {1, -1}) {
      PhysicalConfig shifted = c;
      shifted.phi_ac_override = *c.phi_ac_override + dir * kTwoPi;
      const double lhs = closed_energy(shifted, QuantumNumbers(n, two_ml, b), opts);
      const double rhs = closed_energy(c, QuantumNumbers(n, two_ml + 2 * dir, b), opts);
      local = std::max(local, std::abs(lhs - rhs));
    }
    if (local > kExact) ++violated;
    worst = std::max(worst, local);
  }
  return make("periodicity_two_pi", worst, kExact,
              std::to_string(violated) + " of 50 configs violate phi_ac +- 2pi <-> m_l +- 1");
}

CheckResult check_flat_limit(const Options& opts) {
  Rng rng(opts.seed ^ 0x464C4154ULL);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    State st = random_oracle_state(rng);
    st.config.background = Flat{};
    PhysicalConfig curved = st.config;
    curved.background = CosmicString{1.0};
    worst = std::max(worst, std::abs(closed_energy(curved, st.qn, opts) - closed_energy(st.config, st.qn, opts)));
    if (st.qn.branch() == Branch::Particle) {
      worst = std::max(worst, std::abs(energy_nonrel(curved, st.qn).energy -
                                       energy_nonrel(st.config, st.qn).energy));
    }
  }
  return make("flat_limit", worst, kExact, "CosmicString(1) vs Flat, 50 configs");
}

CheckResult check_branch_symmetry(const Options& opts) {
  Rng rng(opts.seed ^ 0x4252414EULL);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const State st = random_oracle_state(rng);
    const QuantumNumbers p(st.qn.n(), st.qn.two_ml(), Branch::Particle);
    const QuantumNumbers a(st.qn.n(), st.qn.two_ml(), Branch::Antiparticle);
    const double sum = closed_energy(st.config, p, opts) + closed_energy(st.config, a, opts);
    worst = std::max(worst, std::abs(sum - 2.0 * magnetic_shift(st.config)));
  }
  return make("branch_symmetry", worst, kExact, "E+ + E- = 2 mu B/eta, 50 configs");
}

CheckResult check_resonance(const Options& opts) {
  double worst = 0.0;
  int count = 0;
  // omega = omega_ac / 2 exactly: mu lambda2 / (eta m0) = 2 omega.
  for (double eta : {1.0, 0.5}) {
    PhysicalConfig c;
    c.m0 = 1.0;
    c.mu = 0.5;
    c.lambda2 = 1.0;
    c.lambda1 = 0.2;
    c.b_field = 0.6;
    c.omega = 0.25 / eta;
    c.background = CosmicString{eta};
    for (int s : {1, -1}) {
      c.s = s;
      for (int n = 0; n < 5; ++n) {
        for (int two_ml : {-3, -1, 1, 3}) {
          for (Branch b : {Branch::Particle, Branch::Antiparticle}) {
            const double expected = magnetic_shift(c) + (b == Branch::Particle ? c.m0 : -c.m0);
            worst = std::max(worst, std::abs(closed_energy(c, QuantumNumbers(n, two_ml, b), opts) - expected));
            ++count;
          }
        }
      }
    }
  }
  return make("resonance", worst, kExact, std::to_string(count) + " states at omega_bar = 0");
}

CheckResult check_mu0_reduction(const Options& opts) {
  Rng rng(opts.seed ^ 0x4D55300ULL);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    PhysicalConfig c;
    c.m0 = rng.uniform(0.5, 2.0);
    c.omega = rng.uniform(0.0, 2.0);
    c.lambda1 = rng.uniform(0.0, 1.0);
    c.lambda2 = rng.uniform(0.0, 1.0);
    c.b_field = rng.uniform(0.0, 1.0);
    c.s = rng.pick(2) == 0 ? 1 : -1;
    const QuantumNumbers qn(rng.pick(6), random_two_ml(rng, 9), random_branch(rng));
    // Usual Dirac oscillator: gamma = m_l - s/2, n_s = n + (1 - s)/2.
    const double gamma = qn.ml() - 0.5 * c.s;
    const double n_s = qn.n() + 0.5 * (1 - c.s);
    const double root = std::sqrt(c.m0 * c.m0 + 4.0 * c.m0 * c.omega * (n_s + 0.5 * (std::abs(gamma) - gamma)));
    const double expected = qn.branch() == Branch::Particle ? root : -root;
    worst = std::max(worst, std::abs(closed_energy(c, qn, opts) - expected));
  }
  return make("mu0_reduction", worst, kExact, "mu = 0, eta = 1 vs usual oscillator, 50 configs");
}

CheckResult check_oracle_agreement(const Options& opts, int n_configs) {
  Rng rng(opts.seed);
  double worst = 0.0;
  for (int i = 0; i < n_configs; ++i) {
    const State st = random_oracle_state(rng);
    const double closed = closed_energy(st.config, st.qn, opts);
    const double numeric = oracle_energy(st.config, st.qn);
    worst = std::max(worst, std::abs(closed - numeric) / std::abs(closed));
  }
  return make("oracle_agreement", worst, kOracleTol,
              std::to_string(n_configs) + " random configs, 4000 points");
}

CheckResult check_nonrel_asymptotics(const Options& opts) {
  // For epsilon = omega_bar/m0 the defect (E - m0) - Ebar is 2 m0 eps^2 X^2 + O(eps^3).
  PhysicalConfig c;
  c.m0 = 1.0;
  c.mu = 0.3;
  c.b_field = 0.5;
  c.lambda1 = 0.1;
  c.background = CosmicString{0.8};
  const QuantumNumbers qn(1, 1, Branch::Particle);
  std::vector<double> xs, ys;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    c.omega = eps * c.m0;
    const double rel = closed_energy(c, qn, opts) - c.m0;
    const double nonrel = energy_nonrel(c, qn).energy;
    xs.push_back(std::log(eps));
    ys.push_back(std::log(std::abs(rel - nonrel)));
  }
  const double mx = (xs[0] + xs[1] + xs[2]) / 3.0;
  const double my = (ys[0] + ys[1] + ys[2]) / 3.0;
  double sxy = 0.0, sxx = 0.0;
  for (int i = 0; i < 3; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  return make("nonrel_asymptotics", std::abs(slope - 2.0), 0.1, "log-log slope " + format_double(slope));
}

CheckResult check_fd_order() {
  double worst = 0.0;
  std::ostringstream detail;
  for (double g : kFdGammas) {
    const double p = convergence_order(FdProblem::with_default_domain(g, 1.0, 3, 1000));
    worst = std::max(worst, std::abs(p - 2.0));
    detail << (g == kFdGammas.front() ? "" : " ") << "g=" << g << ":" << format_double(p);
  }
  return make("fd_convergence_order", worst, 0.2, detail.str());
}

CheckResult check_fd_deviation() {
  double worst = 0.0;
  for (double g : kFdGammas) {
    const FdProblem p = FdProblem::with_default_domain(g, 1.0, 3, 4000);
    const std::vector<double> values = fd_eigenvalues(p, 4);
    for (int k = 0; k < 4; ++k) {
      const double exact = analytic_radial_eigenvalue(g, 1.0, k);
      worst = std::max(worst, std::abs(values[k] - exact) / exact);
    }
  }
  return make("fd_analytic_deviation", worst, kOracleTol, "gamma_eff in {0, 0.25, 1, 2}, k <= 3");
}

CheckResult check_normalization() {
  double worst = 0.0;
  int count = 0;
  for (double eta : {0.5, 1.0}) {
    for (int s : {1, -1}) {
      PhysicalConfig c = with_fields(eta);
      c.s = s;
      for (int n = 0; n <= 4; ++n) {
        for (int two_ml : {-3, -1, 1, 3}) {
          const RadialSolution sol = build_solution(c, QuantumNumbers(n, two_ml));
          const double p = 2.0 * std::numbers::pi *
                           (analytic_component_norm(sol.upper, sol.alpha) +
                            analytic_component_norm(sol.lower, sol.alpha));
          worst = std::max(worst, std::abs(p - 1.0));
          ++count;
        }
      }
    }
  }
  return make("normalization", worst, kResidualTol, std::to_string(count) + " particle states");
}

CheckResult check_orthogonality() {
  double worst = 0.0;
  int pairs = 0;
  for (double eta : {0.5, 1.0}) {
    for (int s : {1, -1}) {
      PhysicalConfig c = with_fields(eta);
      c.s = s;
      for (int two_ml : {-3, -1, 1, 3}) {
        std::vector<RadialSolution> states;
        for (int n = 0; n <= 4; ++n) states.push_back(build_solution(c, QuantumNumbers(n, two_ml)));
        for (std::size_t i = 0; i < states.size(); ++i) {
          for (std::size_t j = i + 1; j < states.size(); ++j) {
            worst = std::max(worst, std::abs(overlap(states[i], states[j])));
            ++pairs;
          }
        }
      }
    }
  }
  return make("orthogonality", worst, kResidualTol, std::to_string(pairs) + " pairs");
}

std::vector<CheckResult> run_all(const Options& opts) {
  const std::vector<double> etas = {0.5, 0.8, 1.0};
  return {
      check_ode_residual(etas),
      check_coupled_closure(etas),
      check_periodicity(opts),
      check_flat_limit(opts),
      check_branch_symmetry(opts),
      check_mu0_reduction(opts),
      check_resonance(opts),
      check_oracle_agreement(opts),
      check_nonrel_asymptotics(opts),
      check_fd_order(),
      check_fd_deviation(),
      check_normalization(),
      check_orthogonality(),
  };
}

}  // namespace diracac::verify
