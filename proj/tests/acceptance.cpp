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

// Acceptance criteria, one per invocation: `diracac_acceptance K CLI_PATH`
// runs criterion K (1..12); without K every criterion runs. Prints one
// `AC<K> PASS|FAIL ...` line per criterion and exits nonzero on any FAIL.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "diracac/params.hpp"
#include "diracac/table.hpp"
#include "diracac/verify.hpp"
#include "diracac/wavefunction.hpp"

using namespace diracac;
using verify::CheckResult;

namespace {

// Tolerances and budgets as fixed by the criteria.
constexpr double kOracleRelTol = 1e-4;
constexpr double kOracleBudgetSeconds = 60.0;
constexpr double kResidualTol = 1e-8;
constexpr double kResidualBudgetSeconds = 5.0;
constexpr double kIdentityTol = 1e-12;
constexpr double kSlopeTol = 0.1;
constexpr double kOrderTol = 0.2;
constexpr double kNormTol = 1e-8;

const std::vector<double> kResidualEtas = {0.5, 1.0};

std::string cli_path;

struct Outcome {
  bool pass = false;
  std::string summary;
};

Outcome from_checks(const std::vector<CheckResult>& checks) {
  Outcome o{true, {}};
  for (const CheckResult& c : checks) {
    o.pass = o.pass && c.pass;
    if (!o.summary.empty()) o.summary += "; ";
    o.summary += verify::format_check(c);
  }
  return o;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CheckResult timing(const std::string& name, double elapsed, double budget) {
  return {name, elapsed <= budget, elapsed, budget, "seconds"};
}

Outcome ac1() {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r = verify::check_oracle_agreement(verify::Options{}, 20);
  r.tolerance = kOracleRelTol;
  r.pass = r.observed <= kOracleRelTol;
  return from_checks({r, timing("runtime", seconds_since(start), kOracleBudgetSeconds)});
}

Outcome ac2() {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r = verify::check_ode_residual(kResidualEtas);
  r.pass = r.observed <= kResidualTol;
  return from_checks({r, timing("runtime", seconds_since(start), kResidualBudgetSeconds)});
}

Outcome ac3() {
  CheckResult r = verify::check_coupled_closure(kResidualEtas);
  r.pass = r.observed <= kResidualTol;
  return from_checks({r});
}

Outcome ac4() { return from_checks({verify::check_periodicity_two_pi(verify::Options{})}); }

Outcome ac5() {
  CheckResult energies = verify::check_flat_limit(verify::Options{});
  // Wavefunctions as well: the eta = 1 spinor equals the flat one.
  double worst = 0.0;
  PhysicalConfig flat;
  flat.m0 = 1.3;
  flat.omega = 1.1;
  flat.mu = 0.4;
  flat.lambda1 = 0.3;
  flat.lambda2 = 0.5;
  flat.b_field = 0.7;
  for (int s : {1, -1}) {
    flat.s = s;
    PhysicalConfig curved = flat;
    curved.background = CosmicString{1.0};
    for (int n = 0; n <= 3; ++n) {
      for (int two_ml : {-3, -1, 1, 3}) {
        const QuantumNumbers qn(n, two_ml);
        const RadialSolution a = build_solution(flat, qn);
        const RadialSolution b = build_solution(curved, qn);
        for (double rho : {0.3, 0.9, 1.7}) {
          const double du = component_value(a.upper, a.alpha, rho).value - component_value(b.upper, b.alpha, rho).value;
          const double dl = component_value(a.lower, a.alpha, rho).value - component_value(b.lower, b.alpha, rho).value;
          worst = std::max({worst, std::abs(du), std::abs(dl)});
        }
      }
    }
  }
  const CheckResult waves{"flat_limit_wavefunctions", worst <= kIdentityTol, worst, kIdentityTol,
                          "32 particle states, 3 radii"};
  return from_checks({energies, waves});
}

Outcome ac6() { return from_checks({verify::check_branch_symmetry(verify::Options{})}); }
Outcome ac7() { return from_checks({verify::check_resonance(verify::Options{})}); }
Outcome ac8() { return from_checks({verify::check_mu0_reduction(verify::Options{})}); }

Outcome ac9() {
  CheckResult r = verify::check_nonrel_asymptotics(verify::Options{});
  r.pass = r.observed <= kSlopeTol;
  return from_checks({r});
}

Outcome ac10() {
  CheckResult order = verify::check_fd_order();
  order.pass = order.observed <= kOrderTol;
  CheckResult dev = verify::check_fd_deviation();
  dev.pass = dev.observed <= kOracleRelTol;
  return from_checks({order, dev});
}

Outcome ac11() {
  CheckResult norm = verify::check_normalization();
  norm.pass = norm.observed <= kNormTol;
  CheckResult orth = verify::check_orthogonality();
  orth.pass = orth.observed <= kNormTol;
  return from_checks({norm, orth});
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = "'" + cli_path + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome ac12() {
  if (cli_path.empty()) return {false, "no CLI path given"};
  std::vector<CheckResult> checks;
  const std::string sweep_args =
      "--format json --seed 7 sweep --m0 1.3 --omega 1.1 --mu 0.4 --lambda2 0.5 --axis eta "
      "--range 0.5:1:0.05 --n 0..3 --two-ml -3..3 --s both --branch both";
  const Run s1 = run_cli(sweep_args);
  const Run s2 = run_cli(sweep_args);
  checks.push_back({"sweep_byte_identical", s1.code == 0 && !s1.out.empty() && s1.out == s2.out,
                    static_cast<double>(s1.out.size()), 0.0, "bytes of output"});

  const Run v1 = run_cli("verify --seed 7");
  const Run v2 = run_cli("verify --seed 7");
  checks.push_back({"verify_byte_identical", !v1.out.empty() && v1.out == v2.out,
                    static_cast<double>(v1.out.size()), 0.0, "bytes of output"});
  checks.push_back({"verify_exit_0", v1.code == 0, static_cast<double>(v1.code), 0.0, "exit code"});

  const Run bug = run_cli("verify --seed 7 --inject-bracket-bug");
  checks.push_back({"verify_injected_exit_1", bug.code == 1, static_cast<double>(bug.code), 1.0, "exit code"});
  return from_checks(checks);
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria = {
    {"oracle_closed_form_agreement", ac1},
    {"ode_residual", ac2},
    {"coupled_first_order_closure", ac3},
    {"periodicity_two_pi", ac4},
    {"flat_limit", ac5},
    {"branch_symmetry", ac6},
    {"resonance", ac7},
    {"mu0_reduction", ac8},
    {"nonrel_asymptotics", ac9},
    {"fd_self_check", ac10},
    {"normalization_orthogonality", ac11},
    {"cli_determinism", ac12},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  if (argc > 1) {
    which.push_back(std::stoi(argv[1]));
  } else {
    for (int k = 1; k <= static_cast<int>(kCriteria.size()); ++k) which.push_back(k);
  }
  if (argc > 2) cli_path = argv[2];

  bool all = true;
  for (int k : which) {
    if (k < 1 || k > static_cast<int>(kCriteria.size())) {
      std::cerr << "no criterion " << k << '\n';
      return 2;
    }
    const auto& [name, fn] = kCriteria[k - 1];
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "AC" << k << ' ' << (o.pass ? "PASS" : "FAIL") << ' ' << name << " | " << o.summary << '\n';
  }
  return all ? 0 : 1;
}
