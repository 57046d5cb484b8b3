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

#include <cmath>
#include <vector>

#include "diracac/error.hpp"
#include "diracac/oracle.hpp"
#include "diracac/spectrum.hpp"
#include "doctest.h"

using namespace diracac;

namespace {

bool throws_kind(ErrorKind kind, auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("analytic radial eigenvalues") {
  CHECK(analytic_radial_eigenvalue(0.0, 1.0, 0) == 2.0);
  CHECK(analytic_radial_eigenvalue(-1.5, 2.0, 2) == doctest::Approx(8.0 * (2 + 1.25)));
}

TEST_CASE("eigenvalues approach the oscillator ladder") {
  for (double g : {0.0, 0.1, 0.25, 0.5, 1.0, 2.0, 3.7}) {
    for (double alpha : {0.5, 1.0, 2.5}) {
      CAPTURE(g);
      CAPTURE(alpha);
      const std::vector<double> v = fd_eigenvalues(FdProblem::with_default_domain(g, alpha, 4), 5);
      REQUIRE(v.size() == 5);
      for (int k = 0; k < 5; ++k) {
        const double exact = analytic_radial_eigenvalue(g, alpha, k);
        CHECK(std::abs(v[k] - exact) / exact < 5e-5);
        if (k > 0) CHECK(v[k] > v[k - 1]);
      }
    }
  }
}

TEST_CASE("second-order convergence") {
  for (double g : {0.0, 0.25, 1.0, 2.0}) {
    CAPTURE(g);
    const double p = convergence_order(FdProblem::with_default_domain(g, 1.0, 2, 800));
    CHECK(p == doctest::Approx(2.0).epsilon(0.05));
  }
}

TEST_CASE("default domain contains the tail") {
  const FdProblem p = FdProblem::with_default_domain(1.5, 0.7, 3);
  CHECK(p.rho_max == doctest::Approx(6.0 * std::sqrt((2 * 3 + 1.5 + 1) / 0.7)));
  CHECK(p.tail_contained(3));
  FdProblem small = p;
  small.rho_max *= 0.5;
  CHECK_FALSE(small.tail_contained(3));
}

TEST_CASE("grid guards") {
  FdProblem p = FdProblem::with_default_domain(0.0, 1.0, 2, 50);
  CHECK(throws_kind(ErrorKind::GridTooCoarse, [&] { fd_eigenvalues(p, 3); }));
  p.n_points = 2000;
  CHECK(throws_kind(ErrorKind::DomainError, [&] { fd_eigenvalues(p, 0); }));
  CHECK(throws_kind(ErrorKind::DomainError, [&] { fd_eigenvalues(p, 11); }));
  p.rho_max = 1.2;
  CHECK(throws_kind(ErrorKind::DomainTooSmall, [&] { fd_eigenvalues(p, 1); }));
  CHECK_NOTHROW(fd_eigenvalues_unchecked(p, 1));
}

TEST_CASE("oracle energy agrees with the closed form") {
  PhysicalConfig c;
  c.m0 = 1.3;
  c.omega = 1.1;
  c.mu = 0.4;
  c.lambda1 = 0.3;
  c.lambda2 = 0.5;
  c.b_field = 0.7;
  for (double eta : {0.5, 1.0}) {
    c.background = CosmicString{eta};
    for (int s : {1, -1}) {
      c.s = s;
      for (int two_ml : {-3, -1, 1, 3}) {
        for (Branch b : {Branch::Particle, Branch::Antiparticle}) {
          const QuantumNumbers qn(1, two_ml, b);
          const double closed = energy(c, qn).energy;
          CHECK(std::abs(oracle_energy(c, qn) - closed) / std::abs(closed) < 1e-4);
        }
      }
    }
  }
}

TEST_CASE("oracle rejects the resonance") {
  PhysicalConfig c;
  c.mu = 1.0;
  c.lambda2 = 1.0;
  c.omega = 0.5;
  CHECK(throws_kind(ErrorKind::DegenerateOscillator, [&] { oracle_energy(c, QuantumNumbers(0, 1)); }));
}

}  // TEST_SUITE
