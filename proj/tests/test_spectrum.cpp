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
#include <random>
#include <vector>

#include "diracac/error.hpp"
#include "diracac/spectrum.hpp"
#include "doctest.h"

using namespace diracac;

namespace {

PhysicalConfig config(double m0, double omega, double mu, double l1, double l2, double b, double eta, int s) {
  PhysicalConfig c;
  c.m0 = m0;
  c.omega = omega;
  c.mu = mu;
  c.lambda1 = l1;
  c.lambda2 = l2;
  c.b_field = b;
  c.background = CosmicString{eta};
  c.s = s;
  return c;
}

// Energies from a 40-digit evaluation of the level formula.
struct Frozen {
  PhysicalConfig c;
  QuantumNumbers qn;
  double energy;
  double nonrel;  // particle branch value of the weak-coupling formula
};

std::vector<Frozen> frozen() {
  return {
      {config(1.3, 1.1, 0.4, 0.3, 0.5, 0.7, 0.5, -1), QuantumNumbers(2, -3, Branch::Particle),
       5.6969640839702201584, 10.059384615384616222},
      {config(1.3, 1.1, 0.4, 0.3, 0.5, 0.7, 0.5, 1), QuantumNumbers(1, -7, Branch::Antiparticle),
       -5.8547018636878210759, 15.736307692307693658},
      {config(2, 0.8, 0.9, 0.1, 0.6, 0.2, 0.8, 1), QuantumNumbers(3, 1, Branch::Particle),
       4.6010712974082130909, 4.0125000000000003407},
      {config(0.7, 1.9, 0.2, 0.8, 0.9, 1.0, 1.0, -1), QuantumNumbers(0, 5, Branch::Particle),
       2.5345235059857502695, 3.7428571428571426537},
  };
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("frozen energies") {
  for (const Frozen& f : frozen()) {
    CHECK(energy(f.c, f.qn).energy == doctest::Approx(f.energy).epsilon(1e-14));
    const QuantumNumbers particle(f.qn.n(), f.qn.two_ml(), Branch::Particle);
    CHECK(energy_nonrel(f.c, particle).energy == doctest::Approx(f.nonrel).epsilon(1e-14));
  }
}

TEST_CASE("field-free flat oscillator ladder") {
  PhysicalConfig c;
  c.omega = 1.0;
  const double expected[] = {1.0, std::sqrt(5.0), 3.0};
  const double nonrel[] = {0.0, 2.0, 4.0};
  for (int n = 0; n < 3; ++n) {
    CHECK(energy(c, QuantumNumbers(n, 1)).energy == doctest::Approx(expected[n]).epsilon(1e-15));
    CHECK(energy(c, QuantumNumbers(n, 1, Branch::Antiparticle)).energy ==
          doctest::Approx(-expected[n]).epsilon(1e-15));
    CHECK(energy_nonrel(c, QuantumNumbers(n, 1)).energy == doctest::Approx(nonrel[n]).epsilon(1e-15));
  }
}

TEST_CASE("nonrel rejects the antiparticle branch") {
  PhysicalConfig c;
  c.omega = 1.0;
  CHECK_THROWS_AS(energy_nonrel(c, QuantumNumbers(0, 1, Branch::Antiparticle)), Error);
}

TEST_CASE("property: branch symmetry, bracket and ordering") {
  std::mt19937_64 gen(20261014);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    PhysicalConfig c = config(0.5 + 1.5 * u(gen), 0.5 + 1.5 * u(gen), u(gen), u(gen), u(gen), u(gen),
                              0.1 + 0.9 * u(gen), u(gen) < 0.5 ? 1 : -1);
    if (c.omega < 0.5 * c.mu * c.lambda2 / (eta_of(c.background) * c.m0)) continue;
    const int n = static_cast<int>(gen() % 6);
    const int two_ml = 2 * static_cast<int>(gen() % 10) - 9;
    const SpectrumPoint p = energy(c, QuantumNumbers(n, two_ml));
    const SpectrumPoint a = energy(c, QuantumNumbers(n, two_ml, Branch::Antiparticle));
    CHECK(p.bracket >= 0.0);
    CHECK(p.bracket == level_bracket(p.derived));
    CHECK(p.energy + a.energy == doctest::Approx(2 * magnetic_shift(c)).epsilon(1e-13));
    CHECK(p.energy - magnetic_shift(c) >= c.m0 * (1.0 - 1e-14));
    // Raising n never lowers the particle level.
    CHECK(energy(c, QuantumNumbers(n + 1, two_ml)).energy >= p.energy);
  }
}

TEST_CASE("axis parsing") {
  CHECK(parse_axis("B") == Axis::B);
  CHECK(parse_axis("phi_ac_override") == Axis::PhiAcOverride);
  CHECK(axis_name(Axis::Lambda2) == "lambda2");
  for (Axis a : {Axis::B, Axis::Omega, Axis::Mu, Axis::Lambda1, Axis::Lambda2, Axis::Eta, Axis::PhiAcOverride}) {
    CHECK(parse_axis(axis_name(a)) == a);
  }
  CHECK_THROWS_AS(parse_axis("b"), Error);
}

TEST_CASE("range arithmetic") {
  const std::vector<double> v = range_values({0.5, 1.0, 0.25});
  REQUIRE(v.size() == 3);
  CHECK(v.back() == 1.0);
  CHECK(range_values({0.0, 1.0, 0.1}).size() == 11);
  CHECK(range_values({2.0, 2.0, 1.0}).size() == 1);
  CHECK_THROWS_AS(range_values({1.0, 0.0, 0.1}), Error);
  CHECK_THROWS_AS(range_values({0.0, 1.0, 0.0}), Error);
}

TEST_CASE("sweep rows") {
  PhysicalConfig c;
  c.omega = 1.0;
  c.mu = 1.0;
  const std::vector<QuantumNumbers> qns = {QuantumNumbers(1, 1), QuantumNumbers(0, -1)};

  SUBCASE("eta sweep orders by value then qn") {
    const auto rows = sweep(c, Axis::Eta, {0.5, 1.0, 0.25}, qns);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].axis_value == 0.5);
    CHECK(rows[0].qn == QuantumNumbers(0, -1));
    CHECK(rows[1].qn == QuantumNumbers(1, 1));
    CHECK(rows[5].axis_value == 1.0);
  }

  SUBCASE("energy is affine in B") {
    const auto rows = sweep(c, Axis::B, {0.0, 2.0, 0.5}, std::span(qns).first(1));
    REQUIRE(rows.size() == 5);
    const double slope = rows[1].point.energy - rows[0].point.energy;
    CHECK(slope == doctest::Approx(0.5).epsilon(1e-14));
    for (std::size_t i = 2; i < rows.size(); ++i) {
      CHECK(rows[i].point.energy - rows[i - 1].point.energy == doctest::Approx(slope).epsilon(1e-12));
    }
  }

  SUBCASE("invalid values become error rows") {
    const auto rows = sweep(c, Axis::Lambda2, {0.0, 3.0, 1.0}, std::span(qns).first(1));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].ok);
    CHECK(rows[2].ok);  // omega_bar = 0
    CHECK_FALSE(rows[3].ok);
    CHECK(rows[3].error.rfind("NegativeEffectiveFrequency", 0) == 0);
  }
}

TEST_CASE("property: energy is affine in B on both branches") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    PhysicalConfig c = config(1.0 + u(gen), 1.0 + u(gen), u(gen), u(gen), u(gen), u(gen), 0.3 + 0.7 * u(gen), 1);
    const QuantumNumbers qn(static_cast<int>(gen() % 4), 2 * static_cast<int>(gen() % 6) - 5,
                            u(gen) < 0.5 ? Branch::Particle : Branch::Antiparticle);
    const double b1 = u(gen), b2 = 3.0 * u(gen);
    c.b_field = b1;
    const double e1 = energy(c, qn).energy;
    c.b_field = b2;
    const double e2 = energy(c, qn).energy;
    CHECK(e2 - e1 == doctest::Approx(c.mu * (b2 - b1) / eta_of(c.background)).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("property: particle level nondecreasing in omega at mu = 0") {
  for (int s : {1, -1}) {
    for (int two_ml = -7; two_ml <= 7; two_ml += 2) {
      PhysicalConfig c = config(1.2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.7, s);
      const QuantumNumbers qn(2, two_ml);
      double last = energy(c, qn).energy;
      for (double w = 0.1; w <= 5.0; w += 0.1) {
        c.omega = w;
        const double e = energy(c, qn).energy;
        CHECK(e >= last);
        last = e;
      }
    }
  }
}

TEST_CASE("curved levels exceed flat ones where the bracket does") {
  // mu = 0, so omega_bar matches and the comparison reduces to the brackets.
  int negative_gamma = 0, larger_bracket = 0, reversed = 0;
  for (double eta : {0.3, 0.6, 0.9}) {
    for (int s : {1, -1}) {
      for (double phi : {-2.0, -0.7, 0.0, 0.4, 1.9}) {
        for (int n = 0; n <= 3; ++n) {
          for (int two_ml = -9; two_ml <= 9; two_ml += 2) {
            PhysicalConfig flat = config(1.0, 0.8, 0.0, 0.0, 0.0, 0.0, 1.0, s);
            flat.background = Flat{};
            flat.phi_ac_override = phi;
            PhysicalConfig curved = flat;
            curved.background = CosmicString{eta};
            const QuantumNumbers qn(n, two_ml);
            const SpectrumPoint f = energy(flat, qn);
            const SpectrumPoint c = energy(curved, qn);
            if (c.derived.gamma >= 0.0) continue;
            ++negative_gamma;
            if (c.bracket > f.bracket) {
              ++larger_bracket;
              CHECK(c.energy > f.energy);
            } else {
              ++reversed;
            }
          }
        }
      }
    }
  }
  MESSAGE("negative gamma: " << negative_gamma << ", curved bracket larger: " << larger_bracket
                             << ", not larger: " << reversed);
  CHECK(larger_bracket > 0);
}

}  // TEST_SUITE
