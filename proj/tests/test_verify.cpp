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

#include <vector>

#include "diracac/verify.hpp"
#include "doctest.h"

using namespace diracac;
using namespace diracac::verify;

TEST_SUITE("verify") {

TEST_CASE("seeded draws are reproducible") {
  Rng a(7), b(7), c(8);
  for (int i = 0; i < 20; ++i) {
    const double x = a.uniform(0.0, 1.0);
    CHECK(x == b.uniform(0.0, 1.0));
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(a.uniform(0, 1) != c.uniform(0, 1));
  Rng r(3), s(3);
  const State x = random_oracle_state(r);
  const State y = random_oracle_state(s);
  CHECK(x.qn == y.qn);
  CHECK(x.config.m0 == y.config.m0);
}

TEST_CASE("random oracle states stay in the sampling box") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const State st = random_oracle_state(rng);
    const PhysicalConfig& c = st.config;
    CHECK(c.m0 >= 0.5);
    CHECK(c.m0 <= 2.0);
    CHECK(st.qn.n() <= 3);
    CHECK(std::abs(st.qn.two_ml()) <= 3);
    const double eta = eta_of(c.background);
    CHECK(c.omega - 0.5 * c.mu * c.lambda2 / (eta * c.m0) > 0.0);
  }
}

TEST_CASE("residual suite size") {
  // 2 field settings x 2 s x 6 n x 10 m_l x 2 branches per eta
  CHECK(residual_suite({0.5, 1.0}).size() == 2 * 480);
}

TEST_CASE("checks pass on the closed forms") {
  const Options opts;
  CHECK(check_periodicity(opts).pass);
  CHECK(check_flat_limit(opts).pass);
  CHECK(check_branch_symmetry(opts).pass);
  CHECK(check_resonance(opts).pass);
  CHECK(check_mu0_reduction(opts).pass);
  CHECK(check_nonrel_asymptotics(opts).pass);
  CHECK(check_oracle_agreement(opts, 5).pass);
  CHECK(check_normalization().pass);
}

TEST_CASE("bracket perturbation is detected") {
  Options opts;
  opts.perturb_bracket = true;
  const CheckResult r = check_oracle_agreement(opts, 5);
  CHECK_FALSE(r.pass);
  CHECK(r.observed > 1e-4);
  CHECK(check_mu0_reduction(opts).observed > 1e-6);
}

TEST_CASE("report line format") {
  const CheckResult r{"demo", false, 0.5, 0.25, "x"};
  CHECK(format_check(r) == "FAIL demo 0.5 0.25 (x)");
  CHECK(format_check({"ok", true, 0.0, 1.0, ""}) == "PASS ok 0 1");
}

}  // TEST_SUITE
