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

#include "diracac/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "diracac/error.hpp"

namespace diracac {

double level_bracket(const DerivedQuantities& d) noexcept {
  // |omega_bar| in the closed form equals omega_bar: validation rejects < 0.
  return d.n_s + (std::abs(d.gamma) - d.gamma) / (2.0 * d.eta);
}

SpectrumPoint energy(const PhysicalConfig& config, const QuantumNumbers& qn) {
  SpectrumPoint p;
  p.qn = qn;
  p.derived = derive(config, qn);
  p.bracket = level_bracket(p.derived);
  const double root =
      std::sqrt(config.m0 * config.m0 + 4.0 * config.m0 * p.derived.omega_bar * p.bracket);
  const double sign = qn.branch() == Branch::Particle ? 1.0 : -1.0;
  p.energy = magnetic_shift(config) + sign * root;
  return p;
}

SpectrumPoint energy_nonrel(const PhysicalConfig& config, const QuantumNumbers& qn) {
  if (qn.branch() != Branch::Particle) {
    throw Error(ErrorKind::BranchError, "branch",
                "the nonrelativistic spectrum has no antiparticle branch");
  }
  SpectrumPoint p;
  p.qn = qn;
  p.derived = derive(config, qn);
  p.bracket = level_bracket(p.derived);
  p.energy = magnetic_shift(config) + 2.0 * p.derived.omega_bar * p.bracket;
  return p;
}

Axis parse_axis(const std::string& name) {
  if (name == "B") return Axis::B;
  if (name == "omega") return Axis::Omega;
  if (name == "mu") return Axis::Mu;
  if (name == "lambda1") return Axis::Lambda1;
  if (name == "lambda2") return Axis::Lambda2;
  if (name == "eta") return Axis::Eta;
  if (name == "phi_ac_override") return Axis::PhiAcOverride;
  throw Error(ErrorKind::UnknownAxis, "axis", "'" + name + "'");
}

std::string axis_name(Axis axis) {
  switch (axis) {
    case Axis::B: return "B";
    case Axis::Omega: return "omega";
    case Axis::Mu: return "mu";
    case Axis::Lambda1: return "lambda1";
    case Axis::Lambda2: return "lambda2";
    case Axis::Eta: return "eta";
    case Axis::PhiAcOverride: return "phi_ac_override";
  }
  return "?";
}

std::vector<double> range_values(const AxisRange& r) {
  if (!std::isfinite(r.start) || !std::isfinite(r.stop) || !std::isfinite(r.step) ||
      !(r.step > 0.0) || r.stop < r.start) {
    throw Error(ErrorKind::EmptyRange, "range", "need finite start <= stop and step > 0");
  }
  const double span = (r.stop - r.start) / r.step;
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double v = r.start + static_cast<double>(i) * r.step;
    if (std::abs(v - r.stop) <= 1e-9 * r.step) v = r.stop;
    values.push_back(v);
  }
  return values;
}

PhysicalConfig with_axis_value(PhysicalConfig c, Axis axis, double value) {
  switch (axis) {
    case Axis::B: c.b_field = value; break;
    case Axis::Omega: c.omega = value; break;
    case Axis::Mu: c.mu = value; break;
    case Axis::Lambda1: c.lambda1 = value; break;
    case Axis::Lambda2: c.lambda2 = value; break;
    case Axis::Eta: c.background = CosmicString{value}; break;
    case Axis::PhiAcOverride: c.phi_ac_override = value; break;
  }
  return c;
}

std::vector<SweepRow> sweep(const PhysicalConfig& config, Axis axis, const AxisRange& range,
                            std::span<const QuantumNumbers> qn_set, bool nonrel) {
  const std::vector<double> values = range_values(range);
  std::vector<QuantumNumbers> qns(qn_set.begin(), qn_set.end());
  std::stable_sort(qns.begin(), qns.end(), [](const QuantumNumbers& a, const QuantumNumbers& b) {
    return std::tuple(a.n(), a.two_ml(), a.branch()) < std::tuple(b.n(), b.two_ml(), b.branch());
  });

  std::vector<SweepRow> rows;
  rows.reserve(values.size() * qns.size());
  for (double v : values) {
    const PhysicalConfig c = with_axis_value(config, axis, v);
    for (const QuantumNumbers& qn : qns) {
      SweepRow row;
      row.axis_value = v;
      row.qn = qn;
      try {
        row.point = nonrel ? energy_nonrel(c, qn) : energy(c, qn);
        row.ok = true;
      } catch (const Error& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace diracac
