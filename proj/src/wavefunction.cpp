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

#include "diracac/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "diracac/error.hpp"
#include "diracac/specfun.hpp"
#include "diracac/spectrum.hpp"
#include "quadrature.hpp"

namespace diracac {

namespace {

constexpr double kRatioTol = 1e-8;
constexpr double kIntegerSnap = 1e-12;

double snap_integer(double g) {
  const double r = std::round(g);
  return std::abs(g - r) <= kIntegerSnap ? r : g;
}

// Partner of the component quantized with degree n. The coupling operator
// maps rho^{|g|} e^{..} 1F1(-n, |g|+1, x) onto a single closed form whose
// exponent and degree depend on where g sits relative to the integers.
RadialComponent partner_of(double g_quantized, int s, int n) {
  RadialComponent p;
  p.g = g_quantized + s;
  p.c = 1.0;
  if (s > 0) {
    const double gp = g_quantized;
    if (gp >= 0.0) {
      p.exponent = gp + 1.0;
      p.degree = n - 1;
    } else if (gp <= -1.0) {
      p.exponent = -gp - 1.0;
      p.degree = n;
    } else {
      p.exponent = -(gp + 1.0);
      p.degree = n;
    }
  } else {
    const double gm = g_quantized;
    if (gm >= 1.0) {
      p.exponent = gm - 1.0;
      p.degree = n + 1;
    } else if (gm <= 0.0) {
      p.exponent = 1.0 - gm;
      p.degree = n;
    } else {
      p.exponent = gm - 1.0;
      p.degree = n + 1;
    }
  }
  if (p.degree < 0) p.c = 0.0;
  return p;
}

struct Couplings {
  double m0;
  double shift;   // mu B / eta
  double energy;
  double kappa_upper() const { return m0 + shift - energy; }  // multiplies phi_+
  double kappa_lower() const { return m0 - shift + energy; }  // multiplies phi_-
};

Couplings couplings_of(const PhysicalConfig& config, const RadialSolution& sol) {
  return {config.m0, magnetic_shift(config), sol.energy};
}

// [d/drho + sign * alpha rho + coeff / rho] applied to a shape.
double first_order(const RadialValue& v, double alpha, double rho, double sign, double coeff) {
  return v.d1 + sign * alpha * rho * v.value + coeff / rho * v.value;
}

double max_abs(std::initializer_list<double> terms) {
  double m = 0.0;
  for (double t : terms) m = std::max(m, std::abs(t));
  return m;
}

double sum_of(std::initializer_list<double> terms) {
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

double scaled(std::initializer_list<double> terms) {
  const double m = max_abs(terms);
  return m == 0.0 ? 0.0 : std::abs(sum_of(terms)) / m;
}

// Integral over x in [0, inf) of x^q e^{-x} poly(x), with the cut-off pushed
// out until the tail [X, 2X] falls below spec.tail_tol of the bulk.
template <class Poly>
double laguerre_weight_integral(double q, int max_degree, Poly&& poly, const QuadratureSpec& spec) {
  // Below q = 1 the weight x^q is not smooth at the origin; y = x^{q+1}
  // absorbs it exactly (x^q dx = dy / (q+1)).
  const bool substitute = q < 1.0;
  auto in_x = [&](double x) { return std::pow(x, q) * std::exp(-x) * poly(x); };
  auto in_y = [&](double y) {
    const double x = std::pow(y, 1.0 / (q + 1.0));
    return std::exp(-x) * poly(x) / (q + 1.0);
  };
  auto piece = [&](double x0, double x1) {
    if (substitute) {
      return detail::integrate(in_y, std::pow(x0, q + 1.0), std::pow(x1, q + 1.0), spec.rel_tol,
                               spec.max_depth);
    }
    return detail::integrate(in_x, x0, x1, spec.rel_tol, spec.max_depth);
  };

  double cut = 2.0 * (std::max(q, 0.0) + 2.0 * max_degree) + 40.0;
  for (int attempt = 0; attempt < 8; ++attempt, cut *= 2.0) {
    const double bulk = piece(0.0, cut);
    const double tail = piece(cut, 2.0 * cut);
    if (std::abs(tail) <= spec.tail_tol * std::abs(bulk) || (bulk == 0.0 && tail == 0.0)) {
      return bulk + tail;
    }
  }
  throw Error(ErrorKind::QuadratureFailure, "", "Gaussian tail bound not met");
}

// integral_0^inf rho * phi_a(rho) phi_b(rho) drho for two components with a
// common exponent.
double component_product_integral(const RadialComponent& a, const RadialComponent& b,
                                  double alpha, const QuadratureSpec& spec) {
  if (a.vanishes() || b.vanishes()) return 0.0;
  const double q = a.exponent;
  const double bq = q + 1.0;
  auto poly = [&](double x) {
    return specfun::kummer_m(-a.degree, bq, x) * specfun::kummer_m(-b.degree, bq, x);
  };
  const double xi = laguerre_weight_integral(q, std::max(a.degree, b.degree), poly, spec);
  // rho^{2q+1} e^{-alpha rho^2} drho = x^q e^{-x} dx / (2 alpha^{q+1})
  return a.c * b.c * xi / (2.0 * std::pow(alpha, q + 1.0));
}

}  // namespace

RadialValue component_shape(const RadialComponent& comp, double alpha, double rho) {
  if (comp.degree < 0) return {};
  const double q = comp.exponent;
  const double a = -comp.degree;
  const double b = q + 1.0;
  const double x = alpha * rho * rho;
  const double m = specfun::kummer_m(a, b, x);
  if (rho == 0.0) {
    // rho^q at the origin: 1 for q = 0, 0 for q > 0 (derivatives unused here).
    return {q == 0.0 ? m : 0.0, 0.0, 0.0};
  }
  const double m1 = specfun::kummer_m_derivative(a, b, x, 1);
  const double m2 = specfun::kummer_m_derivative(a, b, x, 2);

  const double f = std::pow(rho, q) * std::exp(-0.5 * x);
  const double u = q / rho - alpha * rho;
  const double f1 = f * u;
  const double f2 = f * (u * u - q / (rho * rho) - alpha);
  const double m_r = 2.0 * alpha * rho * m1;
  const double m_rr = 2.0 * alpha * m1 + 4.0 * alpha * alpha * rho * rho * m2;
  return {f * m, f1 * m + f * m_r, f2 * m + 2.0 * f1 * m_r + f * m_rr};
}

RadialValue component_value(const RadialComponent& comp, double alpha, double rho) {
  RadialValue v = component_shape(comp, alpha, rho);
  v.value *= comp.c;
  v.d1 *= comp.c;
  v.d2 *= comp.c;
  return v;
}

RadialSolution radial_shape(const PhysicalConfig& config, const QuantumNumbers& qn) {
  const SpectrumPoint point = energy(config, qn);
  const DerivedQuantities& d = point.derived;
  if (d.omega_bar == 0.0) {
    throw Error(ErrorKind::DegenerateOscillator, "omega",
                "omega_bar = 0: the Gaussian ansatz collapses");
  }
  RadialSolution sol;
  sol.alpha = config.m0 * d.omega_bar;
  sol.n = qn.n();
  sol.eta = d.eta;
  sol.energy = point.energy;

  const int s = config.s;
  const double g = snap_integer(d.gamma / d.eta);
  RadialComponent quantized{g, std::abs(g), qn.n(), 1.0};
  RadialComponent partner = partner_of(g, s, qn.n());
  if (s > 0) {
    sol.upper = quantized;
    sol.lower = partner;
  } else {
    sol.upper = partner;
    sol.lower = quantized;
  }
  return sol;
}

std::vector<double> probe_grid(double alpha) {
  std::vector<double> grid;
  const double scale = 1.0 / std::sqrt(alpha);
  for (int i = 0; i < 8; ++i) grid.push_back(scale * (0.5 + 2.0 * i / 7.0));
  return grid;
}

double component_ratio(const PhysicalConfig& config, const QuantumNumbers& qn,
                       const RadialSolution& sol) {
  const Couplings k = couplings_of(config, sol);
  const double coeff_scale = config.m0 + std::abs(k.shift) + std::abs(k.energy);
  const int s = config.s;
  const RadialComponent& driver = s > 0 ? sol.upper : sol.lower;
  const RadialComponent& partner = s > 0 ? sol.lower : sol.upper;

  if (partner.degree < 0) {
    // phi_- = 0 solves the lower equation only if the upper one then reads
    // kappa_upper * phi_+ = 0.
    if (std::abs(k.kappa_upper()) > 1e-12 * coeff_scale) {
      throw Error(ErrorKind::InconsistentRatio, "qn",
                  "state absent: n=" + std::to_string(qn.n()) +
                      " two_ml=" + std::to_string(qn.two_ml()) +
                      " has a vanishing partner but a nonzero coupling");
    }
    return 0.0;
  }
  const double kappa = s > 0 ? k.kappa_lower() : k.kappa_upper();
  if (std::abs(kappa) <= 1e-12 * coeff_scale) {
    throw Error(ErrorKind::InconsistentRatio, "qn", "coupling coefficient vanishes");
  }

  // Candidate radii; those near a node of the denominator are discarded.
  constexpr int kCandidates = 33;
  const double scale = 1.0 / std::sqrt(sol.alpha);
  std::vector<double> num(kCandidates), den(kCandidates);
  double den_max = 0.0;
  for (int i = 0; i < kCandidates; ++i) {
    const double rho = scale * (0.5 + 2.0 * i / (kCandidates - 1));
    const RadialValue vd = component_shape(driver, sol.alpha, rho);
    const RadialValue vp = component_shape(partner, sol.alpha, rho);
    if (s > 0) {
      num[i] = first_order(vd, sol.alpha, rho, +1.0, -driver.g);
      den[i] = kappa * vp.value;
    } else {
      num[i] = kappa * vp.value;
      den[i] = first_order(vd, sol.alpha, rho, -1.0, driver.g);
    }
    den_max = std::max(den_max, std::abs(den[i]));
  }

  std::vector<double> ratios;
  double best = 0.0;
  double best_den = 0.0;
  for (int i = 0; i < kCandidates; ++i) {
    if (std::abs(den[i]) < 1e-3 * den_max) continue;
    ratios.push_back(num[i] / den[i]);
    if (std::abs(den[i]) > best_den) {
      best_den = std::abs(den[i]);
      best = ratios.back();
    }
  }
  if (ratios.size() < 4) {
    throw Error(ErrorKind::InconsistentRatio, "qn", "too few usable probe radii");
  }
  for (double r : ratios) {
    if (std::abs(r - best) > kRatioTol * std::abs(best)) {
      throw Error(ErrorKind::InconsistentRatio, "qn",
                  "probe ratios disagree: " + std::to_string(r) + " vs " + std::to_string(best));
    }
  }
  return best;
}

RadialSolution build_solution(const PhysicalConfig& config, const QuantumNumbers& qn) {
  RadialSolution sol = radial_shape(config, qn);
  const double ratio = component_ratio(config, qn, sol);
  sol.upper.c = 1.0;
  sol.lower.c = sol.lower.degree < 0 ? 0.0 : ratio;
  return normalize(sol);
}

double ode_residual(const PhysicalConfig& config, const QuantumNumbers&, const RadialSolution& sol,
                    std::span<const double> rho_grid) {
  const Couplings k = couplings_of(config, sol);
  const double a = sol.alpha;
  const double detune = (k.shift - k.energy) * (k.shift - k.energy);
  double worst = 0.0;
  for (const auto& [comp, label] : {std::pair{&sol.upper, 1.0}, std::pair{&sol.lower, -1.0}}) {
    if (comp->vanishes()) continue;
    for (double rho : rho_grid) {
      const RadialValue v = component_value(*comp, a, rho);
      const double phi = v.value;
      worst = std::max(worst, scaled({v.d2, v.d1 / rho, -comp->g * comp->g / (rho * rho) * phi,
                                      -a * a * rho * rho * phi, detune * phi,
                                      -k.m0 * k.m0 * phi, 2.0 * a * comp->g * phi,
                                      2.0 * label * a * phi}));
    }
  }
  return worst;
}

ClosureResiduals closure_residuals(const PhysicalConfig& config, const RadialSolution& sol,
                                   std::span<const double> rho_grid) {
  const Couplings k = couplings_of(config, sol);
  const double a = sol.alpha;
  ClosureResiduals out;
  for (double rho : rho_grid) {
    const RadialValue up = component_value(sol.upper, a, rho);
    const RadialValue lo = component_value(sol.lower, a, rho);
    out.upper_equation = std::max(
        out.upper_equation,
        scaled({k.m0 * up.value, k.shift * up.value, -k.energy * up.value, -lo.d1,
                a * rho * lo.value, -sol.lower.g / rho * lo.value}));
    out.lower_equation = std::max(
        out.lower_equation,
        scaled({k.m0 * lo.value, -k.shift * lo.value, k.energy * lo.value, -up.d1,
                -a * rho * up.value, sol.upper.g / rho * up.value}));
  }
  return out;
}

SpinorSample spinor_at(const PhysicalConfig&, const QuantumNumbers& qn, const RadialSolution& sol,
                       double t, double rho, double theta) {
  SpinorSample out;
  out.t = t;
  out.rho = rho;
  out.theta = theta;
  const double up = component_value(sol.upper, sol.alpha, rho).value;
  const double lo = component_value(sol.lower, sol.alpha, rho).value;
  const double phase_up = 0.5 * (qn.two_ml() - 1) * theta - sol.energy * t;
  const double phase_lo = 0.5 * (qn.two_ml() + 1) * theta - sol.energy * t;
  out.upper = up * std::polar(1.0, phase_up);
  out.lower = std::complex<double>(0.0, lo) * std::polar(1.0, phase_lo);
  return out;
}

double total_probability(const RadialSolution& sol, const QuadratureSpec& spec) {
  const double radial = component_product_integral(sol.upper, sol.upper, sol.alpha, spec) +
                        component_product_integral(sol.lower, sol.lower, sol.alpha, spec);
  return 2.0 * std::numbers::pi * radial;
}

double overlap(const RadialSolution& a, const RadialSolution& b, const QuadratureSpec& spec) {
  if (a.alpha != b.alpha || a.upper.exponent != b.upper.exponent ||
      a.lower.exponent != b.lower.exponent) {
    throw Error(ErrorKind::DomainError, "solution",
                "overlap needs states with a common Gaussian scale and exponents");
  }
  const double radial = component_product_integral(a.upper, b.upper, a.alpha, spec) +
                        component_product_integral(a.lower, b.lower, a.alpha, spec);
  return 2.0 * std::numbers::pi * radial;
}

RadialSolution normalize(RadialSolution sol, const QuadratureSpec& spec) {
  const double p = total_probability(sol, spec);
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw Error(ErrorKind::QuadratureFailure, "", "total probability is not positive");
  }
  const double inv = 1.0 / std::sqrt(p);
  sol.upper.c *= inv;
  sol.lower.c *= inv;
  return sol;
}

}  // namespace diracac
