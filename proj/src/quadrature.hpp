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

#include <array>
#include <cmath>
#include <numbers>

namespace diracac::detail {

/// 20-point Gauss-Legendre rule on [-1, 1], nodes by Newton iteration.
struct GaussLegendre20 {
  static constexpr int kSize = 20;
  std::array<double, kSize> nodes{};
  std::array<double, kSize> weights{};

  GaussLegendre20() {
    for (int i = 0; i < kSize; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (kSize + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= kSize; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = kSize * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }

  static const GaussLegendre20& instance() {
    static const GaussLegendre20 rule;
    return rule;
  }

  template <class F>
  double apply(F&& f, double a, double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < kSize; ++i) sum += weights[i] * f(mid + half * nodes[i]);
    return sum * half;
  }
};

template <class F>
double adaptive_gl(F& f, double a, double b, double whole, double abs_tol, int depth) {
  const auto& rule = GaussLegendre20::instance();
  const double mid = 0.5 * (a + b);
  const double left = rule.apply(f, a, mid);
  const double right = rule.apply(f, mid, b);
  const double diff = std::abs(left + right - whole);
  // The second test stops refinement once the difference is pure rounding.
  if (depth <= 0 || diff <= abs_tol || diff <= 1e-15 * (std::abs(left) + std::abs(right))) {
    return left + right;
  }
  return adaptive_gl(f, a, mid, left, abs_tol, depth - 1) +
         adaptive_gl(f, mid, b, right, abs_tol, depth - 1);
}

/// Integral of f over [a, b] to `rel_tol` relative to a 32-panel estimate of
/// the integral of |f|.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol, int max_depth) {
  const auto& rule = GaussLegendre20::instance();
  constexpr int kPanels = 32;
  const double width = (b - a) / kPanels;
  double reference = 0.0;
  auto absf = [&](double x) { return std::abs(f(x)); };
  for (int p = 0; p < kPanels; ++p) reference += rule.apply(absf, a + p * width, a + (p + 1) * width);
  const double abs_tol = rel_tol * reference / kPanels;
  double total = 0.0;
  for (int p = 0; p < kPanels; ++p) {
    const double lo = a + p * width;
    const double hi = lo + width;
    total += adaptive_gl(f, lo, hi, rule.apply(f, lo, hi), abs_tol, max_depth);
  }
  return total;
}

}  // namespace diracac::detail
