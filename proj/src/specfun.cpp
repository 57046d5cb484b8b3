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

#include "diracac/specfun.hpp"

#include <cmath>
#include <string>

#include "diracac/error.hpp"

namespace diracac::specfun {

namespace {

constexpr double kSeriesTol = 1e-16;
constexpr int kMaxTerms = 10000;

bool is_nonpositive_integer(double a) { return a <= 0.0 && a == std::floor(a); }

}  // namespace

double kummer_m(double a, double b, double x) {
  if (!(x >= 0.0)) throw Error(ErrorKind::DomainError, "x", "kummer_m requires x >= 0");
  if (a == 0.0) return 1.0;

  if (is_nonpositive_integer(a)) {
    const int n = static_cast<int>(-a);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < n; ++k) {
      if (b + k == 0.0) {
        throw Error(ErrorKind::PoleError, "b", "denominator (b)_k vanishes before termination");
      }
      term *= (a + k) / (b + k) * x / (k + 1);
      sum += term;
    }
    return sum;
  }

  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    if (b + k == 0.0) {
      throw Error(ErrorKind::PoleError, "b", "b = " + std::to_string(b));
    }
    term *= (a + k) / (b + k) * x / (k + 1);
    sum += term;
    // Past k ~ x the terms shrink monotonically, so a small term is final.
    if (std::abs(term) <= kSeriesTol * std::abs(sum) && k + 1 > x) return sum;
  }
  throw Error(ErrorKind::NonConvergence, "",
              "kummer_m series did not converge in 10000 terms");
}

double kummer_m_derivative(double a, double b, double x, int order) {
  double factor = 1.0;
  for (int k = 0; k < order; ++k) {
    if (a + k == 0.0) return 0.0;
    factor *= (a + k) / (b + k);
  }
  return factor * kummer_m(a + order, b + order, x);
}

double laguerre(int n, double alpha, double x) {
  if (n < 0) throw Error(ErrorKind::DomainError, "n", "laguerre requires n >= 0");
  if (!(alpha > -1.0)) throw Error(ErrorKind::DomainError, "alpha", "laguerre requires alpha > -1");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

double ln_gamma(double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::DomainError, "x", "ln_gamma requires x > 0");
  return std::lgamma(x);
}

}  // namespace diracac::specfun
