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

namespace diracac::specfun {

/// Kummer's confluent hypergeometric function 1F1(a; b; x) for x >= 0.
///
/// When `a` is exactly a nonpositive integer -n the series is summed as the
/// degree-n polynomial it reduces to. Otherwise terms are accumulated by the
/// ratio recurrence until a term drops below 1e-16 of the partial sum, with
/// a hard cap of 10000 terms. Throws PoleError if b + k hits zero before the
/// series ends, NonConvergence at the cap, DomainError for x < 0.
double kummer_m(double a, double b, double x);

/// k-th x-derivative of 1F1(a; b; x), via d/dx M(a,b,x) = (a/b) M(a+1,b+1,x).
double kummer_m_derivative(double a, double b, double x, int order);

/// Generalized Laguerre polynomial L_n^alpha(x), three-term recurrence.
double laguerre(int n, double alpha, double x);

/// ln Gamma(x) for x > 0; DomainError otherwise.
double ln_gamma(double x);

}  // namespace diracac::specfun
