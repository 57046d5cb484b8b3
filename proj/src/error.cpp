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

#include "diracac/error.hpp"

namespace diracac {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NegativeEffectiveFrequency: return "NegativeEffectiveFrequency";
    case ErrorKind::PoleError: return "PoleError";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::BranchError: return "BranchError";
    case ErrorKind::UnknownAxis: return "UnknownAxis";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::DegenerateOscillator: return "DegenerateOscillator";
    case ErrorKind::InconsistentRatio: return "InconsistentRatio";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::DomainTooSmall: return "DomainTooSmall";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
  }
  return "Error";
}

std::string Error::compose(ErrorKind kind, const std::string& field,
                           const std::string& reason) {
  std::string out(to_string(kind));
  if (!field.empty()) {
    out += ' ';
    out += field;
  }
  if (!reason.empty()) {
    out += ": ";
    out += reason;
  }
  return out;
}

}  // namespace diracac
