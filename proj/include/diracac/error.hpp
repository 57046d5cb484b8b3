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

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace diracac {

/// Failure categories raised across the library. The CLI maps them onto exit
/// codes and prints `kind()` as the first token of its error line.
enum class ErrorKind {
  DomainError,
  NegativeEffectiveFrequency,
  PoleError,
  NonConvergence,
  BranchError,
  UnknownAxis,
  EmptyRange,
  DegenerateOscillator,
  InconsistentRatio,
  QuadratureFailure,
  GridTooCoarse,
  DomainTooSmall,
  NegativeRadicand,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string field, const std::string& reason)
      : std::runtime_error(compose(kind, field, reason)),
        kind_(kind),
        field_(std::move(field)) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Offending input field, empty when the failure is not tied to one.
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string compose(ErrorKind kind, const std::string& field,
                             const std::string& reason);

  ErrorKind kind_;
  std::string field_;
};

}  // namespace diracac
