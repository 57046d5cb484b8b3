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

#include <iosfwd>
#include <string>
#include <vector>

namespace diracac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitDegenerate = 3;

/// Runs one invocation. `args` excludes the program name. Tables go to `out`
/// (or to --output), diagnostics to `err` as a single `Kind field: reason` line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diracac::cli
