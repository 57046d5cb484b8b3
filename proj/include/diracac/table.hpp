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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace diracac {

using Cell = std::variant<std::int64_t, double, std::string>;

/// Rectangular result table shared by every CLI subcommand.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Emitted as leading `# ` lines in CSV, dropped from JSON.
  std::vector<std::string> comments;
};

/// 17 significant digits, locale-independent. Non-finite values print as
/// NaN, inf, -inf.
std::string format_double(double value);

void write_csv(const Table& table, std::ostream& out);

/// Array of row objects keyed by column name; non-finite doubles become null.
void write_json(const Table& table, std::ostream& out);

}  // namespace diracac
