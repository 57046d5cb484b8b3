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

#include <cmath>
#include <limits>
#include <sstream>

#include "diracac/table.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace diracac;

TEST_SUITE("table") {

TEST_CASE("doubles print with 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(1e-300) == "1e-300");
  CHECK(format_double(2.0 / 3.0) == "0.66666666666666663");
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "NaN");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
  for (double v : {std::sqrt(5.0), 1.0 / 3.0, -2.5e-17, 6.02214076e23}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("csv layout") {
  Table t;
  t.columns = {"a", "b", "c"};
  t.comments = {"note"};
  t.rows = {{std::int64_t{-3}, 0.5, std::string("x,y")}, {std::int64_t{4}, 2.0, std::string("say \"hi\"")}};
  std::ostringstream os;
  write_csv(t, os);
  CHECK(os.str() == "# note\na,b,c\n-3,0.5,\"x,y\"\n4,2,\"say \"\"hi\"\"\"\n");
}

TEST_CASE("json layout") {
  Table t;
  t.columns = {"b", "a"};
  t.comments = {"dropped"};
  t.rows = {{std::numeric_limits<double>::quiet_NaN(), std::string("z")}};
  std::ostringstream os;
  write_json(t, os);
  const auto doc = nlohmann::ordered_json::parse(os.str());
  REQUIRE(doc.is_array());
  CHECK(doc[0].begin().key() == "b");
  CHECK(doc[0]["b"].is_null());
  CHECK(doc[0]["a"] == "z");
}

TEST_CASE("empty table") {
  Table t;
  t.columns = {"x"};
  std::ostringstream csv, json;
  write_csv(t, csv);
  write_json(t, json);
  CHECK(csv.str() == "x\n");
  CHECK(json.str() == "[]\n");
}

}  // TEST_SUITE
