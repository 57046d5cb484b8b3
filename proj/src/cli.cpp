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

#include "diracac/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diracac/error.hpp"
#include "diracac/oracle.hpp"
#include "diracac/params.hpp"
#include "diracac/spectrum.hpp"
#include "diracac/table.hpp"
#include "diracac/verify.hpp"
#include "diracac/wavefunction.hpp"
#include "json.hpp"

namespace diracac::cli {

namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Flags that may also come from the --config file, keyed by flag name.
const std::vector<std::string> kPhysicsKeys = {"m0",  "omega", "mu",     "lambda1", "lambda2",
                                               "B",   "s",     "eta",    "phi-ac",  "n",
                                               "ml",  "two-ml", "branch", "nonrel"};
const std::vector<std::string> kCommandKeys = {"axis",  "range",  "rho",    "gamma-eff",
                                               "alpha", "rho-max", "points", "count"};

struct Inputs {
  std::map<std::string, std::string> flags;  // given on the command line
  std::map<std::string, std::string> file;   // from --config
  std::string format = "csv";
  std::string output;
  std::string config_path;
  std::uint64_t seed = 1;
  bool inject_bracket_bug = false;

  std::optional<std::string> get(const std::string& key) const {
    if (auto it = flags.find(key); it != flags.end()) return it->second;
    if (auto it = file.find(key); it != file.end()) return it->second;
    return std::nullopt;
  }
};

std::string trim(std::string text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  return first == std::string::npos ? std::string{} : text.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, sep)) parts.push_back(trim(part));
  return parts;
}

double parse_number(std::string text, const std::string& field) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::DomainError, field, "not a number: '" + text + "'");
  }
  return value;
}

int parse_int(const std::string& text, const std::string& field) {
  const double value = parse_number(text, field);
  if (value != std::floor(value) || std::abs(value) > 1e9) {
    throw Error(ErrorKind::DomainError, field, "not an integer: '" + text + "'");
  }
  return static_cast<int>(value);
}

// "a", "a,b,c" or "a..b" (inclusive, in steps of `step`); values parsed by `parse`.
template <class Parse>
std::vector<int> parse_int_set(const std::string& text, const std::string& field, int step,
                               Parse&& parse) {
  std::vector<int> values;
  for (const std::string& item : split(text, ',')) {
    if (const auto dots = item.find(".."); dots != std::string::npos) {
      const int lo = parse(item.substr(0, dots));
      const int hi = parse(item.substr(dots + 2));
      if (hi < lo) throw Error(ErrorKind::EmptyRange, field, "range '" + item + "' is empty");
      for (int v = lo; v <= hi; v += step) values.push_back(v);
    } else {
      values.push_back(parse(item));
    }
  }
  if (values.empty()) throw Error(ErrorKind::EmptyRange, field, "no values");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

// Half-integer m_l given as "p/2" or as a decimal; returned doubled.
int parse_two_ml_from_ml(std::string text) {
  text = trim(text);
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    if (trim(text.substr(slash + 1)) != "2") {
      throw Error(ErrorKind::DomainError, "ml", "must be a half-integer p/2: '" + text + "'");
    }
    return parse_int(text.substr(0, slash), "ml");
  }
  const double doubled = 2.0 * parse_number(text, "ml");
  if (doubled != std::floor(doubled)) {
    throw Error(ErrorKind::DomainError, "ml", "must be a half-integer: '" + text + "'");
  }
  return static_cast<int>(doubled);
}

AxisRange parse_range(const std::string& text, const std::string& field) {
  const std::vector<std::string> parts = split(text, ':');
  if (parts.size() != 3) throw Error(ErrorKind::DomainError, field, "expected start:stop:step");
  return {parse_number(parts[0], field), parse_number(parts[1], field),
          parse_number(parts[2], field)};
}

bool parse_bool(const std::string& text, const std::string& field) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw Error(ErrorKind::DomainError, field, "expected true or false");
}

std::string json_scalar(const json& value, const std::string& key) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number_integer()) return std::to_string(value.get<std::int64_t>());
  if (value.is_number()) return format_double(value.get<double>());
  throw Error(ErrorKind::DomainError, "config", "key '" + key + "' must be a scalar");
}

void load_config(Inputs& in) {
  if (in.config_path.empty()) return;
  std::ifstream file(in.config_path);
  if (!file) throw Error(ErrorKind::DomainError, "config", "cannot open '" + in.config_path + "'");
  json doc;
  try {
    doc = json::parse(file);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::DomainError, "config", e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::DomainError, "config", "must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    const bool known = std::find(kPhysicsKeys.begin(), kPhysicsKeys.end(), key) != kPhysicsKeys.end() ||
                       std::find(kCommandKeys.begin(), kCommandKeys.end(), key) != kCommandKeys.end();
    if (!known) throw Error(ErrorKind::DomainError, "config", "unknown key '" + key + "'");
    in.file[key] = json_scalar(value, key);
  }
}

struct RunConfig {
  PhysicalConfig base;
  std::vector<int> s_set{+1};
  std::vector<int> n_set{0};
  std::vector<int> two_ml_set{1};
  std::vector<Branch> branches{Branch::Particle};
  bool nonrel = false;
};

RunConfig resolve(const Inputs& in) {
  RunConfig run;
  PhysicalConfig& c = run.base;
  auto number = [&](const char* key, double& slot) {
    if (auto v = in.get(key)) slot = parse_number(*v, key);
  };
  number("m0", c.m0);
  number("omega", c.omega);
  number("mu", c.mu);
  number("lambda1", c.lambda1);
  number("lambda2", c.lambda2);
  number("B", c.b_field);
  if (auto v = in.get("eta")) c.background = CosmicString{parse_number(*v, "eta")};
  if (auto v = in.get("phi-ac")) c.phi_ac_override = parse_number(*v, "phi_ac");

  if (auto v = in.get("s")) {
    if (*v == "both") {
      run.s_set = {-1, +1};
    } else {
      run.s_set = parse_int_set(*v, "s", 2, [](const std::string& t) { return parse_int(t, "s"); });
    }
  }
  if (auto v = in.get("n")) {
    run.n_set = parse_int_set(*v, "n", 1, [](const std::string& t) { return parse_int(t, "n"); });
  }
  const auto ml = in.get("ml");
  const auto two_ml = in.get("two-ml");
  if (ml && two_ml) throw Error(ErrorKind::DomainError, "ml", "give either --ml or --two-ml");
  if (ml) run.two_ml_set = parse_int_set(*ml, "ml", 2, parse_two_ml_from_ml);
  if (two_ml) {
    run.two_ml_set =
        parse_int_set(*two_ml, "two_ml", 2, [](const std::string& t) { return parse_int(t, "two_ml"); });
  }
  if (auto v = in.get("branch")) {
    if (*v == "particle") {
      run.branches = {Branch::Particle};
    } else if (*v == "antiparticle") {
      run.branches = {Branch::Antiparticle};
    } else if (*v == "both") {
      run.branches = {Branch::Particle, Branch::Antiparticle};
    } else {
      throw Error(ErrorKind::DomainError, "branch", "expected particle, antiparticle or both");
    }
  }
  if (auto v = in.get("nonrel")) run.nonrel = parse_bool(*v, "nonrel");

  for (int s : run.s_set) {
    c.s = s;
    validate(c);
  }
  c.s = run.s_set.front();
  // Quantum numbers are checked up front so a bad set fails before any output.
  for (int n : run.n_set) {
    for (int tm : run.two_ml_set) QuantumNumbers(n, tm);
  }
  return run;
}

std::vector<QuantumNumbers> qn_set(const RunConfig& run) {
  std::vector<QuantumNumbers> out;
  for (int n : run.n_set) {
    for (int tm : run.two_ml_set) {
      for (Branch b : run.branches) out.emplace_back(n, tm, b);
    }
  }
  return out;
}

std::string branch_name(Branch b) { return b == Branch::Particle ? "particle" : "antiparticle"; }

const std::vector<std::string> kSpectrumColumns = {"n",         "two_ml", "s",     "branch",  "eta",
                                                   "omega_bar", "phi_ac", "gamma", "bracket", "energy"};

std::vector<Cell> spectrum_cells(const QuantumNumbers& qn, int s, const SpectrumPoint& p) {
  return {std::int64_t{qn.n()}, std::int64_t{qn.two_ml()}, std::int64_t{s}, branch_name(qn.branch()),
          p.derived.eta,        p.derived.omega_bar,       p.derived.phi_ac, p.derived.gamma,
          p.bracket,            p.energy};
}

Table cmd_spectrum(const RunConfig& run) {
  Table table;
  table.columns = kSpectrumColumns;
  // Row order: n, then two_ml, then s, then branch.
  for (int n : run.n_set) {
    for (int tm : run.two_ml_set) {
      for (int s : run.s_set) {
        PhysicalConfig c = run.base;
        c.s = s;
        for (Branch b : run.branches) {
          const QuantumNumbers qn(n, tm, b);
          const SpectrumPoint p = run.nonrel ? energy_nonrel(c, qn) : energy(c, qn);
          table.rows.push_back(spectrum_cells(qn, s, p));
        }
      }
    }
  }
  return table;
}

Table cmd_sweep(const RunConfig& run, const Inputs& in) {
  const auto axis_text = in.get("axis");
  if (!axis_text) throw Error(ErrorKind::UnknownAxis, "axis", "--axis is required");
  const Axis axis = parse_axis(*axis_text);
  const auto range_text = in.get("range");
  if (!range_text) throw Error(ErrorKind::EmptyRange, "range", "--range is required");
  const AxisRange range = parse_range(*range_text, "range");
  const std::vector<QuantumNumbers> qns = qn_set(run);

  Table table;
  // Prefixed so an eta sweep does not collide with the eta column.
  table.columns.push_back("axis_" + axis_name(axis));
  table.columns.insert(table.columns.end(), kSpectrumColumns.begin(), kSpectrumColumns.end());
  table.columns.push_back("error");

  // Axis value outermost; s between two_ml and branch as in `spectrum`.
  std::map<int, std::vector<SweepRow>> by_s;
  for (int s : run.s_set) {
    PhysicalConfig c = run.base;
    c.s = s;
    by_s[s] = sweep(c, axis, range, qns, run.nonrel);
  }
  const std::size_t per_s = by_s.begin()->second.size();
  std::vector<std::pair<std::size_t, int>> order;  // (row index, s)
  for (std::size_t i = 0; i < per_s; ++i) {
    for (int s : run.s_set) order.emplace_back(i, s);
  }
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    const SweepRow& ra = by_s[a.second][a.first];
    const SweepRow& rb = by_s[b.second][b.first];
    if (ra.axis_value != rb.axis_value) return ra.axis_value < rb.axis_value;
    if (ra.qn.n() != rb.qn.n()) return ra.qn.n() < rb.qn.n();
    if (ra.qn.two_ml() != rb.qn.two_ml()) return ra.qn.two_ml() < rb.qn.two_ml();
    if (a.second != b.second) return a.second < b.second;
    return ra.qn.branch() < rb.qn.branch();
  });

  for (const auto& [i, s] : order) {
    const SweepRow& row = by_s[s][i];
    std::vector<Cell> cells{row.axis_value};
    if (row.ok) {
      const std::vector<Cell> rest = spectrum_cells(row.qn, s, row.point);
      cells.insert(cells.end(), rest.begin(), rest.end());
      cells.emplace_back(std::string{});
    } else {
      cells.insert(cells.end(), {std::int64_t{row.qn.n()}, std::int64_t{row.qn.two_ml()},
                                 std::int64_t{s}, branch_name(row.qn.branch()), kNaN, kNaN, kNaN,
                                 kNaN, kNaN, kNaN, row.error});
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

Table cmd_wavefunction(const RunConfig& run, const Inputs& in) {
  const std::vector<QuantumNumbers> qns = qn_set(run);
  if (qns.size() != 1 || run.s_set.size() != 1) {
    throw Error(ErrorKind::DomainError, "n", "wavefunction needs a single (n, m_l, s, branch)");
  }
  const auto rho_text = in.get("rho");
  if (!rho_text) throw Error(ErrorKind::EmptyRange, "rho", "--rho start:stop:step is required");
  const AxisRange range = parse_range(*rho_text, "rho");
  if (range.start < 0.0) throw Error(ErrorKind::DomainError, "rho", "must be >= 0");
  const std::vector<double> grid = range_values(range);

  const RadialSolution sol = build_solution(run.base, qns.front());
  Table table;
  table.columns = {"rho", "phi_plus", "phi_minus", "density"};
  table.comments.push_back("density = phi_plus^2 + phi_minus^2; normalized so that "
                           "integral 2 pi rho density drho = 1");
  table.comments.push_back("energy = " + format_double(sol.energy));
  for (double rho : grid) {
    const double up = component_value(sol.upper, sol.alpha, rho).value;
    const double lo = component_value(sol.lower, sol.alpha, rho).value;
    table.rows.push_back({rho, up, lo, up * up + lo * lo});
  }
  return table;
}

Table cmd_oracle(const RunConfig& run, const Inputs& in) {
  const int points = in.get("points") ? parse_int(*in.get("points"), "points") : 4000;
  const int count = in.get("count") ? parse_int(*in.get("count"), "count") : 3;
  std::optional<double> rho_max;
  if (auto v = in.get("rho-max")) rho_max = parse_number(*v, "rho_max");

  Table table;
  if (auto g = in.get("gamma-eff")) {
    const double gamma_eff = parse_number(*g, "gamma_eff");
    const double alpha = in.get("alpha") ? parse_number(*in.get("alpha"), "alpha") : 1.0;
    if (!(alpha > 0.0)) throw Error(ErrorKind::DomainError, "alpha", "must be > 0");
    FdProblem problem = FdProblem::with_default_domain(gamma_eff, alpha, std::max(count - 1, 0), points);
    if (rho_max) problem.rho_max = *rho_max;
    const std::vector<double> values = fd_eigenvalues(problem, count);
    const double order = convergence_order(problem);
    table.columns = {"k", "eigenvalue", "analytic", "deviation", "order"};
    table.comments.push_back("rho_max = " + format_double(problem.rho_max) +
                             ", points = " + std::to_string(problem.n_points));
    for (int k = 0; k < count; ++k) {
      const double exact = analytic_radial_eigenvalue(gamma_eff, alpha, k);
      table.rows.push_back({std::int64_t{k}, values[k], exact, std::abs(values[k] - exact) / exact, order});
    }
    return table;
  }

  // Physical-config form: oracle energy next to the closed form.
  table.columns = {"n", "two_ml", "s", "branch", "eta", "energy", "oracle_energy", "deviation"};
  const OracleGrid grid{points, rho_max};
  for (int n : run.n_set) {
    for (int tm : run.two_ml_set) {
      for (int s : run.s_set) {
        PhysicalConfig c = run.base;
        c.s = s;
        for (Branch b : run.branches) {
          const QuantumNumbers qn(n, tm, b);
          const SpectrumPoint p = energy(c, qn);
          const double numeric = oracle_energy(c, qn, grid);
          table.rows.push_back({std::int64_t{n}, std::int64_t{tm}, std::int64_t{s}, branch_name(b),
                                p.derived.eta, p.energy, numeric,
                                std::abs(numeric - p.energy) / std::abs(p.energy)});
        }
      }
    }
  }
  return table;
}

int cmd_verify(const Inputs& in, std::ostream& out) {
  verify::Options opts;
  opts.seed = in.seed;
  opts.perturb_bracket = in.inject_bracket_bug;
  const std::vector<verify::CheckResult> results = verify::run_all(opts);
  const bool all_pass =
      std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  if (in.format == "json") {
    Table table;
    table.columns = {"status", "name", "observed", "tolerance", "detail"};
    for (const auto& r : results) {
      table.rows.push_back({std::string(r.pass ? "PASS" : "FAIL"), r.name, r.observed, r.tolerance, r.detail});
    }
    write_json(table, out);
  } else {
    for (const auto& r : results) out << verify::format_check(r) << '\n';
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

void add_shared_flags(CLI::App* cmd, Inputs& in) {
  for (const std::string& key : kPhysicsKeys) {
    if (key == "nonrel") continue;
    cmd->add_option_function<std::string>(
        "--" + key, [&in, key](const std::string& v) { in.flags[key] = v; },
        key == "n" || key == "ml" || key == "two-ml" ? "value, list a,b or range a..b" : "");
  }
  cmd->add_flag_callback("--nonrel", [&in] { in.flags["nonrel"] = "true"; },
                         "Nonrelativistic levels (particle branch)");
}

void add_command_flag(CLI::App* cmd, Inputs& in, const std::string& key, const std::string& help) {
  cmd->add_option_function<std::string>(
      "--" + key, [&in, key](const std::string& v) { in.flags[key] = v; }, help);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Inputs in;
  CLI::App app{"Dirac oscillator with the Aharonov-Casher effect in flat and cosmic-string backgrounds",
               "diracac"};
  app.require_subcommand(1);
  app.add_option("--format", in.format, "Output encoding")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", in.output, "Output file (default standard output)");
  app.add_option("--config", in.config_path, "Flat JSON file of flag values; flags take precedence");
  app.add_option("--seed", in.seed, "Seed for randomized verification sets")->capture_default_str();
  app.set_help_all_flag("--help-all");

  CLI::App* spectrum = app.add_subcommand("spectrum", "Closed-form energy levels");
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Energy levels along one parameter axis");
  CLI::App* wave = app.add_subcommand("wavefunction", "Radial spinor components on a grid");
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the built-in consistency checks");
  CLI::App* oracle = app.add_subcommand("oracle", "Finite-difference eigenvalues");
  for (CLI::App* cmd : {spectrum, sweep_cmd, wave, verify_cmd, oracle}) {
    cmd->fallthrough();
    add_shared_flags(cmd, in);
  }
  add_command_flag(sweep_cmd, in, "axis", "B, omega, mu, lambda1, lambda2, eta or phi_ac_override");
  add_command_flag(sweep_cmd, in, "range", "start:stop:step");
  add_command_flag(wave, in, "rho", "start:stop:step");
  add_command_flag(oracle, in, "gamma-eff", "Effective centrifugal parameter");
  add_command_flag(oracle, in, "alpha", "Oscillator scale m0 omega_bar (default 1)");
  add_command_flag(oracle, in, "rho-max", "Outer wall (default from the tail bound)");
  add_command_flag(oracle, in, "points", "Grid points (default 4000)");
  add_command_flag(oracle, in, "count", "Number of eigenvalues (default 3)");
  verify_cmd->add_flag("--inject-bracket-bug", in.inject_bracket_bug)->group("");

  // CLI11 consumes the vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "UsageError " << e.get_name() << ": " << e.what() << '\n';
    return kExitInput;
  }

  try {
    load_config(in);
    std::ostringstream buffer;
    int code = kExitOk;
    if (verify_cmd->parsed()) {
      code = cmd_verify(in, buffer);
    } else {
      const RunConfig run = resolve(in);
      Table table;
      if (spectrum->parsed()) table = cmd_spectrum(run);
      if (sweep_cmd->parsed()) table = cmd_sweep(run, in);
      if (wave->parsed()) table = cmd_wavefunction(run, in);
      if (oracle->parsed()) table = cmd_oracle(run, in);
      if (in.format == "json") {
        write_json(table, buffer);
      } else {
        write_csv(table, buffer);
      }
    }
    if (in.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(in.output, std::ios::binary);
      if (!file) throw Error(ErrorKind::DomainError, "output", "cannot open '" + in.output + "'");
      file << buffer.str();
    }
    return code;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.kind() == ErrorKind::DegenerateOscillator ? kExitDegenerate : kExitInput;
  }
}

}  // namespace diracac::cli
