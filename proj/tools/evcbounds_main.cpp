// Copyright 2026 The evcbounds Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "evc/envelopes.hpp"
#include "evc/json_io.hpp"
#include "evc/measures.hpp"
#include "evc/pickands.hpp"
#include "evc/verify.hpp"

namespace {

// Exit codes: 0 ok, 2 invalid input, 3 outside region, 4 witness failure,
// 5 property failure.
constexpr int kExitInvalidInput = 2;
constexpr int kExitOutsideRegion = 3;
constexpr int kExitWitnessFailure = 4;
constexpr int kExitPropertyFailure = 5;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

evc::ParsedPickands parse_input_or_exit(const std::string& path) {
  std::string text = read_input(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid JSON: " << e.what() << "\n";
    std::exit(kExitInvalidInput);
  }
  try {
    return evc::parse_pickands_json(j);
  } catch (const std::exception& e) {
    std::cerr << "invalid Pickands input: " << e.what() << "\n";
    std::exit(kExitInvalidInput);
  }
}

evc::MeasureKind measure_from_string(const std::string& s) {
  if (s == "rho") return evc::MeasureKind::SpearmanRho;
  if (s == "tau") return evc::MeasureKind::KendallTau;
  throw CLI::ValidationError("--measure must be rho or tau");
}

int cmd_measure(const std::string& in_path) {
  evc::ParsedPickands parsed = parse_input_or_exit(in_path);
  const evc::PickandsFunction& fn = parsed.function;

  bool closed = false;
  if (parsed.family) {
    auto tag = parsed.family->tag;
    closed = tag == evc::FamilyTag::T || tag == evc::FamilyTag::L ||
             tag == evc::FamilyTag::P;
  }
  double r = closed ? evc::rho_family_closed(*parsed.family) : evc::rho(fn);
  double t = closed ? evc::tau_family_closed(*parsed.family) : evc::tau(fn);

  // Cross-check the Stieltjes tau against the quadrature form; a
  // disagreement means a consistency bug, not a user error.
  double t_quad = evc::tau_quadrature_oracle(fn);
  if (std::fabs(t - t_quad) > 1e-8) {
    std::cerr << "tau consistency failure: stieltjes=" << t
              << " quadrature=" << t_quad << "\n";
    return kExitPropertyFailure;
  }

  nlohmann::json out = {
      {"rho", r},
      {"tau", t},
      {"method", closed ? "closed-form"
                        : nlohmann::json({{"rho", "closed-form"},
                                          {"tau", "stieltjes"}})},
      {"tolerance", 1e-12},
  };
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_bounds(const std::string& measure_name, double v, int n,
               const std::string& out_path) {
  evc::MeasureKind kind = measure_from_string(measure_name);
  std::vector<evc::BoundaryRow> rows;
  try {
    rows = evc::boundary_curves(kind, v, n);
  } catch (const evc::DomainError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidInput;
  }
  std::ostringstream csv;
  csv << "t,lower,upper\n";
  char line[128];
  for (const evc::BoundaryRow& row : rows) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", row.t, row.lower,
                  row.upper);
    csv << line;
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output file: " << out_path << "\n";
      return kExitInvalidInput;
    }
    out << csv.str();
  }
  return 0;
}

int cmd_witness(const std::string& measure_name, double v, double t,
                double y) {
  evc::MeasureKind kind = measure_from_string(measure_name);
  try {
    evc::Witness w = evc::witness(kind, v, t, y);
    nlohmann::json out = {
        {"knots", evc::knots_to_json(w.function)},
        {"achieved_value", w.achieved_value},
        {"achieved_height", w.achieved_height},
    };
    std::cout << out.dump() << "\n";
    return 0;
  } catch (const evc::PointOutsideRegion& e) {
    std::cerr << e.what() << "\n";
    return kExitOutsideRegion;
  } catch (const evc::WitnessNotFound& e) {
    std::cerr << e.what() << "\n";
    return kExitWitnessFailure;
  } catch (const evc::DomainError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidInput;
  }
}

int cmd_verify(const std::string& measure_name, double v,
               std::uint64_t seed) {
  evc::MeasureKind kind = measure_from_string(measure_name);
  evc::VerifyReport report;
  try {
    report = evc::run_verify(kind, v, seed);
  } catch (const evc::DomainError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidInput;
  }
  nlohmann::json props = nlohmann::json::array();
  for (const evc::PropertyResult& p : report.properties) {
    props.push_back({{"name", p.name},
                     {"pass", p.pass},
                     {"worst_residual", p.worst_residual},
                     {"threshold", p.threshold},
                     {"detail", p.detail}});
  }
  nlohmann::json out = {
      {"measure", measure_name},
      {"v", v},
      {"seed", seed},
      {"pass", report.pass},
      {"properties", props},
  };
  std::cout << out.dump(2) << "\n";
  return report.pass ? 0 : kExitPropertyFailure;
}

int cmd_validate(const std::string& in_path) {
  std::string text = read_input(in_path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid JSON: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  try {
    evc::ParsedPickands parsed = evc::parse_pickands_json(j);
    nlohmann::json out = {{"knots", evc::knots_to_json(parsed.function)}};
    std::cout << out.dump() << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "invalid Pickands input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Dependence measures of extreme-value copulas and sharp bounds on "
      "Pickands dependence functions"};
  app.require_subcommand(1);

  std::string in_path = "-";
  std::string out_path;
  std::string measure_name = "rho";
  double v = 0.5, t = 0.5, y = 0.75;
  int n = 201;
  std::uint64_t seed = 1;

  CLI::App* measure = app.add_subcommand(
      "measure", "Spearman rho and Kendall tau of a Pickands function");
  measure->add_option("--in", in_path, "input JSON file or - for stdin");

  CLI::App* bounds = app.add_subcommand(
      "bounds", "CSV band t,lower,upper for a target dependence value");
  bounds->add_option("--measure", measure_name, "rho or tau")->required();
  bounds->add_option("--v", v, "target value in [0,1]")->required();
  bounds->add_option("--n", n, "grid size (>= 2)")->required();
  bounds->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* wit = app.add_subcommand(
      "witness", "Pickands function attaining the target value through a point");
  wit->add_option("--measure", measure_name, "rho or tau")->required();
  wit->add_option("--v", v, "target value in [0,1]")->required();
  wit->add_option("--t", t, "abscissa in [0,1]")->required();
  wit->add_option("--y", y, "requested height")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "run the measure/envelope property suites at a target value");
  verify->add_option("--measure", measure_name, "rho or tau")->required();
  verify->add_option("--v", v, "target value in [0,1]")->required();
  verify->add_option("--seed", seed, "RNG seed");

  CLI::App* validate = app.add_subcommand(
      "validate", "validate and canonicalize a Pickands function");
  validate->add_option("--in", in_path, "input JSON file or - for stdin");

  CLI11_PARSE(app, argc, argv);

  if (measure->parsed()) return cmd_measure(in_path);
  if (bounds->parsed()) return cmd_bounds(measure_name, v, n, out_path);
  if (wit->parsed()) return cmd_witness(measure_name, v, t, y);
  if (verify->parsed()) return cmd_verify(measure_name, v, seed);
  if (validate->parsed()) return cmd_validate(in_path);
  return 1;
}
