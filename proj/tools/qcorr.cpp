// Copyright 2026 The qcorr developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcorr/qcorr.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::runtime_error("cannot open output file: " + out_path);
  file << text;
}

std::string render(const std::vector<qcorr::RunReport>& reports,
                   const std::string& format, bool single) {
  std::ostringstream os;
  if (format == "json") {
    if (single) {
      os << qcorr::to_json(reports.front()).dump(2) << "\n";
    } else {
      qcorr::json arr = qcorr::json::array();
      for (const auto& r : reports) arr.push_back(qcorr::to_json(r));
      os << arr.dump(2) << "\n";
    }
  } else if (format == "csv") {
    for (const auto& r : reports) qcorr::render_report_csv(os, r);
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) os << "\n";
      qcorr::render_report(os, reports[i]);
    }
  }
  return os.str();
}

int cmd_list() {
  const auto scenarios = qcorr::builtin_scenarios();
  std::size_t width = 0;
  for (const auto& s : scenarios) width = std::max(width, s.name.size());
  for (const auto& s : scenarios)
    std::printf("%-*s  %s\n", static_cast<int>(width), s.name.c_str(),
                s.description.c_str());
  return 0;
}

int cmd_run(const std::string& target, const std::string& format,
            const std::string& out_path) {
  std::vector<qcorr::RunReport> reports;
  if (target == "all") {
    for (const auto& s : qcorr::builtin_scenarios())
      reports.push_back(qcorr::run(s));
  } else {
    const auto scenario = qcorr::find_scenario(target);
    if (!scenario) {
      std::cerr << "error: unknown scenario '" << target << "'; run 'qcorr list'\n";
      return 2;
    }
    reports.push_back(qcorr::run(*scenario));
  }
  emit(render(reports, format, target != "all"), out_path);
  return 0;
}

int cmd_compute(const std::string& config_path, const std::string& format,
                const std::string& out_path) {
  std::ifstream file(config_path);
  if (!file) throw std::runtime_error("cannot open config file: " + config_path);
  qcorr::json doc = qcorr::json::parse(file);
  const qcorr::RunReport report = qcorr::run(qcorr::parse_scenario(doc));
  emit(render({report}, format, true), out_path);
  // A config with an "expected" block acts as a one-off regression check.
  return report.deviations.empty() || report.passed ? 0 : 1;
}

int cmd_verify() {
  bool all_passed = true;
  std::size_t passed = 0;
  const auto scenarios = qcorr::builtin_scenarios();
  for (const auto& s : scenarios) {
    const qcorr::RunReport report = qcorr::run(s);
    all_passed &= report.passed;
    passed += report.passed ? 1 : 0;
    std::printf("%-6s %-22s max dev %.2e\n", report.passed ? "ok" : "FAIL",
                report.name.c_str(), report.max_deviation());
  }
  std::printf("%zu/%zu scenarios passed\n", passed, scenarios.size());
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qcorr: probability tables of discrete quantum joint observables and "
      "their classical/quantum correlation split"};
  app.require_subcommand(1);

  app.add_subcommand("list", "List builtin scenarios");

  auto* run_cmd = app.add_subcommand("run", "Run a builtin scenario (or 'all')");
  std::string run_target;
  std::string run_format = "table";
  std::string run_out;
  run_cmd->add_option("name", run_target, "Scenario name or 'all'")->required();
  run_cmd->add_option("--format", run_format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  run_cmd->add_option("--out", run_out, "Write output to a file");

  auto* compute_cmd =
      app.add_subcommand("compute", "Run an ad-hoc scenario from a JSON config");
  std::string config_path;
  std::string compute_format = "table";
  std::string compute_out;
  compute_cmd->add_option("--config", config_path, "Config JSON file")
      ->required();
  compute_cmd->add_option("--format", compute_format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  compute_cmd->add_option("--out", compute_out, "Write output to a file");

  app.add_subcommand("verify",
                     "Check all builtin scenarios against their golden tables");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list")) return cmd_list();
    if (app.got_subcommand("run")) return cmd_run(run_target, run_format, run_out);
    if (app.got_subcommand("compute"))
      return cmd_compute(config_path, compute_format, compute_out);
    return cmd_verify();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
