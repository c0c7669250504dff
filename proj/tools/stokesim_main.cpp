// Copyright 2026 The stokesim Authors
//
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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stokesim/errors.hpp"
#include "stokesim/profile.hpp"
#include "stokesim/scenario.hpp"

namespace {

// Exit codes: 0 success, 2 parse/usage error, 3 degenerate or asymmetric
// criterion normalization, 4 conformance failure, 5 truncation error.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNormalization = 3;
constexpr int kExitConformance = 4;
constexpr int kExitTruncation = 5;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw stokesim::ParseError("cannot open output file: " + out_path);
  }
  out << text;
}

struct GlobalOptions {
  std::string out_path;
  std::string format = "csv";
  double tolerance = stokesim::tol::kOracleDefault;
};

int run_criterion(const std::string& scenario_path, const GlobalOptions& opt) {
  const stokesim::Scenario sc = stokesim::load_scenario(scenario_path);
  const auto rows = stokesim::scenario_scan(sc);
  std::optional<stokesim::PipelineReport> pipeline;
  if (sc.pipeline.has_value()) {
    pipeline = stokesim::make_pipeline_report(sc.pipeline->config,
                                              sc.pipeline->measured_db);
  }
  emit(opt.format == "json" ? stokesim::criterion_table_json(rows, pipeline)
                            : stokesim::criterion_table_csv(rows, pipeline),
       opt.out_path);
  return kExitOk;
}

int run_sweep(const std::string& scenario_path, stokesim::SweepSpec cli_sweep,
              bool cli_sweep_given, const GlobalOptions& opt) {
  const stokesim::Scenario sc = stokesim::load_scenario(scenario_path);
  stokesim::SweepSpec sweep;
  if (cli_sweep_given) {
    sweep = cli_sweep;
  } else if (sc.sweep.has_value()) {
    sweep = *sc.sweep;
  } else {
    throw stokesim::ParseError(
        "no sweep specified (use --param/--from/--to/--steps or a scenario "
        "\"sweep\" block)");
  }
  const auto rows = stokesim::run_sweep(sc, sweep);
  emit(opt.format == "json" ? stokesim::sweep_table_json(sweep.param, rows)
                            : stokesim::sweep_table_csv(sweep.param, rows),
       opt.out_path);
  return kExitOk;
}

int run_oracle_check(const std::string& scenario_path, int dim,
                     const GlobalOptions& opt) {
  stokesim::ConformanceReport report;
  if (scenario_path.empty()) {
    report = stokesim::default_conformance_suite(stokesim::Topology::PolPol, dim,
                                                 opt.tolerance);
  } else {
    const stokesim::Scenario sc = stokesim::load_scenario(scenario_path);
    report = stokesim::conformance_run(sc, dim, opt.tolerance);
  }
  emit(opt.format == "json" ? stokesim::conformance_json(report)
                            : stokesim::conformance_table_text(report),
       opt.out_path);
  return report.passed() ? kExitOk : kExitConformance;
}

int run_pipeline(const std::string& scenario_path, const GlobalOptions& opt) {
  const stokesim::Scenario sc = stokesim::load_scenario(scenario_path);
  if (!sc.pipeline.has_value()) {
    throw stokesim::ParseError("scenario has no \"pipeline\" block");
  }
  const stokesim::PipelineReport report =
      stokesim::make_pipeline_report(sc.pipeline->config, sc.pipeline->measured_db);
  std::string text;
  if (opt.format == "json") {
    text = stokesim::pipeline_report_json(report);
  } else if (opt.format == "text") {
    text = stokesim::pipeline_report_text(report);
  } else {
    text = stokesim::pipeline_report_csv(report);
  }
  emit(text, opt.out_path);
  // The human-readable gap statement always goes to stderr.
  std::cerr << stokesim::pipeline_report_text(report);
  return kExitOk;
}

int run_render(const std::string& family_text, int samples, double half_width,
               double waist, const std::string& out_pgm,
               const std::string& intensity_csv, const std::string& arrows_csv) {
  const stokesim::CylFamily family =
      stokesim::family_from_kind(stokesim::parse_cyl_kind(family_text));
  stokesim::GridSpec grid;
  grid.samples = samples;
  grid.half_width = half_width;
  const stokesim::ProfileImage image = stokesim::render(family, grid, waist);

  {
    std::ofstream out(out_pgm, std::ios::binary);
    if (!out) throw stokesim::ParseError("cannot open output file: " + out_pgm);
    stokesim::write_pgm(image, out);
  }
  if (!intensity_csv.empty()) {
    std::ofstream out(intensity_csv, std::ios::binary);
    if (!out) throw stokesim::ParseError("cannot open output file: " + intensity_csv);
    stokesim::write_intensity_csv(image, out);
  }
  if (!arrows_csv.empty()) {
    std::ofstream out(arrows_csv, std::ios::binary);
    if (!out) throw stokesim::ParseError("cannot open output file: " + arrows_csv);
    stokesim::write_arrows_csv(image, out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "stokesim - Gaussian-state simulator for quadrature squeezed "
      "cylindrically polarized light: Stokes-operator statistics, "
      "inseparability criteria, loss-chain predictions and mode profiles."};
  app.footer(
      "Exit codes:\n"
      "  0  success\n"
      "  2  scenario/parse error (missing file, bad JSON, unknown parameter)\n"
      "  3  degenerate or asymmetric criterion normalization\n"
      "  4  oracle conformance failure\n"
      "  5  Fock truncation leakage above the accepted bound");
  app.require_subcommand(1);

  GlobalOptions opt;
  app.add_option("--out", opt.out_path, "Output file (default: stdout)");
  app.add_option("--format", opt.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--tolerance", opt.tolerance,
                 "Comparison tolerance for oracle-check (default 1e-3)");

  std::string scenario_path;
  auto* criterion =
      app.add_subcommand("criterion", "Evaluate the 12-row combination table");
  criterion->fallthrough();
  criterion->add_option("scenario", scenario_path, "Scenario JSON file")
      ->required();

  stokesim::SweepSpec cli_sweep;
  auto* sweep = app.add_subcommand("sweep", "Sweep a parameter and re-evaluate");
  sweep->fallthrough();
  sweep->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  auto* sweep_param = sweep->add_option("--param", cli_sweep.param,
                                        "Parameter: r, theta, v0, m or arg_w");
  sweep->add_option("--from", cli_sweep.from, "Sweep start");
  sweep->add_option("--to", cli_sweep.to, "Sweep end");
  sweep->add_option("--steps", cli_sweep.steps, "Number of sweep points");

  int oracle_dim = stokesim::kOracleDefaultDim;
  auto* oracle = app.add_subcommand(
      "oracle-check",
      "Compare the Gaussian engine against the truncated Fock oracle");
  oracle->fallthrough();
  oracle->add_option("scenario", scenario_path,
                     "Scenario JSON file (default: built-in small-parameter grid)");
  oracle->add_option("--dim", oracle_dim, "Per-mode Fock truncation");

  auto* pipeline =
      app.add_subcommand("pipeline", "Loss-chain prediction for a scenario");
  pipeline->fallthrough();
  pipeline->add_option("scenario", scenario_path, "Scenario JSON file")
      ->required();

  std::string family_text = "azimuthal";
  int samples = 256;
  double half_width = 4.0;
  double waist = 1.0;
  std::string out_pgm = "profile.pgm";
  std::string intensity_csv, arrows_csv;
  auto* render = app.add_subcommand(
      "render", "Render intensity and polarization maps of a cylindrical mode");
  render->fallthrough();
  render->add_option("family", family_text, "azimuthal or radial")->required();
  render->add_option("--samples", samples, "Samples per axis (default 256)");
  render->add_option("--half-width", half_width,
                     "Half width of the grid in waist units (default 4)");
  render->add_option("--waist", waist, "Beam waist (default 1)");
  render->add_option("--pgm", out_pgm, "PGM output path (default profile.pgm)");
  render->add_option("--intensity-csv", intensity_csv, "Optional CSV of the map");
  render->add_option("--arrows-csv", arrows_csv, "Optional CSV of the arrows");

  CLI11_PARSE(app, argc, argv);

  try {
    if (criterion->parsed()) return run_criterion(scenario_path, opt);
    if (sweep->parsed()) {
      return run_sweep(scenario_path, cli_sweep, sweep_param->count() > 0, opt);
    }
    if (oracle->parsed()) {
      return run_oracle_check(oracle->count("scenario") ? scenario_path : "",
                              oracle_dim, opt);
    }
    if (pipeline->parsed()) return run_pipeline(scenario_path, opt);
    if (render->parsed()) {
      return run_render(family_text, samples, half_width, waist, out_pgm,
                        intensity_csv, arrows_csv);
    }
  } catch (const stokesim::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const stokesim::DegenerateNormalization& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNormalization;
  } catch (const stokesim::AsymmetricNormalization& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNormalization;
  } catch (const stokesim::TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTruncation;
  } catch (const stokesim::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
