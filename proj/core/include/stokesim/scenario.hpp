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

#ifndef STOKESIM_SCENARIO_HPP
#define STOKESIM_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "stokesim/criteria.hpp"
#include "stokesim/fock.hpp"
#include "stokesim/pipeline.hpp"
#include "stokesim/stokes.hpp"
#include "stokesim/tolerances.hpp"

namespace stokesim {

/// Sweep directive: `steps` evenly spaced values of `param` from `from` to
/// `to` inclusive.
struct SweepSpec {
  std::string param;
  double from = 0.0;
  double to = 0.0;
  int steps = 1;
};

struct NetworkScenario {
  Topology topology = Topology::PolPol;
  double m = 0.0;      // total coherent brightness, w1 = w2 = sqrt(m/2)
  double arg_w = 0.0;  // common phase of the coherent amplitudes
};

struct PipelineScenario {
  PipelineConfig config;
  std::optional<double> measured_db;
};

/// Parsed scenario file.
struct Scenario {
  CylKind family = CylKind::Azimuthal;
  double r = 0.0;
  double theta = 0.0;
  double v0 = 0.0;  // brightness amplitude of the superposition mode, sqrt(n)
  NetworkScenario network;
  std::optional<PipelineScenario> pipeline;
  std::optional<SweepSpec> sweep;
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

/// Source state of the scenario (before any measurement network).
GaussianState scenario_source_state(const Scenario& sc);
/// The scenario's coherent amplitude w = sqrt(m/2) e^{i arg_w}.
Complex scenario_w(const Scenario& sc);
/// All four topology networks for the scenario's parameters.
std::array<MeasuredState, 4> scenario_networks(const Scenario& sc);
/// The 12-row combination scan.
std::vector<CriterionResult> scenario_scan(const Scenario& sc);
/// Operation sequence of the scenario's own topology (for the oracle).
OpSequence scenario_sequence(const Scenario& sc);

/// Fixed-format float with 9 significant digits (CSV contract).
std::string format_number(double v);

std::string criterion_table_csv(const std::vector<CriterionResult>& rows,
                                const std::optional<PipelineReport>& pipeline);
std::string criterion_table_json(const std::vector<CriterionResult>& rows,
                                 const std::optional<PipelineReport>& pipeline);

/// One sweep-point evaluation.  Combinations whose normalization is
/// degenerate at a boundary point (|alpha| = 0, e.g. (2,3) at r = 0 with
/// equal intensities) are recorded with `degenerate` set and an empty value
/// instead of aborting the sweep.
struct SweepRow {
  double value;  // the swept parameter's value
  CriterionResult result;
  bool degenerate = false;
};

std::vector<SweepRow> run_sweep(const Scenario& sc, const SweepSpec& sweep);
std::string sweep_table_csv(const std::string& param,
                            const std::vector<SweepRow>& rows);
std::string sweep_table_json(const std::string& param,
                             const std::vector<SweepRow>& rows);

std::string pipeline_report_text(const PipelineReport& report);
std::string pipeline_report_json(const PipelineReport& report);
std::string pipeline_report_csv(const PipelineReport& report);

/// Conformance run for one scenario: every Stokes moment compared between
/// the Gaussian engine and the Fock oracle, plus informational rows holding
/// the printed closed-form means against both engines.
ConformanceReport conformance_run(const Scenario& sc, int dim = kOracleDefaultDim,
                                  double tolerance = tol::kOracleDefault);

/// Default small-parameter suite: the grid r in {0, 0.2, 0.4} x
/// v0 in {0, 0.5, 1} x w in {0, 0.5, 1} on the scenario's topology.
ConformanceReport default_conformance_suite(Topology topology,
                                            int dim = kOracleDefaultDim,
                                            double tolerance = tol::kOracleDefault);

std::string conformance_table_text(const ConformanceReport& report);
std::string conformance_json(const ConformanceReport& report);

// JSON forms of the core value types (External Interfaces).
std::string gaussian_state_json(const GaussianState& state);
GaussianState gaussian_state_from_json(const std::string& json_text);
std::string observable_json(const QuadraticObservable& obs);
QuadraticObservable observable_from_json(const std::string& json_text);

}  // namespace stokesim

#endif  // STOKESIM_SCENARIO_HPP
