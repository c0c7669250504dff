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

#include "stokesim/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "stokesim/errors.hpp"

namespace stokesim {

using nlohmann::json;

namespace {

double get_number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) {
    throw ParseError(std::string("field \"") + key + "\" must be a number");
  }
  return j.at(key).get<double>();
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("scenario must be a JSON object");

  Scenario sc;
  try {
    if (j.contains("family")) {
      sc.family = parse_cyl_kind(j.at("family").get<std::string>());
    }
    sc.r = get_number(j, "r", 0.0);
    sc.theta = get_number(j, "theta", 0.0);
    sc.v0 = get_number(j, "v0", 0.0);
    if (sc.r < 0.0) throw ParseError("r must be >= 0");
    if (sc.v0 < 0.0) throw ParseError("v0 must be >= 0");

    if (j.contains("network")) {
      const json& n = j.at("network");
      if (n.contains("topology")) {
        sc.network.topology = parse_topology(n.at("topology").get<std::string>());
      }
      sc.network.m = get_number(n, "m", 0.0);
      sc.network.arg_w = get_number(n, "arg_w", 0.0);
      if (sc.network.m < 0.0) throw ParseError("network.m must be >= 0");
    }

    if (j.contains("pipeline")) {
      const json& p = j.at("pipeline");
      PipelineScenario ps;
      ps.config.input_squeezing_db = get_number(p, "input_db", 0.0);
      ps.config.eta_conversion = get_number(p, "eta_conversion", 1.0);
      ps.config.eta_reflection = get_number(p, "eta_reflection", 1.0);
      ps.config.extra_eta = get_number(p, "extra_eta", 1.0);
      if (p.contains("measured_db")) {
        ps.measured_db = get_number(p, "measured_db", 0.0);
      }
      sc.pipeline = ps;
    }

    if (j.contains("sweep")) {
      const json& s = j.at("sweep");
      SweepSpec sweep;
      sweep.param = s.at("param").get<std::string>();
      sweep.from = get_number(s, "from", 0.0);
      sweep.to = get_number(s, "to", 0.0);
      sweep.steps = static_cast<int>(get_number(s, "steps", 1.0));
      if (sweep.steps < 1) throw ParseError("sweep.steps must be >= 1");
      sc.sweep = sweep;
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed scenario: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("malformed scenario: ") + e.what());
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open scenario file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

GaussianState scenario_source_state(const Scenario& sc) {
  const Complex zeta0 = sc.r * std::polar(1.0, sc.theta);
  return prepare_bright_squeezed_cyl(family_from_kind(sc.family), sc.v0, zeta0);
}

Complex scenario_w(const Scenario& sc) {
  return std::sqrt(sc.network.m / 2.0) * std::polar(1.0, sc.network.arg_w);
}

std::array<MeasuredState, 4> scenario_networks(const Scenario& sc) {
  return build_all_topologies(scenario_source_state(sc),
                              family_from_kind(sc.family), scenario_w(sc));
}

std::vector<CriterionResult> scenario_scan(const Scenario& sc) {
  return scan_combinations(scenario_networks(sc));
}

OpSequence scenario_sequence(const Scenario& sc) {
  const Complex zeta0 = sc.r * std::polar(1.0, sc.theta);
  const Complex w = scenario_w(sc);
  return network_sequence(family_from_kind(sc.family), sc.v0, zeta0,
                          MeasurementNetwork::for_topology(sc.network.topology, w, w));
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

namespace {

void append_criterion_row_csv(std::string& out, const CriterionResult& row,
                              const std::optional<PipelineReport>& pipeline) {
  out += std::to_string(row.spec.sigma);
  out += ',';
  out += std::to_string(row.spec.rho);
  out += ',';
  out += to_string(row.spec.arm_a.dof);
  out += ',';
  out += to_string(row.spec.arm_b.dof);
  out += ',';
  out += format_number(row.value);
  out += ',';
  out += format_number(row.alpha);
  out += ',';
  out += row.violated ? "true" : "false";
  if (pipeline.has_value()) {
    out += ',';
    out += format_number(pipeline->predicted_db);
    out += ',';
    out += pipeline->implied_eta.has_value() ? format_number(*pipeline->implied_eta)
                                             : std::string("");
  }
  out += '\n';
}

json criterion_row_json(const CriterionResult& row) {
  return json{{"sigma", row.spec.sigma},
              {"rho", row.spec.rho},
              {"dof_a", to_string(row.spec.arm_a.dof)},
              {"dof_b", to_string(row.spec.arm_b.dof)},
              {"value", row.value},
              {"alpha", row.alpha},
              {"violated", row.violated},
              {"var_sum_sigma", row.var_sum_sigma},
              {"var_diff_rho", row.var_diff_rho}};
}

json pipeline_json_object(const PipelineReport& report) {
  json p{{"input_db", report.input_db},
         {"eta_total", report.eta_total},
         {"predicted_db", report.predicted_db}};
  if (report.measured_db) p["measured_db"] = *report.measured_db;
  if (report.implied_eta) p["implied_eta"] = *report.implied_eta;
  if (report.gap_db) p["gap_db"] = *report.gap_db;
  return p;
}

}  // namespace

std::string criterion_table_csv(const std::vector<CriterionResult>& rows,
                                const std::optional<PipelineReport>& pipeline) {
  std::string out = "sigma,rho,dof_a,dof_b,value,alpha,violated";
  if (pipeline.has_value()) out += ",predicted_db,implied_eta";
  out += '\n';
  for (const CriterionResult& row : rows) {
    append_criterion_row_csv(out, row, pipeline);
  }
  return out;
}

std::string criterion_table_json(const std::vector<CriterionResult>& rows,
                                 const std::optional<PipelineReport>& pipeline) {
  json root;
  root["rows"] = json::array();
  for (const CriterionResult& row : rows) {
    root["rows"].push_back(criterion_row_json(row));
  }
  if (pipeline.has_value()) root["pipeline"] = pipeline_json_object(*pipeline);
  return root.dump(2) + "\n";
}

namespace {

Scenario with_param(const Scenario& sc, const std::string& param, double value) {
  Scenario out = sc;
  if (param == "r") {
    out.r = value;
  } else if (param == "theta") {
    out.theta = value;
  } else if (param == "v0") {
    out.v0 = value;
  } else if (param == "m") {
    out.network.m = value;
  } else if (param == "arg_w") {
    out.network.arg_w = value;
  } else {
    throw InvalidArgument("unknown sweep parameter: \"" + param + "\"");
  }
  return out;
}

}  // namespace

std::vector<SweepRow> run_sweep(const Scenario& sc, const SweepSpec& sweep) {
  if (sweep.steps < 1) {
    throw InvalidArgument("sweep must have at least one step");
  }
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(sweep.steps) * 12);
  for (int i = 0; i < sweep.steps; ++i) {
    const double value =
        sweep.steps == 1
            ? sweep.from
            : sweep.from + (sweep.to - sweep.from) * i / (sweep.steps - 1);
    const Scenario point = with_param(sc, sweep.param, value);
    const auto networks = scenario_networks(point);
    for (const auto& [sigma, rho] : kSigmaRhoPairs) {
      for (const MeasuredState& net : networks) {
        const CriterionSpec spec{sigma, rho, net.arm_a, net.arm_b};
        SweepRow row;
        row.value = value;
        try {
          row.result = duan_simon(net.state, spec);
        } catch (const DegenerateNormalization&) {
          row.result = CriterionResult{};
          row.result.spec = spec;
          row.result.value = std::numeric_limits<double>::quiet_NaN();
          row.degenerate = true;
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string sweep_table_csv(const std::string& param,
                            const std::vector<SweepRow>& rows) {
  std::string out = param + ",sigma,rho,dof_a,dof_b,value,alpha,violated\n";
  for (const SweepRow& row : rows) {
    out += format_number(row.value);
    out += ',';
    if (row.degenerate) {
      out += std::to_string(row.result.spec.sigma);
      out += ',';
      out += std::to_string(row.result.spec.rho);
      out += ',';
      out += to_string(row.result.spec.arm_a.dof);
      out += ',';
      out += to_string(row.result.spec.arm_b.dof);
      out += ",,,false\n";
    } else {
      append_criterion_row_csv(out, row.result, std::nullopt);
    }
  }
  return out;
}

std::string sweep_table_json(const std::string& param,
                             const std::vector<SweepRow>& rows) {
  json root;
  root["param"] = param;
  root["rows"] = json::array();
  for (const SweepRow& row : rows) {
    json r;
    if (row.degenerate) {
      r = json{{"sigma", row.result.spec.sigma},
               {"rho", row.result.spec.rho},
               {"dof_a", to_string(row.result.spec.arm_a.dof)},
               {"dof_b", to_string(row.result.spec.arm_b.dof)},
               {"value", nullptr},
               {"alpha", nullptr},
               {"violated", false},
               {"degenerate", true}};
    } else {
      r = criterion_row_json(row.result);
    }
    r[param] = row.value;
    root["rows"].push_back(r);
  }
  return root.dump(2) + "\n";
}

std::string pipeline_report_text(const PipelineReport& report) {
  std::ostringstream out;
  out << "input squeezing:   " << format_number(report.input_db) << " dB\n";
  out << "total efficiency:  " << format_number(report.eta_total) << "\n";
  out << "predicted output:  " << format_number(report.predicted_db) << " dB\n";
  if (report.measured_db) {
    out << "measured output:   " << format_number(*report.measured_db) << " dB\n";
    out << "implied_eta:       " << format_number(*report.implied_eta) << "\n";
    out << "gap (predicted - measured): " << format_number(*report.gap_db)
        << " dB; the loss figures are approximate, so the forward prediction "
           "and the measured level are reported side by side rather than "
           "forced to agree.\n";
  }
  return out.str();
}

std::string pipeline_report_json(const PipelineReport& report) {
  return pipeline_json_object(report).dump(2) + "\n";
}

std::string pipeline_report_csv(const PipelineReport& report) {
  std::string out = "input_db,eta_total,predicted_db,measured_db,implied_eta,gap_db\n";
  out += format_number(report.input_db);
  out += ',';
  out += format_number(report.eta_total);
  out += ',';
  out += format_number(report.predicted_db);
  out += ',';
  out += report.measured_db ? format_number(*report.measured_db) : std::string();
  out += ',';
  out += report.implied_eta ? format_number(*report.implied_eta) : std::string();
  out += ',';
  out += report.gap_db ? format_number(*report.gap_db) : std::string();
  out += '\n';
  return out;
}

ConformanceReport conformance_run(const Scenario& sc, int dim, double tolerance) {
  const OpSequence seq = scenario_sequence(sc);
  const auto arms = topology_arm_specs(sc.network.topology);
  ConformanceReport report = oracle_compare(seq, arms, dim, tolerance);

  // Closed-form cross-checks.  The "printed" mean column keeps the 2*mu*nu
  // photon-number term of the standard closed forms; its comparison against
  // the moment machinery is recorded, not gated.
  const GaussianState gauss = apply_sequence(vacuum(kNumModes), seq);
  const BrightnessParams p{sc.v0 * sc.v0, sc.network.m};
  const SqueezeParams sq{sc.r, sc.theta};
  const ClosedFormMeans means =
      closed_form_means(Arm::A, p, sq, sc.network.arg_w, 0.0);
  for (int k = 0; k < 4; ++k) {
    const double machine = expectation(stokes(arms.first, k), gauss);
    ConformanceRow row;
    row.name = "closed_form.mean.S" + std::to_string(k) + ".printed";
    row.gaussian = machine;
    row.fock = means.printed[static_cast<std::size_t>(k)];
    row.diff = std::abs(row.gaussian - row.fock);
    row.tolerance = tolerance;
    row.pass = row.diff <= tolerance;
    row.informational = true;
    report.rows.push_back(row);

    ConformanceRow row2 = row;
    row2.name = "closed_form.mean.S" + std::to_string(k) + ".moment_consistent";
    row2.fock = means.moment_consistent[static_cast<std::size_t>(k)];
    row2.diff = std::abs(row2.gaussian - row2.fock);
    row2.pass = row2.diff <= tolerance;
    row2.informational = false;
    report.rows.push_back(row2);
  }

  // The closed-form variances hold for squeezing angle zero and real
  // coherent amplitudes.
  if (sc.theta == 0.0 && sc.network.arg_w == 0.0) {
    const StokesVariances v = closed_form_variances(p, sc.r);
    const double closed[4] = {v.v01, v.v01, v.v2, v.v3};
    for (int k = 0; k < 4; ++k) {
      ConformanceRow row;
      row.name = "closed_form.var.S" + std::to_string(k);
      row.gaussian = variance(stokes(arms.first, k), gauss);
      row.fock = closed[k];
      row.diff = std::abs(row.gaussian - row.fock);
      row.tolerance = 1e-9;
      row.pass = row.diff <= row.tolerance;
      row.informational = false;
      report.rows.push_back(row);
    }
  }
  return report;
}

ConformanceReport default_conformance_suite(Topology topology, int dim,
                                            double tolerance) {
  const double r_grid[] = {0.0, 0.2, 0.4};
  const double v_grid[] = {0.0, 0.5, 1.0};
  const double w_grid[] = {0.0, 0.5, 1.0};

  ConformanceReport combined;
  combined.dim = dim;
  for (double r : r_grid) {
    for (double v0 : v_grid) {
      for (double w : w_grid) {
        Scenario sc;
        sc.family = CylKind::Azimuthal;
        sc.r = r;
        sc.v0 = v0;
        sc.network.topology = topology;
        sc.network.m = 2.0 * w * w;
        ConformanceReport one = conformance_run(sc, dim, tolerance);
        char prefix[64];
        std::snprintf(prefix, sizeof(prefix), "r=%g,v0=%g,w=%g/", r, v0, w);
        for (ConformanceRow& row : one.rows) {
          row.name = prefix + row.name;
          combined.rows.push_back(row);
        }
        combined.leakage = std::max(combined.leakage, one.leakage);
      }
    }
  }
  return combined;
}

std::string conformance_table_text(const ConformanceReport& report) {
  std::ostringstream out;
  out << "dim = " << report.dim << ", worst leakage = " << report.leakage
      << "\n";
  for (const ConformanceRow& row : report.rows) {
    const char* status = row.informational ? "INFO" : (row.pass ? "PASS" : "FAIL");
    out << std::left << std::setw(6) << status << std::setw(60) << row.name
        << " gaussian=" << std::setw(15) << format_number(row.gaussian)
        << " fock=" << std::setw(15) << format_number(row.fock)
        << " diff=" << format_number(row.diff) << "\n";
  }
  out << (report.passed() ? "CONFORMANCE PASS" : "CONFORMANCE FAIL")
      << " (max non-informational diff = " << format_number(report.max_diff())
      << ")\n";
  return out.str();
}

std::string conformance_json(const ConformanceReport& report) {
  json root;
  root["dim"] = report.dim;
  root["leakage"] = report.leakage;
  root["passed"] = report.passed();
  root["rows"] = json::array();
  for (const ConformanceRow& row : report.rows) {
    root["rows"].push_back(json{{"name", row.name},
                                {"gaussian", row.gaussian},
                                {"fock", row.fock},
                                {"diff", row.diff},
                                {"tolerance", row.tolerance},
                                {"pass", row.pass},
                                {"informational", row.informational}});
  }
  return root.dump(2) + "\n";
}

std::string gaussian_state_json(const GaussianState& state) {
  json root;
  root["n_modes"] = state.n_modes;
  root["mean"] = json::array();
  for (int k = 0; k < state.mean.size(); ++k) root["mean"].push_back(state.mean(k));
  root["cov"] = json::array();
  for (int i = 0; i < state.cov.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < state.cov.cols(); ++j) row.push_back(state.cov(i, j));
    root["cov"].push_back(row);
  }
  return root.dump(2) + "\n";
}

GaussianState gaussian_state_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("state is not valid JSON: ") + e.what());
  }
  GaussianState state;
  try {
    state.n_modes = j.at("n_modes").get<int>();
    const auto& mean = j.at("mean");
    const auto& cov = j.at("cov");
    if (state.n_modes < 1 ||
        static_cast<int>(mean.size()) != 2 * state.n_modes ||
        static_cast<int>(cov.size()) != 2 * state.n_modes) {
      throw ParseError("state dimensions are inconsistent");
    }
    state.mean.resize(2 * state.n_modes);
    state.cov.resize(2 * state.n_modes, 2 * state.n_modes);
    for (int k = 0; k < 2 * state.n_modes; ++k) {
      state.mean(k) = mean.at(static_cast<std::size_t>(k)).get<double>();
      const auto& row = cov.at(static_cast<std::size_t>(k));
      if (static_cast<int>(row.size()) != 2 * state.n_modes) {
        throw ParseError("state covariance is not square");
      }
      for (int l = 0; l < 2 * state.n_modes; ++l) {
        state.cov(k, l) = row.at(static_cast<std::size_t>(l)).get<double>();
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed state: ") + e.what());
  }
  return state;
}

std::string observable_json(const QuadraticObservable& obs) {
  json root;
  root["matrix"] = json::array();
  for (int i = 0; i < obs.coeff.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < obs.coeff.cols(); ++j) {
      row.push_back(json{{"re", obs.coeff(i, j).real()},
                         {"im", obs.coeff(i, j).imag()}});
    }
    root["matrix"].push_back(row);
  }
  root["offset"] = obs.offset;
  return root.dump(2) + "\n";
}

QuadraticObservable observable_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("observable is not valid JSON: ") + e.what());
  }
  QuadraticObservable obs;
  try {
    const auto& matrix = j.at("matrix");
    const int n = static_cast<int>(matrix.size());
    obs.coeff.resize(n, n);
    for (int i = 0; i < n; ++i) {
      const auto& row = matrix.at(static_cast<std::size_t>(i));
      if (static_cast<int>(row.size()) != n) {
        throw ParseError("observable matrix is not square");
      }
      for (int k = 0; k < n; ++k) {
        const auto& cell = row.at(static_cast<std::size_t>(k));
        obs.coeff(i, k) =
            Complex(cell.at("re").get<double>(), cell.at("im").get<double>());
      }
    }
    obs.offset = j.value("offset", 0.0);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed observable: ") + e.what());
  }
  return obs;
}

}  // namespace stokesim
