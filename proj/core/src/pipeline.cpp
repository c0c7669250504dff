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

#include "stokesim/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "stokesim/errors.hpp"

namespace stokesim {

double db_to_variance(double db) { return std::pow(10.0, db / 10.0); }

double variance_to_db(double v) {
  if (v <= 0.0) {
    throw InvalidArgument("variance_to_db: variance must be positive");
  }
  return 10.0 * std::log10(v);
}

namespace {

void check_eta(double eta, const char* name) {
  if (eta < 0.0 || eta > 1.0) {
    throw InvalidArgument(std::string(name) + " outside [0,1]");
  }
}

}  // namespace

double run_squeezing_pipeline(const PipelineConfig& cfg) {
  check_eta(cfg.eta_conversion, "eta_conversion");
  check_eta(cfg.eta_reflection, "eta_reflection");
  check_eta(cfg.extra_eta, "extra_eta");
  const double eta = cfg.eta_conversion * cfg.eta_reflection * cfg.extra_eta;
  const double v_in = db_to_variance(cfg.input_squeezing_db);
  return variance_to_db(eta * v_in + (1.0 - eta));
}

double implied_efficiency(double input_db, double output_db) {
  if (input_db >= 0.0 || output_db >= 0.0 ||
      std::abs(output_db) > std::abs(input_db)) {
    throw InvalidArgument(
        "implied_efficiency: need squeezed levels with |output| <= |input|");
  }
  return (1.0 - db_to_variance(output_db)) / (1.0 - db_to_variance(input_db));
}

PipelineReport make_pipeline_report(const PipelineConfig& cfg,
                                    std::optional<double> measured_db) {
  PipelineReport report;
  report.input_db = cfg.input_squeezing_db;
  report.eta_total = cfg.eta_conversion * cfg.eta_reflection * cfg.extra_eta;
  report.predicted_db = run_squeezing_pipeline(cfg);
  if (measured_db.has_value()) {
    report.measured_db = measured_db;
    report.implied_eta = implied_efficiency(cfg.input_squeezing_db, *measured_db);
    report.gap_db = report.predicted_db - *measured_db;
  }
  return report;
}

std::string to_string(Topology t) {
  switch (t) {
    case Topology::PolPol: return "polpol";
    case Topology::SpaSpa: return "spaspa";
    case Topology::PolSpa: return "polspa";
    case Topology::SpaPol: return "spapol";
  }
  return "polpol";
}

Topology parse_topology(const std::string& text) {
  if (text == "polpol") return Topology::PolPol;
  if (text == "spaspa") return Topology::SpaSpa;
  if (text == "polspa") return Topology::PolSpa;
  if (text == "spapol") return Topology::SpaPol;
  throw InvalidArgument("unknown topology: \"" + text + "\"");
}

Dof topology_dof_a(Topology t) {
  return (t == Topology::PolPol || t == Topology::PolSpa) ? Dof::Pol : Dof::Spa;
}

Dof topology_dof_b(Topology t) {
  return (t == Topology::PolPol || t == Topology::SpaPol) ? Dof::Pol : Dof::Spa;
}

MeasurementNetwork MeasurementNetwork::for_topology(Topology t, Complex w1,
                                                    Complex w2) {
  MeasurementNetwork net;
  net.topology = t;
  net.w1 = w1;
  net.w2 = w2;
  net.hwp_in_b = (t == Topology::PolPol);
  net.elements = {NetworkElement::Pbs};
  if (topology_dof_a(t) == Dof::Pol && topology_dof_b(t) == Dof::Pol) {
    net.elements.push_back(NetworkElement::HalfWavePlate45);
  } else {
    net.elements.push_back(NetworkElement::AsymmetricMachZehnder);
  }
  net.elements.push_back(NetworkElement::CoherentInjection);
  return net;
}

namespace {

// Where the squeezed light of each arm must end up so that every Stokes pair
// reads (coherent, squeezed) in its (first, second) slots.  Polarization
// measurements park the squeezed modes on (y10, y01) via the half-wave
// plate; spatial measurements park them on (x01, y01) via the mode sorter.
ModeLabel squeezed_destination(ModeLabel src, bool pol_placement) {
  if (pol_placement) {
    return ModeLabel{Polarization::Y, src.spatial};
  }
  return ModeLabel{src.pol, SpatialMode::HG01};
}

std::vector<int> routing_permutation(const CylFamily& family,
                                     bool pol_placement) {
  const int src1 = mode_index(family.pair.first);
  const int src2 = mode_index(family.pair.second);
  const int dst1 = mode_index(squeezed_destination(family.pair.first, pol_placement));
  const int dst2 = mode_index(squeezed_destination(family.pair.second, pol_placement));

  std::vector<int> dest(kNumModes, -1);
  dest[static_cast<std::size_t>(src1)] = dst1;
  dest[static_cast<std::size_t>(src2)] = dst2;
  // Remaining (vacuum) labels fill the remaining slots in index order.
  std::vector<bool> taken(kNumModes, false);
  taken[static_cast<std::size_t>(dst1)] = true;
  taken[static_cast<std::size_t>(dst2)] = true;
  for (int k = 0; k < kNumModes; ++k) {
    if (dest[static_cast<std::size_t>(k)] >= 0) continue;
    for (int slot = 0; slot < kNumModes; ++slot) {
      if (!taken[static_cast<std::size_t>(slot)]) {
        dest[static_cast<std::size_t>(k)] = slot;
        taken[static_cast<std::size_t>(slot)] = true;
        break;
      }
    }
  }
  return dest;
}

// Family sign of the squeezed mode that lands in the given destination.
double arm_sign(const CylFamily& family, bool pol_placement, ModeLabel slot2) {
  if (squeezed_destination(family.pair.first, pol_placement) == slot2) {
    return family.signs.first;
  }
  return family.signs.second;
}

}  // namespace

std::pair<ArmSpec, ArmSpec> topology_arm_specs(Topology t) {
  switch (t) {
    case Topology::PolPol:
      return {ArmSpec{Arm::A, Dof::Pol, {mode::x10, mode::y10}},
              ArmSpec{Arm::B, Dof::Pol, {mode::x01, mode::y01}}};
    case Topology::SpaSpa:
      return {ArmSpec{Arm::A, Dof::Spa, {mode::x10, mode::x01}},
              ArmSpec{Arm::B, Dof::Spa, {mode::y10, mode::y01}}};
    case Topology::PolSpa:
      // Arm b performs a spatial Stokes measurement on its own two paths;
      // in the four-mode model those paths reuse the (x01, y01) labels.
      return {ArmSpec{Arm::A, Dof::Pol, {mode::x10, mode::y10}},
              ArmSpec{Arm::B, Dof::Spa, {mode::x01, mode::y01}}};
    case Topology::SpaPol:
      return {ArmSpec{Arm::A, Dof::Spa, {mode::x10, mode::x01}},
              ArmSpec{Arm::B, Dof::Pol, {mode::y10, mode::y01}}};
  }
  throw InvalidArgument("unknown topology");
}

MeasuredState build_measurement_network(const GaussianState& state4,
                                        const CylFamily& family,
                                        const MeasurementNetwork& net) {
  if (state4.n_modes != kNumModes) {
    throw InvalidArgument("build_measurement_network: need a 4-mode state");
  }
  if (!std::isfinite(net.w1.real()) || !std::isfinite(net.w1.imag()) ||
      !std::isfinite(net.w2.real()) || !std::isfinite(net.w2.imag())) {
    throw InvalidArgument("build_measurement_network: amplitudes must be finite");
  }

  // PolPol and PolSpa share the (y10, y01) placement; SpaSpa and SpaPol share
  // (x01, y01).
  const bool place_pol = (net.topology == Topology::PolPol ||
                          net.topology == Topology::PolSpa);

  const auto [spec_a, spec_b] = topology_arm_specs(net.topology);
  GaussianState out = relabel(state4, routing_permutation(family, place_pol));

  // Injections enter the first slot of each pair, with the sign that makes
  // the two arms' Stokes means equal.
  const double sign_a = arm_sign(family, place_pol, spec_a.mode_pair.second);
  const double sign_b = arm_sign(family, place_pol, spec_b.mode_pair.second);
  out = displace(out, mode_index(spec_a.mode_pair.first), -net.w1 * sign_a);
  out = displace(out, mode_index(spec_b.mode_pair.first), -net.w2 * sign_b);
  return MeasuredState{out, spec_a, spec_b};
}

std::array<MeasuredState, 4> build_all_topologies(const GaussianState& state4,
                                                  const CylFamily& family,
                                                  Complex w) {
  return {build_measurement_network(
              state4, family, MeasurementNetwork::for_topology(Topology::PolPol, w, w)),
          build_measurement_network(
              state4, family, MeasurementNetwork::for_topology(Topology::SpaSpa, w, w)),
          build_measurement_network(
              state4, family, MeasurementNetwork::for_topology(Topology::PolSpa, w, w)),
          build_measurement_network(
              state4, family, MeasurementNetwork::for_topology(Topology::SpaPol, w, w))};
}

OpSequence network_sequence(const CylFamily& family, Complex v0, Complex zeta0,
                            const MeasurementNetwork& net) {
  const int idx1 = mode_index(family.pair.first);
  const int idx2 = mode_index(family.pair.second);
  const Complex zeta = zeta0 / 2.0;
  const double pair_sign = family.signs.first * family.signs.second;
  const Eigen::Vector4cd c = cylindrical_coefficients(family);

  OpSequence seq;
  // Factorized source: two-mode squeezer, then local squeezers, then the
  // displacements of the superposition mode.
  seq.push_back(SqueezeTwoOp{idx1, idx2, -pair_sign * zeta});
  seq.push_back(SqueezeSingleOp{idx1, zeta});
  seq.push_back(SqueezeSingleOp{idx2, zeta});
  seq.push_back(DisplaceOp{idx1, std::conj(c(idx1)) * v0});
  seq.push_back(DisplaceOp{idx2, std::conj(c(idx2)) * v0});

  const bool place_pol = (net.topology == Topology::PolPol ||
                          net.topology == Topology::PolSpa);
  seq.push_back(RelabelOp{routing_permutation(family, place_pol)});

  const auto [spec_a, spec_b] = topology_arm_specs(net.topology);
  const double sign_a = arm_sign(family, place_pol, spec_a.mode_pair.second);
  const double sign_b = arm_sign(family, place_pol, spec_b.mode_pair.second);
  seq.push_back(DisplaceOp{mode_index(spec_a.mode_pair.first), -net.w1 * sign_a});
  seq.push_back(DisplaceOp{mode_index(spec_b.mode_pair.first), -net.w2 * sign_b});
  return seq;
}

}  // namespace stokesim
