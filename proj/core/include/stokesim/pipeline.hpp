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

#ifndef STOKESIM_PIPELINE_HPP
#define STOKESIM_PIPELINE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "stokesim/criteria.hpp"
#include "stokesim/gaussian.hpp"
#include "stokesim/modes.hpp"

namespace stokesim {

// --- Squeezing pipeline: source level -> conversion losses -> output level ---

/// Variance relative to shot noise from a dB value: v = 10^(db/10).
double db_to_variance(double db);
/// Inverse; throws for v <= 0.
double variance_to_db(double v);

/// Loss budget of the mode-conversion chain.  Squeezing levels are dB
/// relative to shot noise (negative = squeezed); each eta is a transmission.
struct PipelineConfig {
  double input_squeezing_db = 0.0;
  double eta_conversion = 1.0;
  double eta_reflection = 1.0;
  double extra_eta = 1.0;
};

/// Output squeezing level after the loss chain:
/// V_out = eta_total * V_in + (1 - eta_total), returned in dB.
double run_squeezing_pipeline(const PipelineConfig& cfg);

/// Total transmission that would explain an observed output level:
/// eta = (1 - 10^(out/10)) / (1 - 10^(in/10)).
double implied_efficiency(double input_db, double output_db);

struct PipelineReport {
  double input_db = 0.0;
  double eta_total = 1.0;
  double predicted_db = 0.0;
  std::optional<double> measured_db;
  std::optional<double> implied_eta;  // from input_db and measured_db
  std::optional<double> gap_db;       // predicted - measured
};

PipelineReport make_pipeline_report(const PipelineConfig& cfg,
                                    std::optional<double> measured_db);

// --- Measurement networks (PBS split, coherent injection, HWP, MZ sorter) ---

enum class Topology { PolPol, SpaSpa, PolSpa, SpaPol };

std::string to_string(Topology t);
Topology parse_topology(const std::string& text);

/// Which DOF each arm of a topology measures.
Dof topology_dof_a(Topology t);
Dof topology_dof_b(Topology t);

/// The mode pairs each arm of a topology measures.
std::pair<ArmSpec, ArmSpec> topology_arm_specs(Topology t);

enum class NetworkElement {
  Pbs,
  HalfWavePlate45,
  AsymmetricMachZehnder,
  CoherentInjection,
};

/// A Stokes-measurement network: the PBS arm split, the routing element that
/// puts the squeezed light of each arm into the second slot of its Stokes
/// pair (half-wave plate at 45 degrees for polarization, ideal asymmetric
/// Mach-Zehnder sorter for spatial), and two coherent injections w1 (arm a)
/// and w2 (arm b).
struct MeasurementNetwork {
  Topology topology = Topology::PolPol;
  Complex w1{0.0, 0.0};
  Complex w2{0.0, 0.0};
  bool hwp_in_b = false;
  std::vector<NetworkElement> elements;

  static MeasurementNetwork for_topology(Topology t, Complex w1, Complex w2);
};

/// Routes a prepared 4-mode bright squeezed cylindrical state through the
/// network and injects the coherent beams.  Returns the output state together
/// with the arm pairings to measure it with.  The injected amplitudes carry
/// the sign that makes the two arms' Stokes means equal (the
/// polarization-symmetric construction).
MeasuredState build_measurement_network(const GaussianState& state4,
                                        const CylFamily& family,
                                        const MeasurementNetwork& net);

/// All four topologies on the same source, in the order
/// [pol/pol, spa/spa, pol/spa, spa/pol], with w1 = w2 = w.
std::array<MeasuredState, 4> build_all_topologies(const GaussianState& state4,
                                                  const CylFamily& family,
                                                  Complex w);

/// The same preparation and routing as an explicit operation sequence
/// (factorized source construction), for replay in the Fock oracle.
OpSequence network_sequence(const CylFamily& family, Complex v0, Complex zeta0,
                            const MeasurementNetwork& net);

}  // namespace stokesim

#endif  // STOKESIM_PIPELINE_HPP
