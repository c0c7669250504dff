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

#ifndef STOKESIM_FOCK_HPP
#define STOKESIM_FOCK_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stokesim/gaussian.hpp"
#include "stokesim/stokes.hpp"

namespace stokesim {

/// Dense truncated number-basis state.  Mode 0 is the most significant index
/// of the flattened amplitude tensor.
struct FockState {
  int n_modes = 0;
  int dim = 0;  // per-mode truncation
  Eigen::VectorXcd amps;
  double leakage = 0.0;  // squared norm lost when projecting from the padded space
};

inline constexpr int kOracleDefaultDim = 12;
inline constexpr int kOraclePad = 4;

/// Applies the operation sequence to vacuum by exponentiating truncated mode
/// generators.  All unitaries act at dimension dim + pad; the result is then
/// projected to dim, the lost norm recorded as leakage and the state
/// renormalized.  Throws TruncationError when leakage >= 1e-4.
FockState oracle_prepare(const OpSequence& sequence, int n_modes,
                         int dim = kOracleDefaultDim, int pad = kOraclePad);

/// Exact expectation of a quadratic observable on the truncated state.
double oracle_expect(const QuadraticObservable& obs, const FockState& state);

/// Unordered covariance <O1 O2> - <O1><O2> on the truncated state.
Complex oracle_quantum_covariance(const QuadraticObservable& obs1,
                                  const QuadraticObservable& obs2,
                                  const FockState& state);

double oracle_covariance(const QuadraticObservable& obs1,
                         const QuadraticObservable& obs2, const FockState& state);
double oracle_variance(const QuadraticObservable& obs, const FockState& state);

/// Mean photon number of one mode.
double oracle_mean_photon(const FockState& state, int mode);

struct ConformanceRow {
  std::string name;
  double gaussian = 0.0;
  double fock = 0.0;
  double diff = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  bool informational = false;  // recorded, but not a pass/fail gate
};

/// Side-by-side comparison of every Stokes moment (and criterion ingredient)
/// between the Gaussian engine and the Fock oracle on one scenario.
struct ConformanceReport {
  int dim = 0;
  double leakage = 0.0;
  std::vector<ConformanceRow> rows;

  bool passed() const;
  double max_diff() const;  // over non-informational rows
};

/// Runs `sequence` through both engines and compares all Stokes means,
/// variances and covariances of the two arm specs, plus the criterion
/// variances and normalizations for each (sigma, rho) pair.
ConformanceReport oracle_compare(const OpSequence& sequence,
                                 const std::pair<ArmSpec, ArmSpec>& arms,
                                 int dim = kOracleDefaultDim,
                                 double tolerance = 1e-3);

}  // namespace stokesim

#endif  // STOKESIM_FOCK_HPP
