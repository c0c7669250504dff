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

#ifndef STOKESIM_CRITERIA_HPP
#define STOKESIM_CRITERIA_HPP

#include <array>
#include <vector>

#include "stokesim/gaussian.hpp"
#include "stokesim/stokes.hpp"

namespace stokesim {

/// One inseparability test: indices (sigma, rho) with sigma != rho in
/// {1,2,3}, measured with the given arm specs.
struct CriterionSpec {
  int sigma;
  int rho;
  ArmSpec arm_a;
  ArmSpec arm_b;
};

/// Outcome of the normalized two-variance test
///   [V(S_sigma^a + S_sigma^b) + V(S_rho^a - S_rho^b)] / (4 |alpha|) < 1.
struct CriterionResult {
  double value = 0.0;
  double alpha = 0.0;          // |alpha| actually used for normalization
  bool violated = false;       // value < 1 - 1e-9
  double var_sum_sigma = 0.0;  // raw V(S_sigma^a + S_sigma^b)
  double var_diff_rho = 0.0;   // raw V(S_rho^a - S_rho^b)
  Complex alpha_arm_a{0.0, 0.0};
  Complex alpha_arm_b{0.0, 0.0};
  CriterionSpec spec;
};

/// A state together with the arm pairing it should be measured with.
struct MeasuredState {
  GaussianState state;
  ArmSpec arm_a;
  ArmSpec arm_b;
};

/// Evaluates the criterion.  The normalization alpha is the unordered
/// covariance cov(S_sigma^a, S_rho^a); its imaginary part carries the Stokes
/// commutator, so |alpha| reduces to |<S_tau>| of the third Stokes operator
/// whenever the symmetrized covariance vanishes.  Throws
/// DegenerateNormalization when |alpha| is numerically zero and
/// AsymmetricNormalization when the arms disagree.
CriterionResult duan_simon(const GaussianState& state, const CriterionSpec& spec);

/// Violation limit in the bright-coherent regime: e^{-r} cosh(r).
double bright_limit(double r);

/// Violation value when the coherent beams match the nonclassical beams in
/// intensity (m = n):
///   (1/16n) [12n + 2(1+2n)cosh(2r) + cosh(4r) - 3 - 4n sinh(2r)].
double equal_intensity_value(double n, double r);

/// Evaluates all 12 combinations: (sigma,rho) in {(1,2),(1,3),(2,3)} (outer)
/// times the four DOF pairings (inner), in the order the networks are given
/// [pol/pol, spa/spa, pol/spa, spa/pol].
std::vector<CriterionResult> scan_combinations(
    const std::array<MeasuredState, 4>& networks);

inline constexpr std::array<std::pair<int, int>, 3> kSigmaRhoPairs = {
    std::pair<int, int>{1, 2}, {1, 3}, {2, 3}};

}  // namespace stokesim

#endif  // STOKESIM_CRITERIA_HPP
