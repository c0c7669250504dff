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

#ifndef STOKESIM_STOKES_HPP
#define STOKESIM_STOKES_HPP

#include <array>
#include <complex>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "stokesim/gaussian.hpp"
#include "stokesim/modes.hpp"

namespace stokesim {

/// Hermitian quadratic form O = sum_jk M_jk a_j^dag a_k + offset.
struct QuadraticObservable {
  Eigen::MatrixXcd coeff;
  double offset = 0.0;

  bool is_hermitian(double tol) const;
};

enum class Arm { A, B };
enum class Dof { Pol, Spa };

std::string to_string(Arm arm);
std::string to_string(Dof dof);

/// Which mode pair a Stokes measurement on one arm addresses.
///
/// The standalone assignments follow the printed operator sets:
///   pol-a = (x10, y10)   pol-b = (x01, y01)
///   spa-a = (x10, x01)   spa-b = (y10, y01)
/// Measurement networks may report relabeled pairs (see pipeline.hpp).
struct ArmSpec {
  Arm arm;
  Dof dof;
  std::pair<ModeLabel, ModeLabel> mode_pair;

  static ArmSpec standard(Arm arm, Dof dof);
};

/// Stokes operator S_index on the arm's mode pair, as a 4x4 quadratic form
/// over the global mode basis.  S0 = sum, S1 = difference, S2/S3 = real and
/// imaginary coherences.
QuadraticObservable stokes(const ArmSpec& spec, int index);

/// Lookup by string key like "pol.a.S2".
QuadraticObservable stokes_by_key(const std::string& key);

/// Complex first and second central moments of a Gaussian state:
/// alpha_j = <a_j>, n_jk = <da_j^dag da_k>, m_jk = <da_j da_k>.
struct ComplexMoments {
  Eigen::VectorXcd alpha;
  Eigen::MatrixXcd n;
  Eigen::MatrixXcd m;

  static ComplexMoments from_state(const GaussianState& state);
};

/// <obs> on the state; throws if the coefficient matrix is not Hermitian to
/// working precision or dimensions mismatch.
double expectation(const QuadraticObservable& obs, const GaussianState& state);

/// Unordered covariance <O1 O2> - <O1><O2>.  Its real part is the
/// symmetrized covariance; its imaginary part is half the commutator
/// expectation.  Exact for Gaussian states (Wick pairing of fourth moments).
Complex quantum_covariance(const QuadraticObservable& obs1,
                           const QuadraticObservable& obs2,
                           const GaussianState& state);

/// Symmetrized covariance (1/2)<O1 O2 + O2 O1> - <O1><O2>.
double covariance(const QuadraticObservable& obs1,
                  const QuadraticObservable& obs2, const GaussianState& state);

double variance(const QuadraticObservable& obs, const GaussianState& state);

/// Squeezing-parameter bookkeeping used by the closed-form expressions:
/// mu = cosh(r/2), nu = sinh(r/2) e^{i theta}, mu^2 - |nu|^2 = 1.
struct SqueezeParams {
  double r = 0.0;
  double theta = 0.0;

  double mu() const;
  Complex nu() const;
};

/// Brightness bookkeeping: v0 = sqrt(n) for the squeezed beam and
/// w1 = w2 = sqrt(m/2) for the two coherent beams.
struct BrightnessParams {
  double n = 0.0;
  double m = 0.0;

  double v0() const;
  double w() const;
};

struct StokesVariances {
  double v01;  // V(S0) = V(S1)
  double v2;
  double v3;
};

/// Closed-form Stokes variances for the polarization-symmetric network at
/// squeezing angle zero, exactly as printed.
StokesVariances closed_form_variances(const BrightnessParams& p, double r);

/// Closed-form Stokes means.  The `printed` column keeps the 2*mu*nu
/// photon-number term of the standard closed forms (real part for nonzero
/// angle); `moment_consistent` replaces it with 2*|mu*nu|^2, the value the
/// moment machinery and the Fock oracle produce.  `discrepancy` is the
/// difference between the two and `flagged` marks when it exceeds working
/// precision.
struct ClosedFormMeans {
  std::array<double, 4> printed;
  std::array<double, 4> moment_consistent;
  double discrepancy = 0.0;
  bool flagged = false;
};

ClosedFormMeans closed_form_means(Arm arm, const BrightnessParams& p,
                                  const SqueezeParams& sq, double arg_w,
                                  double arg_v0);

}  // namespace stokesim

#endif  // STOKESIM_STOKES_HPP
