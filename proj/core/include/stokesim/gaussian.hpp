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

#ifndef STOKESIM_GAUSSIAN_HPP
#define STOKESIM_GAUSSIAN_HPP

#include <complex>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "stokesim/modes.hpp"

namespace stokesim {

using Complex = std::complex<double>;

// Quadrature convention: X = a + a^dag, P = i(a^dag - a).  Vacuum has unit
// variance in each quadrature, so 0 dB (shot noise) corresponds to Var = 1
// and dB = 10*log10(Var) directly.  Quadratures are ordered
// (x_1, p_1, ..., x_N, p_N).

/// N-mode Gaussian state held as first and second quadrature moments.
struct GaussianState {
  int n_modes = 0;
  Eigen::VectorXd mean;  // length 2N
  Eigen::MatrixXd cov;   // 2N x 2N, symmetric

  /// Complex amplitude <a_k> = (<X_k> + i <P_k>)/2.
  Complex mode_amplitude(int mode) const;
};

/// Affine map of quadrature space: R -> S R + d with S symplectic.
struct SymplecticMap {
  Eigen::MatrixXd matrix;        // 2N x 2N
  Eigen::VectorXd displacement;  // 2N
};

/// Squeezing parameters.  zeta0 = 2*zeta = r*exp(i*theta); r >= 0 is the
/// degree of squeezing of the superposition mode and theta its angle.
struct SqueezeSpec {
  double r = 0.0;
  double theta = 0.0;

  Complex zeta() const;   // per-factor parameter, (r/2) e^{i theta}
  Complex zeta0() const;  // superposition-mode parameter, r e^{i theta}

  static SqueezeSpec from_zeta0(Complex zeta0);
};

/// Block-diagonal symplectic form for the xpxp ordering, [R_j, R_k] = 2i O_jk.
Eigen::MatrixXd symplectic_form(int n_modes);

// --- Symplectic map constructors (unit-tested against S O S^T = O) ---

SymplecticMap displacement_map(int n_modes, int mode, Complex v);
SymplecticMap squeeze_map(int n_modes, int mode, Complex zeta);
/// Two-mode squeezer exp(zeta a_i^dag a_j^dag - conj(zeta) a_i a_j); positive
/// real zeta squeezes X_i - X_j and P_i + P_j.
SymplecticMap two_mode_squeeze_map(int n_modes, int mode_i, int mode_j,
                                   Complex zeta);
SymplecticMap beamsplitter_map(int n_modes, int mode_i, int mode_j,
                               double transmissivity, double phase);
/// Realification of a passive (linear-optics) unitary U, a -> U a.
SymplecticMap passive_map(const Eigen::MatrixXcd& unitary);
/// Mode relabeling: light in mode k moves to label perm[k].
SymplecticMap permutation_map(int n_modes, const std::vector<int>& perm);

GaussianState apply(const GaussianState& state, const SymplecticMap& map);

// --- State constructors and channels ---

GaussianState vacuum(int n_modes);
GaussianState displace(const GaussianState& state, int mode, Complex v);
GaussianState squeeze_single(const GaussianState& state, int mode, Complex zeta);
GaussianState squeeze_two(const GaussianState& state, int mode_i, int mode_j,
                          Complex zeta);
GaussianState beamsplitter(const GaussianState& state, int mode_i, int mode_j,
                           double transmissivity, double phase = 0.0);
GaussianState passive(const GaussianState& state, const Eigen::MatrixXcd& unitary);
GaussianState relabel(const GaussianState& state, const std::vector<int>& perm);
/// Pure-loss channel with transmission eta on one mode.
GaussianState loss(const GaussianState& state, int mode, double eta);

/// Bright squeezed cylindrically polarized state: squeeze the superposition
/// mode of `family` by zeta0 and displace it by v0, expressed in the
/// four-mode Hermite-Gauss basis.
GaussianState prepare_bright_squeezed_cyl(const CylFamily& family, Complex v0,
                                          Complex zeta0);

/// True iff min eigenvalue of cov + i*Omega >= -1e-10.
bool physicality_check(const GaussianState& state);
/// The eigenvalue itself, for diagnostics.
double physicality_margin(const GaussianState& state);

// --- Small query helpers ---

double quadrature_variance_x(const GaussianState& state, int mode);
double quadrature_variance_p(const GaussianState& state, int mode);
/// Variance of the X quadrature of the superposition mode with coefficients c.
double projected_quadrature_variance(const GaussianState& state,
                                     const Eigen::VectorXcd& coeffs);
double mean_photon_number(const GaussianState& state);
bool covariance_is_symmetric(const GaussianState& state, double tol);

// --- Operation sequences (shared language with the Fock oracle) ---

struct DisplaceOp {
  int mode;
  Complex v;
};
struct SqueezeSingleOp {
  int mode;
  Complex zeta;
};
struct SqueezeTwoOp {
  int mode_i;
  int mode_j;
  Complex zeta;
};
struct BeamsplitterOp {
  int mode_i;
  int mode_j;
  double transmissivity;
  double phase;
};
struct RelabelOp {
  std::vector<int> perm;
};

using OpStep = std::variant<DisplaceOp, SqueezeSingleOp, SqueezeTwoOp,
                            BeamsplitterOp, RelabelOp>;
using OpSequence = std::vector<OpStep>;

GaussianState apply_sequence(const GaussianState& state, const OpSequence& sequence);

}  // namespace stokesim

#endif  // STOKESIM_GAUSSIAN_HPP
