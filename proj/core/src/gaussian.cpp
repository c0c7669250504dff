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

#include "stokesim/gaussian.hpp"

#include <cmath>
#include <string>

#include "stokesim/errors.hpp"
#include "stokesim/tolerances.hpp"

namespace stokesim {

namespace {

void check_mode(const GaussianState& state, int mode, const char* who) {
  if (mode < 0 || mode >= state.n_modes) {
    throw InvalidArgument(std::string(who) + ": mode index " +
                          std::to_string(mode) + " out of range for " +
                          std::to_string(state.n_modes) + " modes");
  }
}

void check_pair(const GaussianState& state, int i, int j, const char* who) {
  check_mode(state, i, who);
  check_mode(state, j, who);
  if (i == j) {
    throw InvalidArgument(std::string(who) + ": mode indices must differ");
  }
}

}  // namespace

Complex GaussianState::mode_amplitude(int mode) const {
  return Complex(mean(2 * mode), mean(2 * mode + 1)) * 0.5;
}

Complex SqueezeSpec::zeta() const { return 0.5 * r * std::polar(1.0, theta); }
Complex SqueezeSpec::zeta0() const { return r * std::polar(1.0, theta); }

SqueezeSpec SqueezeSpec::from_zeta0(Complex zeta0) {
  return SqueezeSpec{std::abs(zeta0), std::arg(zeta0)};
}

Eigen::MatrixXd symplectic_form(int n_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

SymplecticMap displacement_map(int n_modes, int mode, Complex v) {
  SymplecticMap map;
  map.matrix = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  map.displacement = Eigen::VectorXd::Zero(2 * n_modes);
  map.displacement(2 * mode) = 2.0 * v.real();
  map.displacement(2 * mode + 1) = 2.0 * v.imag();
  return map;
}

SymplecticMap squeeze_map(int n_modes, int mode, Complex zeta) {
  const double s = std::abs(zeta);
  const double theta = std::arg(zeta);
  const double ch = std::cosh(s);
  const double sh = std::sinh(s);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);

  SymplecticMap map;
  map.matrix = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  map.displacement = Eigen::VectorXd::Zero(2 * n_modes);
  const int x = 2 * mode;
  const int p = 2 * mode + 1;
  map.matrix(x, x) = ch - sh * ct;
  map.matrix(x, p) = -sh * st;
  map.matrix(p, x) = -sh * st;
  map.matrix(p, p) = ch + sh * ct;
  return map;
}

SymplecticMap two_mode_squeeze_map(int n_modes, int mode_i, int mode_j,
                                   Complex zeta) {
  const double s = std::abs(zeta);
  const double theta = std::arg(zeta);
  const double ch = std::cosh(s);
  const double sh = std::sinh(s);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);

  SymplecticMap map;
  map.matrix = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  map.displacement = Eigen::VectorXd::Zero(2 * n_modes);
  const int xi = 2 * mode_i, pi = 2 * mode_i + 1;
  const int xj = 2 * mode_j, pj = 2 * mode_j + 1;
  map.matrix(xi, xi) = ch;
  map.matrix(pi, pi) = ch;
  map.matrix(xj, xj) = ch;
  map.matrix(pj, pj) = ch;
  // Cross block R = [[cos, sin], [sin, -cos]] couples the partners.
  map.matrix(xi, xj) = sh * ct;
  map.matrix(xi, pj) = sh * st;
  map.matrix(pi, xj) = sh * st;
  map.matrix(pi, pj) = -sh * ct;
  map.matrix(xj, xi) = sh * ct;
  map.matrix(xj, pi) = sh * st;
  map.matrix(pj, xi) = sh * st;
  map.matrix(pj, pi) = -sh * ct;
  return map;
}

SymplecticMap passive_map(const Eigen::MatrixXcd& unitary) {
  const int n = static_cast<int>(unitary.rows());
  SymplecticMap map;
  map.matrix = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  map.displacement = Eigen::VectorXd::Zero(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double u = unitary(i, j).real();
      const double v = unitary(i, j).imag();
      map.matrix(2 * i, 2 * j) = u;
      map.matrix(2 * i, 2 * j + 1) = -v;
      map.matrix(2 * i + 1, 2 * j) = v;
      map.matrix(2 * i + 1, 2 * j + 1) = u;
    }
  }
  return map;
}

SymplecticMap beamsplitter_map(int n_modes, int mode_i, int mode_j,
                               double transmissivity, double phase) {
  const double t = std::sqrt(transmissivity);
  const double r = std::sqrt(1.0 - transmissivity);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n_modes, n_modes);
  u(mode_i, mode_i) = t;
  u(mode_i, mode_j) = r * std::polar(1.0, phase);
  u(mode_j, mode_i) = -r * std::polar(1.0, -phase);
  u(mode_j, mode_j) = t;
  return passive_map(u);
}

SymplecticMap permutation_map(int n_modes, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != n_modes) {
    throw InvalidArgument("permutation size does not match mode count");
  }
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= n_modes || seen[static_cast<std::size_t>(p)]) {
      throw InvalidArgument("relabeling is not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  SymplecticMap map;
  map.matrix = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  map.displacement = Eigen::VectorXd::Zero(2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    map.matrix(2 * perm[static_cast<std::size_t>(k)], 2 * k) = 1.0;
    map.matrix(2 * perm[static_cast<std::size_t>(k)] + 1, 2 * k + 1) = 1.0;
  }
  return map;
}

GaussianState apply(const GaussianState& state, const SymplecticMap& map) {
  if (map.matrix.rows() != 2 * state.n_modes) {
    throw InvalidArgument("symplectic map dimension does not match state");
  }
  GaussianState out;
  out.n_modes = state.n_modes;
  out.mean = map.matrix * state.mean + map.displacement;
  out.cov = map.matrix * state.cov * map.matrix.transpose();
  // Round off the asymmetry accumulated by the products.
  out.cov = 0.5 * (out.cov + out.cov.transpose()).eval();
  return out;
}

GaussianState vacuum(int n_modes) {
  if (n_modes < 1) {
    throw InvalidArgument("vacuum: need at least one mode");
  }
  GaussianState state;
  state.n_modes = n_modes;
  state.mean = Eigen::VectorXd::Zero(2 * n_modes);
  state.cov = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  return state;
}

GaussianState displace(const GaussianState& state, int mode, Complex v) {
  check_mode(state, mode, "displace");
  return apply(state, displacement_map(state.n_modes, mode, v));
}

GaussianState squeeze_single(const GaussianState& state, int mode, Complex zeta) {
  check_mode(state, mode, "squeeze_single");
  return apply(state, squeeze_map(state.n_modes, mode, zeta));
}

GaussianState squeeze_two(const GaussianState& state, int mode_i, int mode_j,
                          Complex zeta) {
  check_pair(state, mode_i, mode_j, "squeeze_two");
  return apply(state, two_mode_squeeze_map(state.n_modes, mode_i, mode_j, zeta));
}

GaussianState beamsplitter(const GaussianState& state, int mode_i, int mode_j,
                           double transmissivity, double phase) {
  check_pair(state, mode_i, mode_j, "beamsplitter");
  if (transmissivity < 0.0 || transmissivity > 1.0) {
    throw InvalidArgument("beamsplitter: transmissivity outside [0,1]");
  }
  return apply(state, beamsplitter_map(state.n_modes, mode_i, mode_j,
                                       transmissivity, phase));
}

GaussianState passive(const GaussianState& state, const Eigen::MatrixXcd& unitary) {
  if (unitary.rows() != state.n_modes || unitary.cols() != state.n_modes) {
    throw InvalidArgument("passive: unitary dimension does not match state");
  }
  return apply(state, passive_map(unitary));
}

GaussianState relabel(const GaussianState& state, const std::vector<int>& perm) {
  return apply(state, permutation_map(state.n_modes, perm));
}

GaussianState loss(const GaussianState& state, int mode, double eta) {
  check_mode(state, mode, "loss");
  if (eta < 0.0 || eta > 1.0) {
    throw InvalidArgument("loss: eta outside [0,1]");
  }
  const double root = std::sqrt(eta);
  GaussianState out = state;
  const int x = 2 * mode;
  out.mean(x) *= root;
  out.mean(x + 1) *= root;
  // Sigma -> T Sigma T^T + (1 - eta) on the mode block; T = sqrt(eta) there.
  for (int k = 0; k < 2 * state.n_modes; ++k) {
    out.cov(x, k) *= root;
    out.cov(x + 1, k) *= root;
  }
  for (int k = 0; k < 2 * state.n_modes; ++k) {
    out.cov(k, x) *= root;
    out.cov(k, x + 1) *= root;
  }
  out.cov(x, x) += 1.0 - eta;
  out.cov(x + 1, x + 1) += 1.0 - eta;
  return out;
}

namespace {

// Unitary whose first row is the (unit-norm) coefficient vector, completed
// by Gram-Schmidt against the canonical basis.
Eigen::MatrixXcd basis_completion(const Eigen::VectorXcd& first_row) {
  const int n = static_cast<int>(first_row.size());
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(n, n);
  w.row(0) = first_row.normalized();
  int filled = 1;
  for (int cand = 0; cand < n && filled < n; ++cand) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Unit(n, cand);
    for (int k = 0; k < filled; ++k) {
      v -= w.row(k).dot(v) * w.row(k).transpose();
    }
    if (v.norm() > 1e-8) {
      w.row(filled++) = v.normalized();
    }
  }
  return w;
}

}  // namespace

GaussianState prepare_bright_squeezed_cyl(const CylFamily& family, Complex v0,
                                          Complex zeta0) {
  const Eigen::Vector4cd coeffs = cylindrical_coefficients(family);
  const Eigen::MatrixXcd w = basis_completion(coeffs);

  // Build in the rotated basis where the family mode is mode 0, then map
  // back with a_k = sum_m (W^dag)_{km} d_m.
  GaussianState state = vacuum(kNumModes);
  state = squeeze_single(state, 0, zeta0);
  state = displace(state, 0, v0);
  return passive(state, w.adjoint());
}

bool physicality_check(const GaussianState& state) {
  return physicality_margin(state) >= -tol::kEigen;
}

double physicality_margin(const GaussianState& state) {
  const int dim = 2 * state.n_modes;
  Eigen::MatrixXcd m = state.cov.cast<Complex>();
  m += Complex(0.0, 1.0) * symplectic_form(state.n_modes).cast<Complex>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  double min_eig = solver.eigenvalues()(0);
  for (int k = 1; k < dim; ++k) {
    min_eig = std::min(min_eig, solver.eigenvalues()(k));
  }
  return min_eig;
}

double quadrature_variance_x(const GaussianState& state, int mode) {
  check_mode(state, mode, "quadrature_variance_x");
  return state.cov(2 * mode, 2 * mode);
}

double quadrature_variance_p(const GaussianState& state, int mode) {
  check_mode(state, mode, "quadrature_variance_p");
  return state.cov(2 * mode + 1, 2 * mode + 1);
}

double projected_quadrature_variance(const GaussianState& state,
                                     const Eigen::VectorXcd& coeffs) {
  if (coeffs.size() != state.n_modes) {
    throw InvalidArgument("projected variance: coefficient count mismatch");
  }
  // X_c = sum_k Re(c_k) X_k - Im(c_k) P_k.
  Eigen::VectorXd f = Eigen::VectorXd::Zero(2 * state.n_modes);
  for (int k = 0; k < state.n_modes; ++k) {
    f(2 * k) = coeffs(k).real();
    f(2 * k + 1) = -coeffs(k).imag();
  }
  return f.dot(state.cov * f);
}

double mean_photon_number(const GaussianState& state) {
  double total = 0.0;
  for (int k = 0; k < state.n_modes; ++k) {
    const Complex alpha = state.mode_amplitude(k);
    const double nkk =
        (state.cov(2 * k, 2 * k) + state.cov(2 * k + 1, 2 * k + 1) - 2.0) / 4.0;
    total += std::norm(alpha) + nkk;
  }
  return total;
}

bool covariance_is_symmetric(const GaussianState& state, double tol) {
  return (state.cov - state.cov.transpose()).cwiseAbs().maxCoeff() <= tol;
}

GaussianState apply_sequence(const GaussianState& state, const OpSequence& sequence) {
  GaussianState out = state;
  for (const OpStep& step : sequence) {
    out = std::visit(
        [&out](const auto& op) -> GaussianState {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, DisplaceOp>) {
            return displace(out, op.mode, op.v);
          } else if constexpr (std::is_same_v<T, SqueezeSingleOp>) {
            return squeeze_single(out, op.mode, op.zeta);
          } else if constexpr (std::is_same_v<T, SqueezeTwoOp>) {
            return squeeze_two(out, op.mode_i, op.mode_j, op.zeta);
          } else if constexpr (std::is_same_v<T, BeamsplitterOp>) {
            return beamsplitter(out, op.mode_i, op.mode_j, op.transmissivity,
                                op.phase);
          } else {
            return relabel(out, op.perm);
          }
        },
        step);
  }
  return out;
}

}  // namespace stokesim
