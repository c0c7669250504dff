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

#include "stokesim/fock.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "stokesim/criteria.hpp"
#include "stokesim/errors.hpp"
#include "stokesim/tolerances.hpp"

namespace stokesim {

namespace {

int int_pow(int base, int exp) {
  int out = 1;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

Eigen::MatrixXcd lowering(int dim) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) {
    a(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

// Applies a dim x dim matrix over the index of one mode.
void apply_one_mode(Eigen::VectorXcd& amps, int n_modes, int dim, int mode,
                    const Eigen::MatrixXcd& op) {
  const int stride = int_pow(dim, n_modes - 1 - mode);
  const int block = stride * dim;
  const int total = static_cast<int>(amps.size());
  Eigen::VectorXcd scratch(dim);
  for (int hi = 0; hi < total; hi += block) {
    for (int lo = 0; lo < stride; ++lo) {
      const int base = hi + lo;
      for (int n = 0; n < dim; ++n) scratch(n) = amps(base + n * stride);
      scratch = (op * scratch).eval();
      for (int n = 0; n < dim; ++n) amps(base + n * stride) = scratch(n);
    }
  }
}

// Applies a dim^2 x dim^2 matrix over the fused index n_i * dim + n_j.
void apply_two_mode(Eigen::VectorXcd& amps, int n_modes, int dim, int mode_i,
                    int mode_j, const Eigen::MatrixXcd& op) {
  const int stride_i = int_pow(dim, n_modes - 1 - mode_i);
  const int stride_j = int_pow(dim, n_modes - 1 - mode_j);
  const int total = static_cast<int>(amps.size());
  Eigen::VectorXcd scratch(dim * dim);
  for (int base = 0; base < total; ++base) {
    const int ni = (base / stride_i) % dim;
    const int nj = (base / stride_j) % dim;
    if (ni != 0 || nj != 0) continue;
    for (int n = 0; n < dim; ++n) {
      for (int m = 0; m < dim; ++m) {
        scratch(n * dim + m) = amps(base + n * stride_i + m * stride_j);
      }
    }
    scratch = (op * scratch).eval();
    for (int n = 0; n < dim; ++n) {
      for (int m = 0; m < dim; ++m) {
        amps(base + n * stride_i + m * stride_j) = scratch(n * dim + m);
      }
    }
  }
}

void apply_relabel(Eigen::VectorXcd& amps, int n_modes, int dim,
                   const std::vector<int>& perm) {
  const int total = static_cast<int>(amps.size());
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(total);
  std::vector<int> strides(static_cast<std::size_t>(n_modes));
  for (int k = 0; k < n_modes; ++k) {
    strides[static_cast<std::size_t>(k)] = int_pow(dim, n_modes - 1 - k);
  }
  for (int idx = 0; idx < total; ++idx) {
    int dst = 0;
    for (int k = 0; k < n_modes; ++k) {
      const int nk = (idx / strides[static_cast<std::size_t>(k)]) % dim;
      dst += nk * strides[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
    }
    out(dst) = amps(idx);
  }
  amps = out;
}

Eigen::MatrixXcd displacement_generator(int dim, Complex v) {
  const Eigen::MatrixXcd a = lowering(dim);
  return v * a.adjoint() - std::conj(v) * a;
}

Eigen::MatrixXcd squeeze_generator(int dim, Complex zeta) {
  const Eigen::MatrixXcd a = lowering(dim);
  return 0.5 * (std::conj(zeta) * a * a - zeta * a.adjoint() * a.adjoint());
}

Eigen::MatrixXcd two_mode_squeeze_generator(int dim, Complex zeta) {
  const Eigen::MatrixXcd a = lowering(dim);
  const Eigen::MatrixXcd ad = a.adjoint();
  const Eigen::MatrixXcd adad = Eigen::kroneckerProduct(ad, ad);
  const Eigen::MatrixXcd aa = Eigen::kroneckerProduct(a, a);
  return zeta * adad - std::conj(zeta) * aa;
}

Eigen::MatrixXcd beamsplitter_generator(int dim, double transmissivity,
                                        double phase) {
  const Eigen::MatrixXcd a = lowering(dim);
  const Eigen::MatrixXcd ad = a.adjoint();
  const double angle = std::acos(std::sqrt(transmissivity));
  return angle * (std::polar(1.0, phase) * Eigen::kroneckerProduct(ad, a) -
                  std::polar(1.0, -phase) * Eigen::kroneckerProduct(a, ad));
}

// Lowered copies a_k |psi> for every mode (truncated action).
std::vector<Eigen::VectorXcd> lowered_vectors(const FockState& state) {
  std::vector<Eigen::VectorXcd> lowered;
  lowered.reserve(static_cast<std::size_t>(state.n_modes));
  const Eigen::MatrixXcd a = lowering(state.dim);
  for (int k = 0; k < state.n_modes; ++k) {
    Eigen::VectorXcd v = state.amps;
    apply_one_mode(v, state.n_modes, state.dim, k, a);
    lowered.push_back(std::move(v));
  }
  return lowered;
}

Eigen::VectorXcd apply_observable(const QuadraticObservable& obs,
                                  const FockState& state,
                                  const std::vector<Eigen::VectorXcd>& lowered) {
  const Eigen::MatrixXcd ad = lowering(state.dim).adjoint();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.amps.size());
  for (int j = 0; j < state.n_modes; ++j) {
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(state.amps.size());
    bool any = false;
    for (int k = 0; k < state.n_modes; ++k) {
      if (obs.coeff(j, k) != Complex(0.0, 0.0)) {
        z += obs.coeff(j, k) * lowered[static_cast<std::size_t>(k)];
        any = true;
      }
    }
    if (!any) continue;
    apply_one_mode(z, state.n_modes, state.dim, j, ad);
    out += z;
  }
  if (obs.offset != 0.0) out += obs.offset * state.amps;
  return out;
}

void check_obs_dims(const QuadraticObservable& obs, const FockState& state,
                    const char* who) {
  if (obs.coeff.rows() != state.n_modes || obs.coeff.cols() != state.n_modes) {
    throw InvalidArgument(std::string(who) +
                          ": observable dimension does not match state");
  }
}

}  // namespace

FockState oracle_prepare(const OpSequence& sequence, int n_modes, int dim,
                         int pad) {
  if (n_modes < 1) throw InvalidArgument("oracle_prepare: need modes");
  if (dim < 2 || pad < 0) throw InvalidArgument("oracle_prepare: bad truncation");
  const int work = dim + pad;
  const int total_work = int_pow(work, n_modes);

  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(total_work);
  amps(0) = 1.0;

  for (const OpStep& step : sequence) {
    std::visit(
        [&](const auto& op) {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, DisplaceOp>) {
            const Eigen::MatrixXcd u = displacement_generator(work, op.v).exp();
            apply_one_mode(amps, n_modes, work, op.mode, u);
          } else if constexpr (std::is_same_v<T, SqueezeSingleOp>) {
            const Eigen::MatrixXcd u = squeeze_generator(work, op.zeta).exp();
            apply_one_mode(amps, n_modes, work, op.mode, u);
          } else if constexpr (std::is_same_v<T, SqueezeTwoOp>) {
            const Eigen::MatrixXcd u =
                two_mode_squeeze_generator(work, op.zeta).exp();
            apply_two_mode(amps, n_modes, work, op.mode_i, op.mode_j, u);
          } else if constexpr (std::is_same_v<T, BeamsplitterOp>) {
            const Eigen::MatrixXcd u =
                beamsplitter_generator(work, op.transmissivity, op.phase).exp();
            apply_two_mode(amps, n_modes, work, op.mode_i, op.mode_j, u);
          } else {
            apply_relabel(amps, n_modes, work, op.perm);
          }
        },
        step);
  }

  // Project to the declared truncation; the dropped tail is the leakage.
  FockState state;
  state.n_modes = n_modes;
  state.dim = dim;
  state.amps = Eigen::VectorXcd::Zero(int_pow(dim, n_modes));
  std::vector<int> work_strides(static_cast<std::size_t>(n_modes));
  std::vector<int> dim_strides(static_cast<std::size_t>(n_modes));
  for (int k = 0; k < n_modes; ++k) {
    work_strides[static_cast<std::size_t>(k)] = int_pow(work, n_modes - 1 - k);
    dim_strides[static_cast<std::size_t>(k)] = int_pow(dim, n_modes - 1 - k);
  }
  for (int idx = 0; idx < state.amps.size(); ++idx) {
    int src = 0;
    for (int k = 0; k < n_modes; ++k) {
      const int nk = (idx / dim_strides[static_cast<std::size_t>(k)]) % dim;
      src += nk * work_strides[static_cast<std::size_t>(k)];
    }
    state.amps(idx) = amps(src);
  }
  const double kept = state.amps.squaredNorm();
  state.leakage = std::max(0.0, 1.0 - kept);
  if (state.leakage >= tol::kLeakageMax) {
    std::ostringstream msg;
    msg << "truncation leakage " << state.leakage << " exceeds "
        << tol::kLeakageMax << " at dim " << dim;
    throw TruncationError(msg.str(), state.leakage);
  }
  state.amps /= std::sqrt(kept);
  return state;
}

double oracle_expect(const QuadraticObservable& obs, const FockState& state) {
  check_obs_dims(obs, state, "oracle_expect");
  const auto lowered = lowered_vectors(state);
  Complex total = 0.0;
  for (int j = 0; j < state.n_modes; ++j) {
    for (int k = 0; k < state.n_modes; ++k) {
      if (obs.coeff(j, k) == Complex(0.0, 0.0)) continue;
      total += obs.coeff(j, k) *
               lowered[static_cast<std::size_t>(j)].dot(lowered[static_cast<std::size_t>(k)]);
    }
  }
  if (std::abs(total.imag()) > 1e-9 * std::max(1.0, std::abs(total.real()))) {
    throw Error("oracle_expect: non-real expectation");
  }
  return total.real() + obs.offset;
}

Complex oracle_quantum_covariance(const QuadraticObservable& obs1,
                                  const QuadraticObservable& obs2,
                                  const FockState& state) {
  check_obs_dims(obs1, state, "oracle_covariance");
  check_obs_dims(obs2, state, "oracle_covariance");
  const auto lowered = lowered_vectors(state);
  const Eigen::VectorXcd v1 = apply_observable(obs1, state, lowered);
  const Eigen::VectorXcd v2 = apply_observable(obs2, state, lowered);
  const Complex mean1 = state.amps.dot(v1);
  const Complex mean2 = state.amps.dot(v2);
  return v1.dot(v2) - std::conj(mean1) * mean2;
}

double oracle_covariance(const QuadraticObservable& obs1,
                         const QuadraticObservable& obs2, const FockState& state) {
  return oracle_quantum_covariance(obs1, obs2, state).real();
}

double oracle_variance(const QuadraticObservable& obs, const FockState& state) {
  return oracle_covariance(obs, obs, state);
}

double oracle_mean_photon(const FockState& state, int mode) {
  if (mode < 0 || mode >= state.n_modes) {
    throw InvalidArgument("oracle_mean_photon: bad mode");
  }
  Eigen::VectorXcd v = state.amps;
  apply_one_mode(v, state.n_modes, state.dim, mode, lowering(state.dim));
  return v.squaredNorm();
}

bool ConformanceReport::passed() const {
  for (const ConformanceRow& row : rows) {
    if (!row.informational && !row.pass) return false;
  }
  return true;
}

double ConformanceReport::max_diff() const {
  double worst = 0.0;
  for (const ConformanceRow& row : rows) {
    if (!row.informational) worst = std::max(worst, row.diff);
  }
  return worst;
}

ConformanceReport oracle_compare(const OpSequence& sequence,
                                 const std::pair<ArmSpec, ArmSpec>& arms,
                                 int dim, double tolerance) {
  const GaussianState gauss = apply_sequence(vacuum(kNumModes), sequence);
  const FockState fock = oracle_prepare(sequence, kNumModes, dim);

  ConformanceReport report;
  report.dim = dim;
  report.leakage = fock.leakage;

  auto add_row = [&](const std::string& name, double lhs, double rhs,
                     bool informational = false) {
    ConformanceRow row;
    row.name = name;
    row.gaussian = lhs;
    row.fock = rhs;
    row.diff = std::abs(lhs - rhs);
    row.tolerance = tolerance;
    row.pass = row.diff <= tolerance;
    row.informational = informational;
    report.rows.push_back(row);
  };

  for (const ArmSpec& arm : {arms.first, arms.second}) {
    const std::string prefix = to_string(arm.dof) + "." + to_string(arm.arm);
    std::array<QuadraticObservable, 4> ops;
    for (int k = 0; k < 4; ++k) ops[static_cast<std::size_t>(k)] = stokes(arm, k);
    for (int k = 0; k < 4; ++k) {
      const std::string base = prefix + ".S" + std::to_string(k);
      add_row(base + ".mean", expectation(ops[static_cast<std::size_t>(k)], gauss),
              oracle_expect(ops[static_cast<std::size_t>(k)], fock));
      add_row(base + ".var", variance(ops[static_cast<std::size_t>(k)], gauss),
              oracle_variance(ops[static_cast<std::size_t>(k)], fock));
    }
    for (const auto& [sigma, rho] : kSigmaRhoPairs) {
      const QuadraticObservable& s = ops[static_cast<std::size_t>(sigma)];
      const QuadraticObservable& r = ops[static_cast<std::size_t>(rho)];
      const Complex qg = quantum_covariance(s, r, gauss);
      const Complex qf = oracle_quantum_covariance(s, r, fock);
      const std::string base = prefix + ".cov(S" + std::to_string(sigma) + ",S" +
                               std::to_string(rho) + ")";
      add_row(base + ".re", qg.real(), qf.real());
      add_row(base + ".im", qg.imag(), qf.imag());
    }
  }

  // Criterion ingredients across the two arms.
  for (const auto& [sigma, rho] : kSigmaRhoPairs) {
    const std::string base = "criterion(" + std::to_string(sigma) + "," +
                             std::to_string(rho) + ")";
    QuadraticObservable sum;
    sum.coeff = stokes(arms.first, sigma).coeff + stokes(arms.second, sigma).coeff;
    QuadraticObservable diff;
    diff.coeff = stokes(arms.first, rho).coeff - stokes(arms.second, rho).coeff;
    const double vg_sum = variance(sum, gauss);
    const double vf_sum = oracle_variance(sum, fock);
    const double vg_diff = variance(diff, gauss);
    const double vf_diff = oracle_variance(diff, fock);
    add_row(base + ".var_sum", vg_sum, vf_sum);
    add_row(base + ".var_diff", vg_diff, vf_diff);

    const Complex alpha_g = quantum_covariance(stokes(arms.first, sigma),
                                               stokes(arms.first, rho), gauss);
    const Complex alpha_f = oracle_quantum_covariance(
        stokes(arms.first, sigma), stokes(arms.first, rho), fock);
    add_row(base + ".alpha_abs", std::abs(alpha_g), std::abs(alpha_f));
    if (std::abs(alpha_g) > 1e-6 && std::abs(alpha_f) > 1e-6) {
      add_row(base + ".value",
              (vg_sum + vg_diff) / (4.0 * std::abs(alpha_g)),
              (vf_sum + vf_diff) / (4.0 * std::abs(alpha_f)));
    }
  }

  return report;
}

}  // namespace stokesim
