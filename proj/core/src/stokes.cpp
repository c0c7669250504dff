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

#include "stokesim/stokes.hpp"

#include <cmath>
#include <stdexcept>

#include "stokesim/errors.hpp"
#include "stokesim/tolerances.hpp"

namespace stokesim {

bool QuadraticObservable::is_hermitian(double tol) const {
  return (coeff - coeff.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

std::string to_string(Arm arm) { return arm == Arm::A ? "a" : "b"; }
std::string to_string(Dof dof) { return dof == Dof::Pol ? "pol" : "spa"; }

ArmSpec ArmSpec::standard(Arm arm, Dof dof) {
  if (dof == Dof::Pol) {
    return arm == Arm::A ? ArmSpec{arm, dof, {mode::x10, mode::y10}}
                         : ArmSpec{arm, dof, {mode::x01, mode::y01}};
  }
  return arm == Arm::A ? ArmSpec{arm, dof, {mode::x10, mode::x01}}
                       : ArmSpec{arm, dof, {mode::y10, mode::y01}};
}

QuadraticObservable stokes(const ArmSpec& spec, int index) {
  if (index < 0 || index > 3) {
    throw InvalidArgument("stokes: index must be in {0,1,2,3}");
  }
  const int first = mode_index(spec.mode_pair.first);
  const int second = mode_index(spec.mode_pair.second);
  QuadraticObservable obs;
  obs.coeff = Eigen::MatrixXcd::Zero(kNumModes, kNumModes);
  switch (index) {
    case 0:
      obs.coeff(first, first) = 1.0;
      obs.coeff(second, second) = 1.0;
      break;
    case 1:
      obs.coeff(first, first) = 1.0;
      obs.coeff(second, second) = -1.0;
      break;
    case 2:
      obs.coeff(first, second) = 1.0;
      obs.coeff(second, first) = 1.0;
      break;
    case 3:
      obs.coeff(first, second) = Complex(0.0, -1.0);
      obs.coeff(second, first) = Complex(0.0, 1.0);
      break;
  }
  return obs;
}

QuadraticObservable stokes_by_key(const std::string& key) {
  // Format: dof.arm.S<index>, e.g. "pol.a.S2".
  const auto first_dot = key.find('.');
  const auto second_dot = key.find('.', first_dot + 1);
  if (first_dot == std::string::npos || second_dot == std::string::npos) {
    throw InvalidArgument("stokes key must look like \"pol.a.S2\": " + key);
  }
  const std::string dof_text = key.substr(0, first_dot);
  const std::string arm_text = key.substr(first_dot + 1, second_dot - first_dot - 1);
  const std::string op_text = key.substr(second_dot + 1);

  Dof dof;
  if (dof_text == "pol") {
    dof = Dof::Pol;
  } else if (dof_text == "spa") {
    dof = Dof::Spa;
  } else {
    throw InvalidArgument("unknown DOF in stokes key: " + key);
  }
  Arm arm;
  if (arm_text == "a") {
    arm = Arm::A;
  } else if (arm_text == "b") {
    arm = Arm::B;
  } else {
    throw InvalidArgument("unknown arm in stokes key: " + key);
  }
  if (op_text.size() != 2 || op_text[0] != 'S' || op_text[1] < '0' ||
      op_text[1] > '3') {
    throw InvalidArgument("unknown operator in stokes key: " + key);
  }
  return stokes(ArmSpec::standard(arm, dof), op_text[1] - '0');
}

ComplexMoments ComplexMoments::from_state(const GaussianState& state) {
  const int n_modes = state.n_modes;
  ComplexMoments mom;
  mom.alpha.resize(n_modes);
  mom.n.resize(n_modes, n_modes);
  mom.m.resize(n_modes, n_modes);
  for (int j = 0; j < n_modes; ++j) {
    mom.alpha(j) = state.mode_amplitude(j);
  }
  for (int j = 0; j < n_modes; ++j) {
    for (int k = 0; k < n_modes; ++k) {
      const double cxx = state.cov(2 * j, 2 * k);
      const double cpp = state.cov(2 * j + 1, 2 * k + 1);
      const double cxp = state.cov(2 * j, 2 * k + 1);
      const double cpx = state.cov(2 * j + 1, 2 * k);
      const double delta = (j == k) ? 1.0 : 0.0;
      mom.m(j, k) = Complex((cxx - cpp) / 4.0, (cxp + cpx) / 4.0);
      mom.n(j, k) = Complex((cxx + cpp - 2.0 * delta) / 4.0, (cxp - cpx) / 4.0);
    }
  }
  return mom;
}

namespace {

void check_dims(const QuadraticObservable& obs, const GaussianState& state,
                const char* who) {
  if (obs.coeff.rows() != state.n_modes || obs.coeff.cols() != state.n_modes) {
    throw InvalidArgument(std::string(who) +
                          ": observable dimension does not match state");
  }
}

Complex general_expectation(const Eigen::MatrixXcd& coeff,
                            const ComplexMoments& mom) {
  // <sum M_jk a_j^dag a_k> = sum M_jk (n_jk + conj(alpha_j) alpha_k).
  Complex total = 0.0;
  const int n_modes = static_cast<int>(mom.alpha.size());
  for (int j = 0; j < n_modes; ++j) {
    for (int k = 0; k < n_modes; ++k) {
      total += coeff(j, k) * (mom.n(j, k) + std::conj(mom.alpha(j)) * mom.alpha(k));
    }
  }
  return total;
}

}  // namespace

double expectation(const QuadraticObservable& obs, const GaussianState& state) {
  check_dims(obs, state, "expectation");
  if (!obs.is_hermitian(tol::kAlgebra)) {
    throw InvalidArgument("expectation: coefficient matrix is not Hermitian");
  }
  const Complex value = general_expectation(obs.coeff, ComplexMoments::from_state(state));
  if (std::abs(value.imag()) > tol::kMeanImag * std::max(1.0, std::abs(value.real()))) {
    throw Error("expectation: non-real value on a supposedly physical state");
  }
  return value.real() + obs.offset;
}

Complex quantum_covariance(const QuadraticObservable& obs1,
                           const QuadraticObservable& obs2,
                           const GaussianState& state) {
  check_dims(obs1, state, "covariance");
  check_dims(obs2, state, "covariance");
  const ComplexMoments mom = ComplexMoments::from_state(state);
  const Eigen::MatrixXcd& a = obs1.coeff;
  const Eigen::MatrixXcd& b = obs2.coeff;
  const Eigen::VectorXcd ac = mom.alpha.conjugate();
  const Eigen::VectorXcd& al = mom.alpha;
  const Eigen::MatrixXcd& n = mom.n;
  const Eigen::MatrixXcd& m = mom.m;
  const Eigen::MatrixXcd mc = m.conjugate();

  // Wick expansion of <O1 O2> - <O1><O2> over the complex mode moments.
  Complex total = 0.0;
  total += (ac.transpose() * a * m * b.transpose() * ac).value();
  total += (ac.transpose() * a * n.transpose() * b * al).value();
  total += (ac.transpose() * a * b * al).value();
  total += (al.transpose() * a.transpose() * n * b.transpose() * ac).value();
  total += (al.transpose() * a.transpose() * mc * b * al).value();
  total += (mc * a * m * b.transpose()).trace();
  total += (a.cwiseProduct(n * b.transpose() * n)).sum();
  total += ((a * b).cwiseProduct(n)).sum();
  return total;
}

double covariance(const QuadraticObservable& obs1, const QuadraticObservable& obs2,
                  const GaussianState& state) {
  return quantum_covariance(obs1, obs2, state).real();
}

double variance(const QuadraticObservable& obs, const GaussianState& state) {
  return covariance(obs, obs, state);
}

double SqueezeParams::mu() const { return std::cosh(r / 2.0); }
Complex SqueezeParams::nu() const {
  return std::sinh(r / 2.0) * std::polar(1.0, theta);
}

double BrightnessParams::v0() const { return std::sqrt(n); }
double BrightnessParams::w() const { return std::sqrt(m / 2.0); }

StokesVariances closed_form_variances(const BrightnessParams& p, double r) {
  const double n = p.n;
  const double m = p.m;
  const double ch2 = std::cosh(2.0 * r);
  const double ch4 = std::cosh(4.0 * r);
  const double sh2 = std::sinh(2.0 * r);
  StokesVariances v;
  v.v01 = (4.0 * n + 8.0 * m - 3.0 + 2.0 * (1.0 + 2.0 * n) * ch2 + ch4 -
           4.0 * n * sh2) /
          16.0;
  v.v2 = (2.0 * n + m + (1.0 + m) * ch2 - 1.0 - m * sh2) / 4.0;
  v.v3 = (2.0 * n + m + (1.0 + m) * ch2 - 1.0 + m * sh2) / 4.0;
  return v;
}

ClosedFormMeans closed_form_means(Arm arm, const BrightnessParams& p,
                                  const SqueezeParams& sq, double arg_w,
                                  double arg_v0) {
  (void)arm;  // both arms share the printed form when w1 = w2
  const double w = p.w();
  const double v0 = p.v0();
  const Complex mu_nu = sq.mu() * sq.nu();
  const double printed_term = 2.0 * mu_nu.real();
  const double consistent_term = 2.0 * std::norm(mu_nu);

  ClosedFormMeans out;
  const double s2 = -std::sqrt(2.0) * w * v0 * std::cos(arg_w - arg_v0);
  const double s3 = std::sqrt(2.0) * w * v0 * std::sin(arg_w - arg_v0);
  out.printed = {w * w + v0 * v0 / 2.0 + printed_term,
                 w * w - v0 * v0 / 2.0 - printed_term, s2, s3};
  out.moment_consistent = {w * w + v0 * v0 / 2.0 + consistent_term,
                           w * w - v0 * v0 / 2.0 - consistent_term, s2, s3};
  out.discrepancy = std::abs(printed_term - consistent_term);
  out.flagged = out.discrepancy > tol::kViolationMargin;
  return out;
}

}  // namespace stokesim
