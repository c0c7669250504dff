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

#include "stokesim/criteria.hpp"

#include <cmath>
#include <sstream>

#include "stokesim/errors.hpp"
#include "stokesim/tolerances.hpp"

namespace stokesim {

namespace {

void check_spec(const CriterionSpec& spec) {
  const bool valid_sigma = spec.sigma >= 1 && spec.sigma <= 3;
  const bool valid_rho = spec.rho >= 1 && spec.rho <= 3;
  if (!valid_sigma || !valid_rho || spec.sigma == spec.rho) {
    throw InvalidArgument("criterion indices must be distinct and in {1,2,3}");
  }
}

QuadraticObservable combine(const QuadraticObservable& lhs,
                            const QuadraticObservable& rhs, double sign) {
  QuadraticObservable out;
  out.coeff = lhs.coeff + sign * rhs.coeff;
  out.offset = lhs.offset + sign * rhs.offset;
  return out;
}

}  // namespace

CriterionResult duan_simon(const GaussianState& state, const CriterionSpec& spec) {
  check_spec(spec);

  const QuadraticObservable sigma_a = stokes(spec.arm_a, spec.sigma);
  const QuadraticObservable sigma_b = stokes(spec.arm_b, spec.sigma);
  const QuadraticObservable rho_a = stokes(spec.arm_a, spec.rho);
  const QuadraticObservable rho_b = stokes(spec.arm_b, spec.rho);

  CriterionResult result;
  result.spec = spec;
  result.alpha_arm_a = quantum_covariance(sigma_a, rho_a, state);
  result.alpha_arm_b = quantum_covariance(sigma_b, rho_b, state);

  const double scale =
      std::max({1.0, std::abs(result.alpha_arm_a), std::abs(result.alpha_arm_b)});
  if (std::abs(result.alpha_arm_a - result.alpha_arm_b) > tol::kArmMatch * scale) {
    std::ostringstream msg;
    msg << "arm normalizations differ: alpha_a = (" << result.alpha_arm_a.real()
        << ", " << result.alpha_arm_a.imag() << "), alpha_b = ("
        << result.alpha_arm_b.real() << ", " << result.alpha_arm_b.imag() << ")";
    throw AsymmetricNormalization(msg.str(), result.alpha_arm_a,
                                  result.alpha_arm_b);
  }

  result.alpha = std::abs(result.alpha_arm_a);
  if (result.alpha < tol::kDegenerateAlpha) {
    throw DegenerateNormalization(
        "criterion normalization |alpha| is numerically zero",
        result.alpha_arm_a);
  }

  result.var_sum_sigma = variance(combine(sigma_a, sigma_b, +1.0), state);
  result.var_diff_rho = variance(combine(rho_a, rho_b, -1.0), state);
  result.value =
      (result.var_sum_sigma + result.var_diff_rho) / (4.0 * result.alpha);
  result.violated = result.value < 1.0 - tol::kViolationMargin;
  return result;
}

double bright_limit(double r) { return std::exp(-r) * std::cosh(r); }

double equal_intensity_value(double n, double r) {
  if (n <= 0.0) {
    throw InvalidArgument("equal_intensity_value: n must be positive");
  }
  const double ch2 = std::cosh(2.0 * r);
  const double ch4 = std::cosh(4.0 * r);
  const double sh2 = std::sinh(2.0 * r);
  return (12.0 * n + 2.0 * (1.0 + 2.0 * n) * ch2 + ch4 - 3.0 - 4.0 * n * sh2) /
         (16.0 * n);
}

std::vector<CriterionResult> scan_combinations(
    const std::array<MeasuredState, 4>& networks) {
  std::vector<CriterionResult> rows;
  rows.reserve(12);
  for (const auto& [sigma, rho] : kSigmaRhoPairs) {
    for (const MeasuredState& net : networks) {
      CriterionSpec spec{sigma, rho, net.arm_a, net.arm_b};
      rows.push_back(duan_simon(net.state, spec));
    }
  }
  return rows;
}

}  // namespace stokesim
