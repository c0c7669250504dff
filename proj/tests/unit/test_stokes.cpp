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

#include <doctest.h>

#include <cmath>

#include "stokesim/errors.hpp"
#include "stokesim/scenario.hpp"
#include "stokesim/stokes.hpp"

using namespace stokesim;

namespace {

// The polarization-symmetric network state for brightness (n, m) and
// squeezing r at angle zero.
MeasuredState pol_network(double n, double m, double r) {
  Scenario sc;
  sc.r = r;
  sc.v0 = std::sqrt(n);
  sc.network.m = m;
  return scenario_networks(sc)[0];
}

}  // namespace

TEST_CASE("stokes matrices follow the printed operator sets") {
  const ArmSpec pol_a = ArmSpec::standard(Arm::A, Dof::Pol);
  const QuadraticObservable s1 = stokes(pol_a, 1);
  CHECK(s1.coeff(0, 0) == Complex(1.0, 0.0));
  CHECK(s1.coeff(1, 1) == Complex(-1.0, 0.0));
  CHECK(s1.coeff(2, 2) == Complex(0.0, 0.0));

  const ArmSpec spa_b = ArmSpec::standard(Arm::B, Dof::Spa);
  const QuadraticObservable s2 = stokes(spa_b, 2);
  CHECK(s2.coeff(1, 3) == Complex(1.0, 0.0));
  CHECK(s2.coeff(3, 1) == Complex(1.0, 0.0));
  CHECK(s2.coeff(0, 0) == Complex(0.0, 0.0));

  const QuadraticObservable s3 = stokes(pol_a, 3);
  CHECK(s3.coeff(0, 1) == Complex(0.0, -1.0));
  CHECK(s3.coeff(1, 0) == Complex(0.0, 1.0));

  CHECK_THROWS_AS(stokes(pol_a, 4), InvalidArgument);
}

TEST_CASE("stokes matrices are Hermitian and obey the su(2) commutators") {
  for (Arm arm : {Arm::A, Arm::B}) {
    for (Dof dof : {Dof::Pol, Dof::Spa}) {
      const ArmSpec spec = ArmSpec::standard(arm, dof);
      std::array<Eigen::MatrixXcd, 4> s;
      for (int k = 0; k < 4; ++k) {
        const QuadraticObservable obs = stokes(spec, k);
        CHECK(obs.is_hermitian(1e-15));
        s[static_cast<std::size_t>(k)] = obs.coeff;
      }
      const Complex two_i(0.0, 2.0);
      CHECK((s[1] * s[2] - s[2] * s[1] - two_i * s[3]).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((s[2] * s[3] - s[3] * s[2] - two_i * s[1]).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((s[3] * s[1] - s[1] * s[3] - two_i * s[2]).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("stokes_by_key addresses the presets") {
  const QuadraticObservable obs = stokes_by_key("pol.a.S2");
  CHECK(obs.coeff(0, 1) == Complex(1.0, 0.0));
  CHECK_THROWS_AS(stokes_by_key("pol.a.S7"), InvalidArgument);
  CHECK_THROWS_AS(stokes_by_key("nonsense"), InvalidArgument);
}

TEST_CASE("expectations on simple states") {
  const ArmSpec pol_a = ArmSpec::standard(Arm::A, Dof::Pol);
  SUBCASE("vacuum carries no photons") {
    CHECK(expectation(stokes(pol_a, 0), vacuum(4)) == doctest::Approx(0.0));
  }
  SUBCASE("coherent |w|^2 = 2 in one mode") {
    const GaussianState st = displace(vacuum(4), 0, std::sqrt(2.0));
    CHECK(expectation(stokes(pol_a, 0), st) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(expectation(stokes(pol_a, 1), st) == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("network S2 mean matches -sqrt(2)|w||v0|") {
    const MeasuredState net = pol_network(1.0, 2.0, 0.0);  // w1 = v0 = 1
    CHECK(expectation(stokes(net.arm_a, 2), net.state) ==
          doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
  }
  SUBCASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(expectation(stokes(pol_a, 0), vacuum(2)), InvalidArgument);
  }
}

TEST_CASE("covariances on reference states") {
  const ArmSpec pol_a = ArmSpec::standard(Arm::A, Dof::Pol);
  SUBCASE("annihilators kill the vacuum") {
    CHECK(covariance(stokes(pol_a, 2), stokes(pol_a, 2), vacuum(4)) ==
          doctest::Approx(0.0));
  }
  SUBCASE("coherent beam with vacuum partner gives shot noise") {
    const GaussianState st = displace(vacuum(4), 0, 1.0);
    CHECK(variance(stokes(pol_a, 2), st) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("squeezed-only network: V(S2) = (cosh 2r - 1)/4") {
    const MeasuredState net = pol_network(0.0, 0.0, 1.0);
    CHECK(variance(stokes(net.arm_a, 2), net.state) ==
          doctest::Approx(0.690549).epsilon(1e-6));
    CHECK(variance(stokes(net.arm_a, 2), net.state) ==
          doctest::Approx(std::pow(std::sinh(1.0), 2) / 2.0).epsilon(1e-12));
  }
  SUBCASE("V(S3) - V(S2) = m sinh(2r)/2") {
    const MeasuredState net = pol_network(0.0, 2.0, 0.5);
    const double d = variance(stokes(net.arm_a, 3), net.state) -
                     variance(stokes(net.arm_a, 2), net.state);
    CHECK(d == doctest::Approx(std::sinh(1.0)).epsilon(1e-12));
  }
  SUBCASE("variances are nonnegative") {
    const MeasuredState net = pol_network(1.0, 3.0, 0.8);
    for (int k = 0; k < 4; ++k) {
      CHECK(variance(stokes(net.arm_a, k), net.state) >= -1e-10);
    }
  }
}

TEST_CASE("quantum covariance carries the commutator in its imaginary part") {
  // On a coherent state cov_sym(S2,S3) = 0 while (1/2)<[S2,S3]> = i<S1>.
  const GaussianState st = displace(vacuum(4), 0, 1.5);
  const ArmSpec pol_a = ArmSpec::standard(Arm::A, Dof::Pol);
  const Complex q = quantum_covariance(stokes(pol_a, 2), stokes(pol_a, 3), st);
  CHECK(q.real() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(q.imag() == doctest::Approx(expectation(stokes(pol_a, 1), st)).epsilon(1e-12));
}

TEST_CASE("squeeze parameter bookkeeping") {
  const SqueezeParams sq{0.8, 1.1};
  CHECK(sq.mu() * sq.mu() - std::norm(sq.nu()) == doctest::Approx(1.0).epsilon(1e-12));
  const BrightnessParams p{4.0, 8.0};
  CHECK(p.v0() == doctest::Approx(2.0));
  CHECK(p.w() == doctest::Approx(2.0));
}

TEST_CASE("closed-form variances") {
  SUBCASE("vacuum limit") {
    const StokesVariances v = closed_form_variances(BrightnessParams{0.0, 0.0}, 0.0);
    CHECK(v.v01 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(v.v2 == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(v.v3 == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("coherent point n=1, m=2, r=0") {
    const StokesVariances v = closed_form_variances(BrightnessParams{1.0, 2.0}, 0.0);
    CHECK(v.v01 == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(v.v2 == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(v.v3 == doctest::Approx(1.5).epsilon(1e-12));
  }
  SUBCASE("squeezed vacuum r=1") {
    const StokesVariances v = closed_form_variances(BrightnessParams{0.0, 0.0}, 1.0);
    CHECK(v.v2 == doctest::Approx(0.690549).epsilon(1e-6));
  }
}

TEST_CASE("closed-form variances equal the moment machinery on the network") {
  for (double n : {0.0, 1.0, 2.0, 5.0}) {
    for (double m : {0.0, 1.0, 2.0, 5.0}) {
      for (double r : {0.0, 0.3, 1.0}) {
        const MeasuredState net = pol_network(n, m, r);
        const StokesVariances cf = closed_form_variances(BrightnessParams{n, m}, r);
        CHECK(variance(stokes(net.arm_a, 0), net.state) ==
              doctest::Approx(cf.v01).epsilon(1e-9));
        CHECK(variance(stokes(net.arm_a, 1), net.state) ==
              doctest::Approx(cf.v01).epsilon(1e-9));
        CHECK(variance(stokes(net.arm_a, 2), net.state) ==
              doctest::Approx(cf.v2).epsilon(1e-9));
        CHECK(variance(stokes(net.arm_a, 3), net.state) ==
              doctest::Approx(cf.v3).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("arm a and arm b variances agree for equal coherent brightness") {
  const MeasuredState net = pol_network(1.0, 4.0, 0.6);
  for (int k = 0; k < 4; ++k) {
    CHECK(variance(stokes(net.arm_a, k), net.state) ==
          doctest::Approx(variance(stokes(net.arm_b, k), net.state)).epsilon(1e-12));
  }
}

TEST_CASE("closed-form means") {
  SUBCASE("dark state has zero means") {
    const ClosedFormMeans mm = closed_form_means(
        Arm::A, BrightnessParams{0.0, 0.0}, SqueezeParams{0.0, 0.0}, 0.0, 0.0);
    for (double v : mm.printed) CHECK(v == doctest::Approx(0.0));
    CHECK_FALSE(mm.flagged);
  }
  SUBCASE("w1 = v0 = 1 at r = 0") {
    const ClosedFormMeans mm = closed_form_means(
        Arm::A, BrightnessParams{1.0, 2.0}, SqueezeParams{0.0, 0.0}, 0.0, 0.0);
    CHECK(mm.printed[0] == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(mm.printed[2] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK(mm.printed[3] == doctest::Approx(0.0));
    CHECK_FALSE(mm.flagged);
  }
  SUBCASE("the printed photon-number term is flagged for r > 0") {
    const ClosedFormMeans mm = closed_form_means(
        Arm::A, BrightnessParams{1.0, 2.0}, SqueezeParams{0.3, 0.0}, 0.0, 0.0);
    CHECK(mm.flagged);
    CHECK(mm.discrepancy ==
          doctest::Approx(std::sinh(0.3) - std::pow(std::sinh(0.3), 2) / 2.0)
              .epsilon(1e-9));
    // The moment-consistent column matches the machinery.
    const MeasuredState net = pol_network(1.0, 2.0, 0.3);
    CHECK(expectation(stokes(net.arm_a, 0), net.state) ==
          doctest::Approx(mm.moment_consistent[0]).epsilon(1e-12));
    CHECK(expectation(stokes(net.arm_a, 1), net.state) ==
          doctest::Approx(mm.moment_consistent[1]).epsilon(1e-12));
  }
}
