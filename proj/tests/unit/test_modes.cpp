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
#include "stokesim/gaussian.hpp"
#include "stokesim/modes.hpp"

using namespace stokesim;

TEST_CASE("mode indices follow the fixed ordering") {
  CHECK(mode_index(mode::x10) == 0);
  CHECK(mode_index(mode::y10) == 1);
  CHECK(mode_index(mode::x01) == 2);
  CHECK(mode_index(mode::y01) == 3);
}

TEST_CASE("label/index map is a bijection") {
  for (int k = 0; k < kNumModes; ++k) {
    CHECK(mode_index(label_from_index(k)) == k);
  }
  CHECK_THROWS_AS(label_from_index(4), InvalidArgument);
  CHECK_THROWS_AS(label_from_index(-1), InvalidArgument);
}

TEST_CASE("labels serialize to the fixed strings") {
  CHECK(to_string(mode::x10) == "x10");
  CHECK(to_string(mode::y10) == "y10");
  CHECK(to_string(mode::x01) == "x01");
  CHECK(to_string(mode::y01) == "y01");
  for (const ModeLabel& label : all_modes()) {
    CHECK(parse_mode_label(to_string(label)) == label);
  }
  CHECK_THROWS_AS(parse_mode_label("z10"), InvalidArgument);
}

TEST_CASE("cylindrical coefficient vectors") {
  const double s = 1.0 / std::sqrt(2.0);
  const Eigen::Vector4cd az = cylindrical_coefficients(CylFamily::azimuthal());
  CHECK(az(0) == Complex(0.0, 0.0));
  CHECK(az(1).real() == doctest::Approx(s).epsilon(1e-15));
  CHECK(az(2).real() == doctest::Approx(-s).epsilon(1e-15));
  CHECK(az(3) == Complex(0.0, 0.0));

  const Eigen::Vector4cd rad = cylindrical_coefficients(CylFamily::radial());
  CHECK(rad(0).real() == doctest::Approx(s).epsilon(1e-15));
  CHECK(rad(1) == Complex(0.0, 0.0));
  CHECK(rad(2) == Complex(0.0, 0.0));
  CHECK(rad(3).real() == doctest::Approx(s).epsilon(1e-15));
}

TEST_CASE("families are unit norm and mutually orthogonal") {
  const Eigen::Vector4cd az = cylindrical_coefficients(CylFamily::azimuthal());
  const Eigen::Vector4cd rad = cylindrical_coefficients(CylFamily::radial());
  // |c| = 1 keeps [a_F, a_F^dag] = 1.
  CHECK(std::abs(az.squaredNorm() - 1.0) < 1e-15);
  CHECK(std::abs(rad.squaredNorm() - 1.0) < 1e-15);
  CHECK(std::abs(az.dot(rad)) < 1e-15);
}

TEST_CASE("family round trips through strings") {
  CHECK(parse_cyl_kind("azimuthal") == CylKind::Azimuthal);
  CHECK(parse_cyl_kind("radial") == CylKind::Radial);
  CHECK(to_string(CylKind::Azimuthal) == "azimuthal");
  CHECK_THROWS_AS(parse_cyl_kind("linear"), InvalidArgument);
}
