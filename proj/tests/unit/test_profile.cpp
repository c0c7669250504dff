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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stokesim/errors.hpp"
#include "stokesim/profile.hpp"

using namespace stokesim;

TEST_CASE("hg_amplitude is odd along its node line") {
  for (double y : {-1.0, 0.0, 0.7, 2.0}) {
    CHECK(hg_amplitude(SpatialMode::HG10, 0.0, y, 1.0) == doctest::Approx(0.0));
  }
  for (double x : {-2.0, 0.3, 1.5}) {
    CHECK(hg_amplitude(SpatialMode::HG01, x, 0.0, 1.0) == doctest::Approx(0.0));
  }
  CHECK(hg_amplitude(SpatialMode::HG10, 1.0, 0.5, 1.0) ==
        doctest::Approx(-hg_amplitude(SpatialMode::HG10, -1.0, 0.5, 1.0)));
  CHECK_THROWS_AS(hg_amplitude(SpatialMode::HG10, 0.0, 0.0, 0.0), InvalidArgument);
}

TEST_CASE("hg_amplitude is unit-normalized") {
  const int samples = 256;
  const double half = 4.0;
  const double dx = 2.0 * half / samples;
  double total10 = 0.0, total01 = 0.0;
  for (int i = 0; i < samples; ++i) {
    for (int j = 0; j < samples; ++j) {
      const double x = -half + (i + 0.5) * dx;
      const double y = -half + (j + 0.5) * dx;
      const double u10 = hg_amplitude(SpatialMode::HG10, x, y, 1.0);
      const double u01 = hg_amplitude(SpatialMode::HG01, x, y, 1.0);
      total10 += u10 * u10 * dx * dx;
      total01 += u01 * u01 * dx * dx;
    }
  }
  CHECK(total10 == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(total01 == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("rendered donut") {
  GridSpec grid;
  grid.samples = 256;
  grid.half_width = 4.0;
  const ProfileImage image = render(CylFamily::azimuthal(), grid);

  SUBCASE("center pixel is exactly dark") {
    const int c = grid.samples / 2;
    CHECK(grid.coord(c) == 0.0);
    CHECK(image.at(c, c) == 0.0);
  }
  SUBCASE("intensity is normalized to [0, 1]") {
    double peak = 0.0;
    for (double v : image.intensity) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
      peak = std::max(peak, v);
    }
    CHECK(peak == doctest::Approx(1.0));
  }
  SUBCASE("ring peaks at radius w/sqrt(2) within one grid cell") {
    const int c = grid.samples / 2;
    double best_r = 0.0, best_v = -1.0;
    for (int ix = c; ix < grid.samples; ++ix) {
      if (image.at(c, ix) > best_v) {
        best_v = image.at(c, ix);
        best_r = grid.coord(ix);
      }
    }
    const double cell = 2.0 * grid.half_width / grid.samples;
    CHECK(std::abs(best_r - 1.0 / std::sqrt(2.0)) <= cell);
  }
  SUBCASE("intensity is rotationally symmetric on exact-radius pairs") {
    const int c = grid.samples / 2;
    for (int k = 1; k < grid.samples / 2 - 1; ++k) {
      // (x, y) -> (y, x) and (x, y) -> (-x, -y) preserve the radius.
      CHECK(image.at(c + 3, c + k) == doctest::Approx(image.at(c + k, c + 3)).epsilon(1e-9));
      CHECK(image.at(c - 3, c - k) == doctest::Approx(image.at(c + 3, c + k)).epsilon(1e-9));
    }
  }
}

TEST_CASE("families share the intensity map but have orthogonal arrows") {
  GridSpec grid;
  grid.samples = 128;
  grid.half_width = 3.0;
  const ProfileImage az = render(CylFamily::azimuthal(), grid);
  const ProfileImage rad = render(CylFamily::radial(), grid);

  for (std::size_t k = 0; k < az.intensity.size(); ++k) {
    CHECK(az.intensity[k] == doctest::Approx(rad.intensity[k]).epsilon(1e-12));
  }

  REQUIRE(az.arrows.size() == rad.arrows.size());
  REQUIRE(az.arrows.size() > 8);
  for (std::size_t k = 0; k < az.arrows.size(); ++k) {
    const Arrow& a = az.arrows[k];
    const Arrow& r = rad.arrows[k];
    // Azimuthal arrows are tangential, radial arrows point outward.
    CHECK(std::abs(a.dx * a.x + a.dy * a.y) < 1e-9);
    CHECK(std::abs(r.dx * a.x + r.dy * a.y) ==
          doctest::Approx(std::hypot(a.x, a.y)).epsilon(1e-9));
    CHECK(std::abs(a.dx * r.dx + a.dy * r.dy) < 1e-9);
    CHECK(std::hypot(a.dx, a.dy) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("grid validation") {
  GridSpec grid;
  grid.samples = 8;
  CHECK_THROWS_AS(render(CylFamily::azimuthal(), grid), InvalidArgument);
  grid.samples = 64;
  grid.half_width = -1.0;
  CHECK_THROWS_AS(render(CylFamily::azimuthal(), grid), InvalidArgument);
}

TEST_CASE("PGM output is well-formed") {
  GridSpec grid;
  grid.samples = 32;
  grid.half_width = 3.0;
  const ProfileImage image = render(CylFamily::radial(), grid);
  std::ostringstream out;
  write_pgm(image, out);
  std::istringstream in(out.str());
  std::string magic;
  int w, h, maxval;
  in >> magic >> w >> h >> maxval;
  CHECK(magic == "P2");
  CHECK(w == 32);
  CHECK(h == 32);
  CHECK(maxval == 65535);
  long value;
  long count = 0, peak = 0;
  while (in >> value) {
    CHECK(value >= 0);
    CHECK(value <= 65535);
    peak = std::max(peak, value);
    ++count;
  }
  CHECK(count == 32 * 32);
  CHECK(peak == 65535);
}

TEST_CASE("CSV outputs") {
  GridSpec grid;
  grid.samples = 32;
  grid.half_width = 3.0;
  const ProfileImage image = render(CylFamily::azimuthal(), grid);
  std::ostringstream intensity_stream, arrows_stream;
  write_intensity_csv(image, intensity_stream);
  write_arrows_csv(image, arrows_stream);
  const std::string intensity = intensity_stream.str();
  const std::string arrows = arrows_stream.str();
  CHECK(std::count(intensity.begin(), intensity.end(), '\n') == 32);
  CHECK(arrows.rfind("x,y,dx,dy\n", 0) == 0);
  CHECK(std::count(arrows.begin(), arrows.end(), '\n') ==
        static_cast<long>(image.arrows.size()) + 1);
}
