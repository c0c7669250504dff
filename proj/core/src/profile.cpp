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

#include "stokesim/profile.hpp"

#include <cmath>
#include <cstdio>

#include "stokesim/errors.hpp"

namespace stokesim {

namespace {

constexpr int kArrowBlock = 16;        // one arrow per 16x16 pixel block
constexpr double kArrowThreshold = 0.1;  // of peak intensity

void check_grid(const GridSpec& grid) {
  if (grid.samples < 16) {
    throw InvalidArgument("grid needs at least 16 samples per axis");
  }
  if (grid.half_width <= 0.0) {
    throw InvalidArgument("grid half_width must be positive");
  }
}

}  // namespace

double GridSpec::coord(int i) const {
  return (i - samples / 2) * (2.0 * half_width / samples);
}

double ProfileImage::at(int iy, int ix) const {
  return intensity[static_cast<std::size_t>(iy) *
                       static_cast<std::size_t>(grid.samples) +
                   static_cast<std::size_t>(ix)];
}

double hg_amplitude(SpatialMode which, double x, double y, double waist) {
  if (waist <= 0.0) {
    throw InvalidArgument("hg_amplitude: waist must be positive");
  }
  const double norm = 2.0 / (waist * std::sqrt(M_PI));
  const double odd = which == SpatialMode::HG10 ? x : y;
  return norm * (std::sqrt(2.0) * odd / waist) *
         std::exp(-(x * x + y * y) / (waist * waist));
}

ProfileImage render(const CylFamily& family, const GridSpec& grid, double waist) {
  check_grid(grid);
  if (waist <= 0.0) {
    throw InvalidArgument("render: waist must be positive");
  }

  ProfileImage image;
  image.grid = grid;
  image.intensity.assign(
      static_cast<std::size_t>(grid.samples) * static_cast<std::size_t>(grid.samples),
      0.0);

  double peak = 0.0;
  for (int iy = 0; iy < grid.samples; ++iy) {
    const double y = grid.coord(iy);
    for (int ix = 0; ix < grid.samples; ++ix) {
      const double x = grid.coord(ix);
      const double u10 = hg_amplitude(SpatialMode::HG10, x, y, waist);
      const double u01 = hg_amplitude(SpatialMode::HG01, x, y, waist);
      // Both families superpose the two profiles with equal weight, so the
      // intensity is the same donut for either.
      const double value = 0.5 * (u10 * u10 + u01 * u01);
      image.intensity[static_cast<std::size_t>(iy) *
                          static_cast<std::size_t>(grid.samples) +
                      static_cast<std::size_t>(ix)] = value;
      peak = std::max(peak, value);
    }
  }
  for (double& v : image.intensity) v /= peak;

  for (int by = kArrowBlock / 2; by < grid.samples; by += kArrowBlock) {
    for (int bx = kArrowBlock / 2; bx < grid.samples; bx += kArrowBlock) {
      if (image.at(by, bx) < kArrowThreshold) continue;
      const double x = grid.coord(bx);
      const double y = grid.coord(by);
      const double rho = std::hypot(x, y);
      if (rho == 0.0) continue;
      Arrow arrow;
      arrow.x = x;
      arrow.y = y;
      if (family.kind == CylKind::Azimuthal) {
        arrow.dx = -y / rho;
        arrow.dy = x / rho;
      } else {
        arrow.dx = x / rho;
        arrow.dy = y / rho;
      }
      image.arrows.push_back(arrow);
    }
  }
  return image;
}

void write_pgm(const ProfileImage& image, std::ostream& out) {
  const int n = image.grid.samples;
  out << "P2\n" << n << " " << n << "\n65535\n";
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const long value = std::lround(image.at(iy, ix) * 65535.0);
      out << value << (ix + 1 == n ? '\n' : ' ');
    }
  }
}

void write_intensity_csv(const ProfileImage& image, std::ostream& out) {
  char buf[32];
  const int n = image.grid.samples;
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      std::snprintf(buf, sizeof(buf), "%.9g", image.at(iy, ix));
      out << buf << (ix + 1 == n ? '\n' : ',');
    }
  }
}

void write_arrows_csv(const ProfileImage& image, std::ostream& out) {
  char buf[128];
  out << "x,y,dx,dy\n";
  for (const Arrow& arrow : image.arrows) {
    std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g,%.9g\n", arrow.x, arrow.y,
                  arrow.dx, arrow.dy);
    out << buf;
  }
}

}  // namespace stokesim
