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

#ifndef STOKESIM_PROFILE_HPP
#define STOKESIM_PROFILE_HPP

#include <ostream>
#include <vector>

#include "stokesim/modes.hpp"

namespace stokesim {

/// Square sampling grid in units of the beam waist.  Sample i sits at
/// (i - samples/2) * (2*half_width/samples), so the origin is always a grid
/// point.
struct GridSpec {
  double half_width = 4.0;
  int samples = 256;

  double coord(int i) const;
};

struct Arrow {
  double x, y;   // position
  double dx, dy; // unit polarization direction
};

/// Transverse intensity map (normalized to peak 1) plus a decimated field of
/// local polarization directions.
struct ProfileImage {
  GridSpec grid;
  std::vector<double> intensity;  // row-major, row = y index, col = x index
  std::vector<Arrow> arrows;

  double at(int iy, int ix) const;
};

/// Normalized first-order Hermite-Gauss mode function; HG10 is odd in x,
/// HG01 odd in y.  Integral of |u|^2 over the plane is 1.
double hg_amplitude(SpatialMode which, double x, double y, double waist);

/// Renders the donut intensity profile and the tangential (azimuthal) or
/// outward-pointing (radial) polarization arrows.
ProfileImage render(const CylFamily& family, const GridSpec& grid,
                    double waist = 1.0);

/// Plain PGM (P2, maxval 65535) of the intensity map.
void write_pgm(const ProfileImage& image, std::ostream& out);
/// Intensity as CSV rows, and arrows as "x,y,dx,dy" rows.
void write_intensity_csv(const ProfileImage& image, std::ostream& out);
void write_arrows_csv(const ProfileImage& image, std::ostream& out);

}  // namespace stokesim

#endif  // STOKESIM_PROFILE_HPP
