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

#ifndef STOKESIM_MODES_HPP
#define STOKESIM_MODES_HPP

#include <array>
#include <complex>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace stokesim {

/// Linear polarization of a transverse mode.
enum class Polarization { X, Y };

/// First-order Hermite-Gauss spatial profile.
enum class SpatialMode { HG10, HG01 };

/// One of the four basis modes {x10, y10, x01, y01}.
///
/// The global mode ordering is fixed once and for all:
///   0 = x10, 1 = y10, 2 = x01, 3 = y01.
struct ModeLabel {
  Polarization pol;
  SpatialMode spatial;

  bool operator==(const ModeLabel&) const = default;
};

inline constexpr int kNumModes = 4;

namespace mode {
inline constexpr ModeLabel x10{Polarization::X, SpatialMode::HG10};
inline constexpr ModeLabel y10{Polarization::Y, SpatialMode::HG10};
inline constexpr ModeLabel x01{Polarization::X, SpatialMode::HG01};
inline constexpr ModeLabel y01{Polarization::Y, SpatialMode::HG01};
}  // namespace mode

/// The four labels in index order.
const std::array<ModeLabel, kNumModes>& all_modes();

/// Fixed label -> index bijection onto {0,1,2,3}.
int mode_index(ModeLabel label);

/// Inverse of mode_index.
ModeLabel label_from_index(int index);

/// Serialized form: "x10", "y10", "x01", "y01".
std::string to_string(ModeLabel label);
ModeLabel parse_mode_label(const std::string& text);

/// Cylindrically polarized superposition family.
enum class CylKind { Azimuthal, Radial };

/// A cylindrical mode as a signed two-mode superposition of basis modes.
///
/// Azimuthal: (-x01 + y10)/sqrt(2).  Radial: (y01 + x10)/sqrt(2).
/// The 1/sqrt(2) normalization keeps the superposition-mode commutator
/// canonical, [a_F, a_F^dag] = 1.
struct CylFamily {
  CylKind kind;
  std::pair<ModeLabel, ModeLabel> pair;
  std::pair<double, double> signs;

  static CylFamily azimuthal();
  static CylFamily radial();
};

CylFamily family_from_kind(CylKind kind);
std::string to_string(CylKind kind);
CylKind parse_cyl_kind(const std::string& text);

/// Length-4 coefficient vector c with a_family = sum_k c_k a_k, |c| = 1.
Eigen::Vector4cd cylindrical_coefficients(const CylFamily& family);

}  // namespace stokesim

#endif  // STOKESIM_MODES_HPP
