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

#include "stokesim/modes.hpp"

#include <cmath>

#include "stokesim/errors.hpp"

namespace stokesim {

const std::array<ModeLabel, kNumModes>& all_modes() {
  static const std::array<ModeLabel, kNumModes> table = {
      mode::x10, mode::y10, mode::x01, mode::y01};
  return table;
}

int mode_index(ModeLabel label) {
  const int spatial = label.spatial == SpatialMode::HG10 ? 0 : 1;
  const int pol = label.pol == Polarization::X ? 0 : 1;
  return 2 * spatial + pol;
}

ModeLabel label_from_index(int index) {
  if (index < 0 || index >= kNumModes) {
    throw InvalidArgument("mode index out of range: " + std::to_string(index));
  }
  return all_modes()[static_cast<std::size_t>(index)];
}

std::string to_string(ModeLabel label) {
  std::string s;
  s += label.pol == Polarization::X ? 'x' : 'y';
  s += label.spatial == SpatialMode::HG10 ? "10" : "01";
  return s;
}

ModeLabel parse_mode_label(const std::string& text) {
  for (const ModeLabel& label : all_modes()) {
    if (to_string(label) == text) return label;
  }
  throw InvalidArgument("unknown mode label: \"" + text + "\"");
}

CylFamily CylFamily::azimuthal() {
  return CylFamily{CylKind::Azimuthal, {mode::x01, mode::y10}, {-1.0, +1.0}};
}

CylFamily CylFamily::radial() {
  return CylFamily{CylKind::Radial, {mode::y01, mode::x10}, {+1.0, +1.0}};
}

CylFamily family_from_kind(CylKind kind) {
  return kind == CylKind::Azimuthal ? CylFamily::azimuthal()
                                    : CylFamily::radial();
}

std::string to_string(CylKind kind) {
  return kind == CylKind::Azimuthal ? "azimuthal" : "radial";
}

CylKind parse_cyl_kind(const std::string& text) {
  if (text == "azimuthal") return CylKind::Azimuthal;
  if (text == "radial") return CylKind::Radial;
  throw InvalidArgument("unknown cylindrical family: \"" + text + "\"");
}

Eigen::Vector4cd cylindrical_coefficients(const CylFamily& family) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd c = Eigen::Vector4cd::Zero();
  c(mode_index(family.pair.first)) = family.signs.first * inv_sqrt2;
  c(mode_index(family.pair.second)) = family.signs.second * inv_sqrt2;
  return c;
}

}  // namespace stokesim
