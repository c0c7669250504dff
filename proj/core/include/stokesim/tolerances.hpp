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

#ifndef STOKESIM_TOLERANCES_HPP
#define STOKESIM_TOLERANCES_HPP

namespace stokesim::tol {

// All numeric tolerances live here so they are pinned in one place.
inline constexpr double kAlgebra = 1e-12;        // exact linear-algebra identities
inline constexpr double kEigen = 1e-10;          // physicality eigenvalue floor
inline constexpr double kArmMatch = 1e-9;        // relative arm-a vs arm-b alpha match
inline constexpr double kDegenerateAlpha = 1e-12;// |alpha| below this is degenerate
inline constexpr double kViolationMargin = 1e-9; // strict-violation guard band
inline constexpr double kOracleDefault = 1e-3;   // Gaussian-vs-Fock agreement
inline constexpr double kLeakageMax = 1e-4;      // accepted truncation leakage
inline constexpr double kMeanImag = 1e-10;       // allowed imaginary residue of means

}  // namespace stokesim::tol

#endif  // STOKESIM_TOLERANCES_HPP
