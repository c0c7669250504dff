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

#ifndef STOKESIM_ERRORS_HPP
#define STOKESIM_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace stokesim {

/// Base class for all stokesim errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on an argument was violated (bad mode index, eta outside
/// [0,1], dimension mismatch, ...).
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// The criterion normalization |alpha| is numerically zero, so the
/// normalized two-variance sum is undefined.
class DegenerateNormalization : public Error {
 public:
  DegenerateNormalization(const std::string& what, std::complex<double> alpha)
      : Error(what), alpha_(alpha) {}
  std::complex<double> alpha() const { return alpha_; }

 private:
  std::complex<double> alpha_;
};

/// The two arms report different normalization covariances.
class AsymmetricNormalization : public Error {
 public:
  AsymmetricNormalization(const std::string& what, std::complex<double> alpha_a,
                          std::complex<double> alpha_b)
      : Error(what), alpha_a_(alpha_a), alpha_b_(alpha_b) {}
  std::complex<double> alpha_a() const { return alpha_a_; }
  std::complex<double> alpha_b() const { return alpha_b_; }

 private:
  std::complex<double> alpha_a_;
  std::complex<double> alpha_b_;
};

/// Fock-space truncation lost too much norm for the comparison to be trusted.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, double leakage)
      : Error(what), leakage_(leakage) {}
  double leakage() const { return leakage_; }

 private:
  double leakage_;
};

/// Scenario or observable file could not be parsed.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace stokesim

#endif  // STOKESIM_ERRORS_HPP
