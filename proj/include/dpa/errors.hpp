// Copyright 2026 The dpasim Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace dpa {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad call arguments: dimension mismatches, invalid cutoffs, wrong state kind.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// The requested parameters leave the validity region of the model
/// (e.g. 2J|d| >= delta_s, so the Bogoliubov frequency is imaginary).
class ParameterRegimeError : public Error {
 public:
  using Error::Error;
};

/// Integration or iteration failure. Carries the last time the solver
/// considered good, when applicable (NaN otherwise).
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg, double last_good_time = std::nan(""))
      : Error(msg), last_good_time_(last_good_time) {}
  double last_good_time() const { return last_good_time_; }

 private:
  double last_good_time_;
};

/// Squeezing parameter requested for a state with vanishing mean spin.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

/// Holstein-Primakoff closure left its validity region (nb >= N/2).
class HptValidityError : public Error {
 public:
  using Error::Error;
};

/// A run was refused because the estimated memory footprint is infeasible.
class MemoryRefusalError : public Error {
 public:
  MemoryRefusalError(const std::string& msg, long long dimension)
      : Error(msg), dimension_(dimension) {}
  long long dimension() const { return dimension_; }

 private:
  long long dimension_;
};

/// CLI / configuration usage error.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace dpa
