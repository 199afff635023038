// Copyright 2026 The STIRUP Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace stirup {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand dimensions disagree (state vs. operator, grid vs. grid, ...).
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// An argument lies outside the documented domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Inverse-engineered fields blow up (cot(gamma) singularity not removable).
class DivergenceError : public Error {
  public:
    using Error::Error;
};

/// Numerical integration produced a non-finite or otherwise unusable result.
class SimulationError : public Error {
  public:
    using Error::Error;
};

} // namespace stirup
