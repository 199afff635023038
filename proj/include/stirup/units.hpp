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

#include <numbers>

namespace stirup::units {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Angular frequency in rad/ns for a frequency given in units of 2 pi x GHz, MHz or kHz.
constexpr double two_pi_ghz(double f) { return kTwoPi * f; }
constexpr double two_pi_mhz(double f) { return kTwoPi * f * 1e-3; }
constexpr double two_pi_khz(double f) { return kTwoPi * f * 1e-6; }

/// Decoherence unit Gamma = 2 pi x 5 kHz.
inline constexpr double kGammaUnit = two_pi_khz(5.0);

} // namespace stirup::units
