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

namespace stirup::circuit {

/// Location and value of the first maximum of J1.
inline constexpr double kJ1ArgMax = 1.8411837813406593;
inline constexpr double kJ1Max = 0.5818652242815965;

/// Largest accepted coupling ratio g_eff / g_bare; ratios between kJ1Max and this
/// ceiling map to the branch endpoint.
inline constexpr double kCouplingCeiling = 0.5819;

/// First-kind Bessel function J1 by its power series (40 terms), |x| <= 10.
double bessel_j1(double x);

/// dJ1/dx = J0(x) - J1(x)/x, from the same series family.
double bessel_j1_derivative(double x);

/// Smallest eps >= 0 on the monotone branch with g_bare J1(eps) = g_eff (bisection).
double invert_coupling(double g_eff, double g_bare);

} // namespace stirup::circuit
