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

#include "stirup/quantum/types.hpp"

namespace stirup::quantum {

/// |<a|b>|^2.
double fidelity_pure(const StateVector &a, const StateVector &b);

/// <target|rho|target>.
double fidelity_mixed(const StateVector &target, const DensityMatrix &rho);

/// Fidelity of the final trajectory state against the target.
double transfer_efficiency(const PureTrajectory &traj, const StateVector &target);

/// Max over grid nodes of the pure-state trace distance sqrt(1 - |<a|b>|^2).
double max_state_distance(const PureTrajectory &a, const PureTrajectory &b);

double population(const StateVector &state, int level);
double population(const DensityMatrix &state, int level);

} // namespace stirup::quantum
