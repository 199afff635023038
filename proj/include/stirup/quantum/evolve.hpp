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

#include <span>

#include "stirup/quantum/types.hpp"

namespace stirup::quantum {

/// Default step count per protocol duration.
inline constexpr int kDefaultSteps = 4000;

/// Integrates psi' = -i H(t) psi with classical fixed-step RK4.
///
/// Every sampled H(t) is checked for Hermiticity; a violation raises
/// DomainError naming the offending time. The norm is never renormalized.
PureTrajectory evolve_schrodinger(const HamiltonianFn &H, const StateVector &psi0,
                                  const TimeGrid &grid);

/// Integrates rho' = i[rho, H] + sum_k rate_k/2 L(A_k) rho with fixed-step RK4.
MixedTrajectory evolve_lindblad(const HamiltonianFn &H, std::span<const CollapseChannel> channels,
                                const DensityMatrix &rho0, const TimeGrid &grid);

/// Largest | ||psi(t)|| - 1 | along a trajectory.
double max_norm_drift(const PureTrajectory &traj);

/// Largest | Tr rho(t) - 1 | along a trajectory.
double max_trace_drift(const MixedTrajectory &traj);

} // namespace stirup::quantum
