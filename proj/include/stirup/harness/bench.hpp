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

#include "stirup/optimizer/robustness.hpp"
#include "stirup/pulses/pulses.hpp"

namespace stirup::harness::bench {

/// Duration of the decoherence and error comparisons (ns), equal for every protocol.
inline constexpr double kRobustnessDuration = 82.0;

/// Omega0 of the two-qubit transfer scenario, reused for the bare-model comparisons.
double robustness_omega0();

/// max_t of the trace distance between the simulated STIRUP state and the dark state
/// of its own pulses (three-level, Q = 0).
double dark_state_distance(double omega0, double duration, int steps);

/// max_t P_N(t) along the closed-system trajectory from |1>.
double closed_population_max(const pulses::ControlPulses &pulses, int steps);

/// Q minimizing the intermediate population at this duration (default search).
double optimal_q(double omega0, double duration);

/// Three-level |1> -> |2> fidelity of a protocol under the given perturbation.
double protocol_fidelity(const pulses::Protocol &protocol, double omega0, double duration,
                         const optimizer::Perturbation &perturbation, int steps);

} // namespace stirup::harness::bench
