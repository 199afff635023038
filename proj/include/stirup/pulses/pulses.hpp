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

#include <string>
#include <vector>

#include "stirup/passage/passage.hpp"
#include "stirup/pulses/control_pulses.hpp"
#include "stirup/quantum/types.hpp"

namespace stirup::pulses {

/// Exact driving fields h_{mN}(t) that make the passage a solution of the
/// Schrodinger equation: h = gamma' u - cot(gamma) u', u = a_m / cos(gamma).
///
/// The cot(gamma) chi_i' products are taken from the default-ansatz identity
/// when the passage carries rate weights; otherwise they are computed directly
/// and, where |sin gamma| < 1e-6, by the limit chi_i'' / gamma'. A vanishing
/// gamma with a non-vanishing chi rate raises DivergenceError.
std::vector<double> engineered_fields(const passage::Passage &passage, double t);

/// Samples engineered_fields on a dense grid.
ControlPulses inverse_engineer(const passage::Passage &passage, int nodes = kDefaultNodes);

/// H(t) = scale * sum_m h_mN(t) sigma_x^m + detuning * sum_{m<N} |m><m|.
quantum::HamiltonianFn hamiltonian(const ControlPulses &pulses, double scale = 1.0,
                                   double detuning = 0.0);

/// Star-graph (N-pod) matrix for fixed field values.
quantum::Matrix star_matrix(std::span<const double> fields);

/// Dark state cos(theta)|1> - sin(theta)|2> with tan(theta) = h13 / h23 (N = 3 only).
quantum::StateVector dark_state(const ControlPulses &pulses, double t);

/// h13 = Omega0 sin(pi t / 2T), h23 = Omega0 cos(pi t / 2T).
ControlPulses stirap_baseline(double omega0, double duration);

/// Two sequential resonant pulses of area pi/2: h13 on [0, T/2), then h23 on [T/2, T].
ControlPulses rr_baseline(double duration);

/// Shortest duration for which the three-level default-ansatz pulses stay
/// within max |h_mN| <= Omega0 (bisection, relative tolerance 1e-4).
double minimum_time(double omega0, double q = 0.0);

enum class ProtocolKind { kStirup, kStirap, kResonantRabi };

struct Protocol {
    ProtocolKind kind = ProtocolKind::kStirup;
    double q = 0.0; ///< STIRUP only
};

std::string to_string(ProtocolKind kind);
ProtocolKind protocol_from_string(const std::string &name);

/// Three-level transfer |1> -> |2> pulses for any protocol.
ControlPulses three_level_pulses(const Protocol &protocol, double omega0, double duration);

} // namespace stirup::pulses
