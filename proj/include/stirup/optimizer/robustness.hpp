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

#include <iosfwd>
#include <vector>

#include "stirup/pulses/pulses.hpp"
#include "stirup/quantum/evolve.hpp"
#include "stirup/quantum/types.hpp"

namespace stirup::optimizer {

/// Bare N-pod channels: S- = sum_{m<N} |m><N| at rate gamma1 and
/// S+ = sum_{m>=2} |m><m| at rate gamma2 (zero-rate channels omitted).
std::vector<quantum::CollapseChannel> bare_channels(int levels, double gamma1, double gamma2);

/// Quasistatic imperfections: every envelope scaled by (1 + eta), every ground-like
/// level detuned by zeta times the pulse peak, plus bare decay and dephasing.
struct Perturbation {
    double eta = 0.0;
    double zeta = 0.0;
    double gamma1 = 0.0; ///< rad/ns
    double gamma2 = 0.0; ///< rad/ns
};

quantum::HamiltonianFn perturbed_hamiltonian(const pulses::ControlPulses &pulses,
                                             const Perturbation &perturbation);

/// Fidelity of the final state started from |1> against `target`. Uses the
/// Schrodinger equation when both rates vanish, the master equation otherwise.
double perturbed_fidelity(const pulses::ControlPulses &pulses, const quantum::StateVector &target,
                          const Perturbation &perturbation, int steps = quantum::kDefaultSteps);

struct ObjectiveSpec {
    double infidelity_weight = 0.0; ///< 1 - F with rates gamma1, gamma2
    double gamma1 = 0.0;            ///< rad/ns
    double gamma2 = 0.0;            ///< rad/ns
    double eta_weight = 0.0;
    std::vector<double> eta_grid;
    double zeta_weight = 0.0;
    std::vector<double> zeta_grid;
    double population_weight = 0.0; ///< max_t P_N(t), closed system
    int steps = quantum::kDefaultSteps;

    void validate() const;
};

/// Weighted sum of the objective's terms; grid terms are means of 1 - F with the
/// objective's rates applied. Lower is better.
double robustness_score(const pulses::ControlPulses &pulses, const ObjectiveSpec &objective,
                        const quantum::StateVector &target);

} // namespace stirup::optimizer
