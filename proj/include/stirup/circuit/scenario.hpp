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

#include "stirup/circuit/model.hpp"
#include "stirup/passage/passage.hpp"
#include "stirup/pulses/control_pulses.hpp"
#include "stirup/quantum/evolve.hpp"

namespace stirup::circuit {

/// Fraction of the hardware ceiling g J1max used by the pulse peak.
inline constexpr double kCouplingHeadroom = 0.9;

/// A resolved circuit protocol: transfer |initial> -> |target> in the N-pod.
struct Scenario {
    std::string name;
    CircuitModel model;
    SingleExcitationMap map;
    double duration = 0.0;                 ///< ns
    double omega0 = 0.0;                   ///< rad/ns
    std::vector<double> boundary_angles;
    quantum::StateVector initial;          ///< N-pod state
    quantum::StateVector target;           ///< N-pod state

    int levels() const { return map.levels(); }
    passage::Passage passage() const;
    pulses::ControlPulses couplings() const;
};

/// Names accepted by scenario().
const std::vector<std::string> &scenario_names();

/// Qubit count a named scenario needs.
int scenario_qubits(const std::string &name);

/// qst2, qst3: |e g..0> -> the last qubit, T = 82 ns (boundary angles pi/2);
/// bell: (|eg0> + |ge0>)/sqrt2, T = 90 ns; w: (|egg0> + |geg0> + |gge0>)/sqrt3, T = 98.5 ns.
/// Omega0 is sized so the peak coupling sits at kCouplingHeadroom of g J1max.
Scenario scenario(const std::string &name, const CircuitModel &model);

/// Largest Omega0 whose default-passage peak coupling stays at `peak` (bisection).
double size_omega0(int levels, std::span<const double> boundary_angles, double duration,
                   double peak);

struct ScenarioRun {
    double fidelity = 0.0;        ///< <target|rho(T)|target>
    double population_max = 0.0;  ///< max_t rho_NN(t), photon level
    double peak_coupling = 0.0;   ///< rad/ns
    double trace_drift = 0.0;
    quantum::MixedTrajectory trajectory;
};

/// Open-system simulation of the scenario on the extended space, with optional
/// Rabi error eta and detuning error zeta (delta = zeta * peak coupling).
ScenarioRun simulate_scenario(const Scenario &s, double eta = 0.0, double zeta = 0.0,
                              int steps = quantum::kDefaultSteps);

} // namespace stirup::circuit
