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


#include "stirup/harness/bench.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stirup/circuit/bessel.hpp"
#include "stirup/circuit/model.hpp"
#include "stirup/circuit/scenario.hpp"
#include "stirup/optimizer/q_search.hpp"
#include "stirup/quantum/evolve.hpp"
#include "stirup/quantum/metrics.hpp"

namespace stirup::harness::bench {

double robustness_omega0() {
    const auto model = circuit::CircuitModel::standard(2, 0.0);
    const std::vector<double> angles{std::numbers::pi / 2};
    return circuit::size_omega0(3, angles, kRobustnessDuration,
                                circuit::kCouplingHeadroom * model.g(0) * circuit::kJ1Max);
}

double dark_state_distance(double omega0, double duration, int steps) {
    const auto pulses = pulses::three_level_pulses({pulses::ProtocolKind::kStirup, 0.0}, omega0,
                                                   duration);
    const quantum::TimeGrid grid(0.0, duration, steps);
    const auto traj = quantum::evolve_schrodinger(pulses::hamiltonian(pulses),
                                                  quantum::StateVector::basis(3, 0), grid);
    quantum::PureTrajectory dark{grid, {}};
    for (int i = 0; i <= steps; ++i) {
        dark.states.push_back(pulses::dark_state(pulses, grid.node(i)));
    }
    return quantum::max_state_distance(traj, dark);
}

double closed_population_max(const pulses::ControlPulses &pulses, int steps) {
    const int n = pulses.levels();
    const auto traj = quantum::evolve_schrodinger(
        pulses::hamiltonian(pulses), quantum::StateVector::basis(n, 0),
        quantum::TimeGrid(0.0, pulses.duration(), steps));
    double p = 0.0;
    for (const auto &s : traj.states) {
        p = std::max(p, quantum::population(s, n - 1));
    }
    return p;
}

double optimal_q(double omega0, double duration) {
    optimizer::QSearch search;
    search.omega0 = omega0;
    search.duration = duration;
    return optimizer::optimize_q(search).q;
}

double protocol_fidelity(const pulses::Protocol &protocol, double omega0, double duration,
                         const optimizer::Perturbation &perturbation, int steps) {
    const auto pulses = pulses::three_level_pulses(protocol, omega0, duration);
    return optimizer::perturbed_fidelity(pulses, quantum::StateVector::basis(3, 1), perturbation,
                                         steps);
}

} // namespace stirup::harness::bench
