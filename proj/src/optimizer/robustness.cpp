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


#include "stirup/optimizer/robustness.hpp"

#include <algorithm>
#include <cmath>

#include "stirup/errors.hpp"
#include "stirup/quantum/metrics.hpp"

namespace stirup::optimizer {

std::vector<quantum::CollapseChannel> bare_channels(int levels, double gamma1, double gamma2) {
    if (levels < 3) {
        throw DimensionError("bare channels need at least 3 levels");
    }
    std::vector<quantum::CollapseChannel> channels;
    if (gamma1 != 0.0) {
        quantum::Matrix lower = quantum::Matrix::Zero(levels, levels);
        for (int m = 0; m < levels - 1; ++m) {
            lower(m, levels - 1) = 1.0;
        }
        channels.emplace_back(lower, gamma1);
    }
    if (gamma2 != 0.0) {
        quantum::Matrix proj = quantum::Matrix::Zero(levels, levels);
        for (int m = 1; m < levels; ++m) {
            proj(m, m) = 1.0;
        }
        channels.emplace_back(proj, gamma2);
    }
    return channels;
}

quantum::HamiltonianFn perturbed_hamiltonian(const pulses::ControlPulses &pulses,
                                             const Perturbation &perturbation) {
    return pulses::hamiltonian(pulses, 1.0 + perturbation.eta,
                               perturbation.zeta * pulses.max_amplitude());
}

double perturbed_fidelity(const pulses::ControlPulses &pulses, const quantum::StateVector &target,
                          const Perturbation &perturbation, int steps) {
    const int n = pulses.levels();
    if (target.dim() != n) {
        throw DimensionError("target dimension does not match the pulses");
    }
    const auto H = perturbed_hamiltonian(pulses, perturbation);
    const quantum::TimeGrid grid(0.0, pulses.duration(), steps);
    const auto psi0 = quantum::StateVector::basis(n, 0);
    if (perturbation.gamma1 == 0.0 && perturbation.gamma2 == 0.0) {
        return quantum::transfer_efficiency(quantum::evolve_schrodinger(H, psi0, grid), target);
    }
    const auto channels = bare_channels(n, perturbation.gamma1, perturbation.gamma2);
    const auto traj =
        quantum::evolve_lindblad(H, channels, quantum::DensityMatrix::from_pure(psi0), grid);
    return quantum::fidelity_mixed(target, traj.final_state());
}

void ObjectiveSpec::validate() const {
    const double weights[] = {infidelity_weight, eta_weight, zeta_weight, population_weight};
    bool any = false;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw DomainError("objective weights must be finite and non-negative");
        }
        any = any || w > 0.0;
    }
    if (!any) {
        throw DomainError("objective weights are all zero");
    }
    if (gamma1 < 0.0 || gamma2 < 0.0) {
        throw DomainError("objective rates must be non-negative");
    }
    if (eta_weight > 0.0 && eta_grid.empty()) {
        throw DomainError("eta grid is empty but weighted");
    }
    if (zeta_weight > 0.0 && zeta_grid.empty()) {
        throw DomainError("zeta grid is empty but weighted");
    }
    if (steps < 1) {
        throw DomainError("objective steps must be positive");
    }
}

double robustness_score(const pulses::ControlPulses &pulses, const ObjectiveSpec &objective,
                        const quantum::StateVector &target) {
    objective.validate();
    const Perturbation open{0.0, 0.0, objective.gamma1, objective.gamma2};
    double score = 0.0;
    if (objective.infidelity_weight > 0.0) {
        score += objective.infidelity_weight *
                 (1.0 - perturbed_fidelity(pulses, target, open, objective.steps));
    }
    // Sorted before summing so the mean does not depend on grid order.
    auto grid_mean = [&](std::vector<double> grid, bool eta) {
        std::sort(grid.begin(), grid.end());
        double sum = 0.0;
        for (double v : grid) {
            Perturbation p = open;
            (eta ? p.eta : p.zeta) = v;
            sum += 1.0 - perturbed_fidelity(pulses, target, p, objective.steps);
        }
        return sum / static_cast<double>(grid.size());
    };
    if (objective.eta_weight > 0.0) {
        score += objective.eta_weight * grid_mean(objective.eta_grid, true);
    }
    if (objective.zeta_weight > 0.0) {
        score += objective.zeta_weight * grid_mean(objective.zeta_grid, false);
    }
    if (objective.population_weight > 0.0) {
        const int n = pulses.levels();
        const auto traj = quantum::evolve_schrodinger(
            pulses::hamiltonian(pulses), quantum::StateVector::basis(n, 0),
            quantum::TimeGrid(0.0, pulses.duration(), objective.steps));
        double p_max = 0.0;
        for (const auto &s : traj.states) {
            p_max = std::max(p_max, quantum::population(s, n - 1));
        }
        score += objective.population_weight * p_max;
    }
    return score;
}

} // namespace stirup::optimizer
