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

#include "stirup/quantum/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace stirup::quantum {
namespace {

void require_same_dim(int a, int b) {
    if (a != b) {
        throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " +
                             std::to_string(b));
    }
}

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

} // namespace

double fidelity_pure(const StateVector &a, const StateVector &b) {
    require_same_dim(a.dim(), b.dim());
    return clamp_unit(std::norm(a.amplitudes().dot(b.amplitudes())));
}

double fidelity_mixed(const StateVector &target, const DensityMatrix &rho) {
    require_same_dim(target.dim(), rho.dim());
    const Vector &v = target.amplitudes();
    const Complex f = v.dot(rho.entries() * v);
    return clamp_unit(f.real());
}

double transfer_efficiency(const PureTrajectory &traj, const StateVector &target) {
    return fidelity_pure(traj.final_state(), target);
}

double max_state_distance(const PureTrajectory &a, const PureTrajectory &b) {
    if (!(a.grid == b.grid) || a.states.size() != b.states.size()) {
        throw DimensionError("trajectories are not aligned on the same grid");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        const double overlap = fidelity_pure(a.states[i], b.states[i]);
        worst = std::max(worst, std::sqrt(std::max(0.0, 1.0 - overlap)));
    }
    return worst;
}

double population(const StateVector &state, int level) {
    if (level < 0 || level >= state.dim()) {
        throw DimensionError("level " + std::to_string(level) + " out of range");
    }
    return std::norm(state[level]);
}

double population(const DensityMatrix &state, int level) {
    if (level < 0 || level >= state.dim()) {
        throw DimensionError("level " + std::to_string(level) + " out of range");
    }
    return state(level, level).real();
}

} // namespace stirup::quantum
