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


#include "stirup/circuit/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "stirup/circuit/bessel.hpp"
#include "stirup/errors.hpp"
#include "stirup/pulses/pulses.hpp"
#include "stirup/quantum/metrics.hpp"

namespace stirup::circuit {
namespace {

constexpr double kPi = std::numbers::pi;

quantum::StateVector real_state(const std::vector<double> &v) {
    quantum::Vector a(static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        a(static_cast<int>(i)) = v[i];
    }
    return quantum::StateVector(a);
}

double peak_for(int levels, std::span<const double> angles, double duration, double omega0) {
    const passage::AmplitudeSchedule omega(omega0, 0.0, duration);
    return pulses::inverse_engineer(passage::default_passage(levels, omega, angles))
        .max_amplitude();
}

} // namespace

passage::Passage Scenario::passage() const {
    const passage::AmplitudeSchedule omega(omega0, 0.0, duration);
    return passage::default_passage(levels(), omega, boundary_angles);
}

pulses::ControlPulses Scenario::couplings() const { return pulses::inverse_engineer(passage()); }

const std::vector<std::string> &scenario_names() {
    static const std::vector<std::string> names{"qst2", "qst3", "bell", "w"};
    return names;
}

int scenario_qubits(const std::string &name) {
    if (name == "qst2" || name == "bell") {
        return 2;
    }
    if (name == "qst3" || name == "w") {
        return 3;
    }
    throw DomainError("unknown scenario '" + name + "' (expected qst2, qst3, bell or w)");
}

double size_omega0(int levels, std::span<const double> boundary_angles, double duration,
                   double peak) {
    // Above the minimum-time point the peak grows monotonically with Omega0.
    double lo = 2.7 / duration;
    if (peak_for(levels, boundary_angles, duration, lo) > peak) {
        std::ostringstream msg;
        msg << "unreachable coupling: even the shortest admissible pulses at T = " << duration
            << " ns exceed the peak " << peak << " rad/ns";
        throw DomainError(msg.str());
    }
    double hi = 2.0 * lo;
    while (peak_for(levels, boundary_angles, duration, hi) <= peak) {
        lo = hi;
        hi *= 2.0;
    }
    while (hi - lo > 1e-12 * hi) {
        const double mid = 0.5 * (lo + hi);
        (peak_for(levels, boundary_angles, duration, mid) <= peak ? lo : hi) = mid;
    }
    return lo;
}

Scenario scenario(const std::string &name, const CircuitModel &model) {
    const int n_qubits = scenario_qubits(name);
    if (model.n_qubits() != n_qubits) {
        throw DimensionError("scenario '" + name + "' needs " + std::to_string(n_qubits) +
                             " qubits, the model has " + std::to_string(model.n_qubits()));
    }
    const int levels = n_qubits + 1;
    std::vector<double> target(levels, 0.0);
    std::vector<double> angles;
    double duration = 0.0;
    if (name == "qst2" || name == "qst3") {
        target[levels - 2] = 1.0;
        angles.assign(levels - 2, kPi / 2);
        duration = 82.0;
    } else {
        const double amp = 1.0 / std::sqrt(static_cast<double>(n_qubits));
        std::fill(target.begin(), target.end() - 1, amp);
        angles = passage::solve_boundary_angles(target);
        duration = name == "bell" ? 90.0 : 98.5;
    }
    double ceiling = model.g(0);
    for (int j = 1; j < n_qubits; ++j) {
        ceiling = std::min(ceiling, model.g(j));
    }
    const double peak = kCouplingHeadroom * ceiling * kJ1Max;
    const double omega0 = size_omega0(levels, angles, duration, peak);
    return Scenario{name,
                    model,
                    SingleExcitationMap(n_qubits),
                    duration,
                    omega0,
                    angles,
                    quantum::StateVector::basis(levels, 0),
                    real_state(target)};
}

ScenarioRun simulate_scenario(const Scenario &s, double eta, double zeta, int steps) {
    const pulses::ControlPulses couplings = s.couplings();
    for (int j = 0; j < s.model.n_qubits(); ++j) {
        for (double v : couplings.samples(j)) {
            if (std::abs(v) * (1.0 + std::abs(eta)) > s.model.g(j) * kCouplingCeiling) {
                throw DomainError("unreachable coupling in scenario " + s.name);
            }
        }
    }
    const double detuning = zeta * couplings.max_amplitude();
    const auto H = extended_hamiltonian(s.model, s.map, couplings, 1.0 + eta, detuning);
    const auto channels = collapse_channels(s.model, s.map);
    const int n = s.levels();
    quantum::Vector psi0 = quantum::Vector::Zero(n + 1);
    psi0.head(n) = s.initial.amplitudes();
    quantum::Vector target = quantum::Vector::Zero(n + 1);
    target.head(n) = s.target.amplitudes();
    const auto rho0 = quantum::DensityMatrix::from_pure(quantum::StateVector(psi0));

    ScenarioRun run{0.0, 0.0, 0.0, 0.0,
                    quantum::evolve_lindblad(H, channels, rho0,
                                             quantum::TimeGrid(0.0, s.duration, steps))};
    run.fidelity = quantum::fidelity_mixed(quantum::StateVector(target),
                                           run.trajectory.final_state());
    run.peak_coupling = couplings.max_amplitude();
    run.trace_drift = quantum::max_trace_drift(run.trajectory);
    for (const auto &rho : run.trajectory.states) {
        run.population_max = std::max(run.population_max, quantum::population(rho, n - 1));
    }
    return run;
}

} // namespace stirup::circuit
