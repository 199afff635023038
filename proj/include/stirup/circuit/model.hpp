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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stirup/pulses/control_pulses.hpp"
#include "stirup/quantum/types.hpp"

namespace stirup::circuit {

/// Qubits coupled to one cavity mode, with frequency-modulated qubits.
/// All frequencies and rates in rad/ns.
class CircuitModel {
  public:
    struct Params {
        double omega_c = 0.0;
        std::vector<double> omega_q;
        std::vector<double> g;
        std::vector<double> nu;
        double gamma1 = 0.0;
        double gamma2 = 0.0;
        double gamma_c = 0.0;
    };

    /// Validates sizes, positivity and the sideband condition nu_j = omega_c - omega_qj.
    explicit CircuitModel(Params params);

    /// Cavity 2 pi x 6 GHz, qubits 2 pi x 5 GHz, g = 2 pi x 20 MHz, all rates = `gamma`.
    static CircuitModel standard(int n_qubits, double gamma);

    int n_qubits() const { return static_cast<int>(params_.omega_q.size()); }
    const Params &params() const { return params_; }
    double g(int j) const { return params_.g.at(j); }

  private:
    Params params_;
};

/// Circuit basis state: excited-qubit bitmask plus cavity photon number.
struct BasisLabel {
    std::uint32_t excited = 0;
    int photons = 0;

    bool operator==(const BasisLabel &) const = default;
    std::string text(int n_qubits) const; ///< e.g. "eg0"
};

/// Single-excitation subspace as an N-pod: level m (m < n) has qubit m excited,
/// level n holds the photon. index n + 1 is the empty ground state used only by
/// the extended space of open-system simulations.
class SingleExcitationMap {
  public:
    explicit SingleExcitationMap(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    int levels() const { return n_qubits_ + 1; }
    const std::vector<BasisLabel> &labels() const { return labels_; }
    BasisLabel ground() const { return {}; }
    /// Index in the extended basis (subspace + ground), or -1.
    int extended_index(const BasisLabel &label) const;
    std::string label(int level) const;

  private:
    int n_qubits_;
    std::vector<BasisLabel> labels_;
};

/// H = sum_j gtilde_j(t) (sigma+_j a + sigma-_j a^dag) + detuning * sum_j |e><e|_j,
/// restricted to the single-excitation subspace and built from the operator action
/// on basis labels. Envelope j of `couplings` is gtilde_j (rad/ns), scaled by `scale`.
quantum::HamiltonianFn effective_hamiltonian(const CircuitModel &model,
                                             const SingleExcitationMap &map,
                                             const pulses::ControlPulses &couplings,
                                             double scale = 1.0, double detuning = 0.0);

/// Same operator on the extended (N + 1)-dimensional space; the ground state is inert.
quantum::HamiltonianFn extended_hamiltonian(const CircuitModel &model,
                                            const SingleExcitationMap &map,
                                            const pulses::ControlPulses &couplings,
                                            double scale = 1.0, double detuning = 0.0);

/// Per-qubit decay (gamma1) and dephasing (gamma2), then cavity decay (gamma_c),
/// as operators on the extended space.
std::vector<quantum::CollapseChannel> collapse_channels(const CircuitModel &model,
                                                        const SingleExcitationMap &map);

/// Modulation amplitudes realising the couplings: |gtilde_j| = g_j J1(eps_j),
/// eps_j >= 0, the sign of gtilde_j carried by a pi modulation phase.
struct HardwareSchedule {
    std::vector<double> times;
    std::vector<std::vector<double>> eps;
    std::vector<std::vector<double>> gtilde;

    /// max over nodes of | |gtilde| - g J1(eps) |.
    double invariant_defect(const CircuitModel &model) const;
};

HardwareSchedule hardware_schedule(const CircuitModel &model, const pulses::ControlPulses &couplings);

/// CSV `t_ns,eps_0..,gtilde_0..`.
void write_csv(std::ostream &os, const HardwareSchedule &schedule);

} // namespace stirup::circuit
