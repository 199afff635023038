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


#include "stirup/circuit/model.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <ostream>
#include <sstream>

#include "stirup/circuit/bessel.hpp"
#include "stirup/csv.hpp"
#include "stirup/errors.hpp"
#include "stirup/units.hpp"

namespace stirup::circuit {

CircuitModel::CircuitModel(Params params) : params_(std::move(params)) {
    const std::size_t n = params_.omega_q.size();
    if (n < 2 || n > 16) {
        throw DimensionError("circuit model needs 2 to 16 qubits");
    }
    if (params_.g.size() != n || params_.nu.size() != n) {
        throw DimensionError("omega_q, g and nu must have one entry per qubit");
    }
    if (!(params_.omega_c > 0.0)) {
        throw DomainError("cavity frequency must be positive");
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!(params_.omega_q[j] > 0.0) || !(params_.g[j] > 0.0)) {
            throw DomainError("qubit frequencies and couplings must be positive");
        }
        const double detuning = params_.omega_c - params_.omega_q[j];
        if (std::abs(params_.nu[j] - detuning) > 1e-9 * params_.omega_c) {
            std::ostringstream msg;
            msg << "nu[" << j << "] = " << params_.nu[j]
                << " rad/ns violates nu = omega_c - omega_q = " << detuning;
            throw DomainError(msg.str());
        }
    }
    if (params_.gamma1 < 0.0 || params_.gamma2 < 0.0 || params_.gamma_c < 0.0) {
        throw DomainError("decoherence rates must be non-negative");
    }
}

CircuitModel CircuitModel::standard(int n_qubits, double gamma) {
    if (n_qubits < 2) {
        throw DimensionError("circuit model needs at least 2 qubits");
    }
    Params p;
    p.omega_c = units::two_pi_ghz(6.0);
    p.omega_q.assign(n_qubits, units::two_pi_ghz(5.0));
    p.g.assign(n_qubits, units::two_pi_mhz(20.0));
    p.nu.assign(n_qubits, p.omega_c - p.omega_q.front());
    p.gamma1 = p.gamma2 = p.gamma_c = gamma;
    return CircuitModel(std::move(p));
}

std::string BasisLabel::text(int n_qubits) const {
    std::string s;
    for (int j = 0; j < n_qubits; ++j) {
        s += (excited >> j) & 1u ? 'e' : 'g';
    }
    return s + std::to_string(photons);
}

SingleExcitationMap::SingleExcitationMap(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 2 || n_qubits > 16) {
        throw DimensionError("single-excitation map needs 2 to 16 qubits");
    }
    for (int j = 0; j < n_qubits; ++j) {
        labels_.push_back({1u << j, 0});
    }
    labels_.push_back({0u, 1});
}

int SingleExcitationMap::extended_index(const BasisLabel &label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it != labels_.end()) {
        return static_cast<int>(it - labels_.begin());
    }
    return label == ground() ? levels() : -1;
}

std::string SingleExcitationMap::label(int level) const {
    if (level == levels()) {
        return ground().text(n_qubits_);
    }
    return labels_.at(level).text(n_qubits_);
}

namespace {

struct Action {
    BasisLabel to;
    double amplitude = 0.0;
};

// sigma+_j a
Action raise_qubit_lower_cavity(const BasisLabel &b, int j) {
    const std::uint32_t bit = 1u << j;
    if ((b.excited & bit) || b.photons == 0) {
        return {};
    }
    return {{b.excited | bit, b.photons - 1}, std::sqrt(static_cast<double>(b.photons))};
}

// sigma-_j a^dag
Action lower_qubit_raise_cavity(const BasisLabel &b, int j) {
    const std::uint32_t bit = 1u << j;
    if (!(b.excited & bit)) {
        return {};
    }
    return {{b.excited & ~bit, b.photons + 1}, std::sqrt(static_cast<double>(b.photons + 1))};
}

std::vector<BasisLabel> extended_basis(const SingleExcitationMap &map) {
    auto basis = map.labels();
    basis.push_back(map.ground());
    return basis;
}

void check_sizes(const CircuitModel &model, const SingleExcitationMap &map,
                 const pulses::ControlPulses &couplings) {
    if (model.n_qubits() != map.n_qubits()) {
        throw DimensionError("map and model disagree on the qubit count");
    }
    if (couplings.envelopes() != model.n_qubits()) {
        throw DimensionError("need one coupling envelope per qubit");
    }
}

// Per-qubit coupling structure K_j and excited projector D over `basis`.
struct Structure {
    std::vector<Eigen::MatrixXd> coupling;
    Eigen::MatrixXd excited;
};

Structure structure(const SingleExcitationMap &map, const std::vector<BasisLabel> &basis) {
    const int dim = static_cast<int>(basis.size());
    Structure s;
    s.excited = Eigen::MatrixXd::Zero(dim, dim);
    for (int j = 0; j < map.n_qubits(); ++j) {
        Eigen::MatrixXd K = Eigen::MatrixXd::Zero(dim, dim);
        for (int c = 0; c < dim; ++c) {
            for (const Action &a : {raise_qubit_lower_cavity(basis[c], j),
                                    lower_qubit_raise_cavity(basis[c], j)}) {
                if (a.amplitude == 0.0) {
                    continue;
                }
                const auto it = std::find(basis.begin(), basis.end(), a.to);
                if (it == basis.end()) {
                    throw std::logic_error("coupling leaves the single-excitation subspace");
                }
                K(it - basis.begin(), c) += a.amplitude;
            }
            if ((basis[c].excited >> j) & 1u) {
                s.excited(c, c) += 1.0;
            }
        }
        s.coupling.push_back(std::move(K));
    }
    return s;
}

quantum::HamiltonianFn build(const CircuitModel &model, const SingleExcitationMap &map,
                             const pulses::ControlPulses &couplings, double scale,
                             double detuning, const std::vector<BasisLabel> &basis) {
    check_sizes(model, map, couplings);
    auto shared = std::make_shared<const pulses::ControlPulses>(couplings);
    auto s = std::make_shared<const Structure>(structure(map, basis));
    const int dim = static_cast<int>(basis.size());
    return {dim, [shared, s, scale, detuning, dim](double t) {
                Eigen::MatrixXd H = detuning * s->excited;
                for (std::size_t j = 0; j < s->coupling.size(); ++j) {
                    H += scale * shared->envelope(static_cast<int>(j), t) * s->coupling[j];
                }
                return quantum::Matrix(H.cast<quantum::Complex>());
            }};
}

} // namespace

quantum::HamiltonianFn effective_hamiltonian(const CircuitModel &model,
                                             const SingleExcitationMap &map,
                                             const pulses::ControlPulses &couplings, double scale,
                                             double detuning) {
    return build(model, map, couplings, scale, detuning, map.labels());
}

quantum::HamiltonianFn extended_hamiltonian(const CircuitModel &model,
                                            const SingleExcitationMap &map,
                                            const pulses::ControlPulses &couplings, double scale,
                                            double detuning) {
    return build(model, map, couplings, scale, detuning, extended_basis(map));
}

std::vector<quantum::CollapseChannel> collapse_channels(const CircuitModel &model,
                                                        const SingleExcitationMap &map) {
    if (model.n_qubits() != map.n_qubits()) {
        throw DimensionError("map and model disagree on the qubit count");
    }
    const auto basis = extended_basis(map);
    const int dim = static_cast<int>(basis.size());
    auto index = [&](const BasisLabel &b) {
        return static_cast<int>(std::find(basis.begin(), basis.end(), b) - basis.begin());
    };
    const auto &p = model.params();
    std::vector<quantum::CollapseChannel> channels;
    for (int j = 0; j < map.n_qubits(); ++j) {
        const std::uint32_t bit = 1u << j;
        quantum::Matrix lower = quantum::Matrix::Zero(dim, dim);
        quantum::Matrix proj = quantum::Matrix::Zero(dim, dim);
        for (int c = 0; c < dim; ++c) {
            if (basis[c].excited & bit) {
                const int r = index({basis[c].excited & ~bit, basis[c].photons});
                if (r < dim) {
                    lower(r, c) = 1.0;
                }
                proj(c, c) = 1.0;
            }
        }
        channels.emplace_back(lower, p.gamma1);
        channels.emplace_back(proj, p.gamma2);
    }
    quantum::Matrix a = quantum::Matrix::Zero(dim, dim);
    for (int c = 0; c < dim; ++c) {
        if (basis[c].photons > 0) {
            const int r = index({basis[c].excited, basis[c].photons - 1});
            if (r < dim) {
                a(r, c) = std::sqrt(static_cast<double>(basis[c].photons));
            }
        }
    }
    channels.emplace_back(a, p.gamma_c);
    return channels;
}

double HardwareSchedule::invariant_defect(const CircuitModel &model) const {
    double defect = 0.0;
    for (std::size_t j = 0; j < eps.size(); ++j) {
        for (std::size_t i = 0; i < eps[j].size(); ++i) {
            const double expected = model.g(static_cast<int>(j)) * bessel_j1(eps[j][i]);
            defect = std::max(defect, std::abs(std::abs(gtilde[j][i]) - expected));
        }
    }
    return defect;
}

HardwareSchedule hardware_schedule(const CircuitModel &model,
                                   const pulses::ControlPulses &couplings) {
    if (couplings.envelopes() != model.n_qubits()) {
        throw DimensionError("need one coupling envelope per qubit");
    }
    HardwareSchedule hs;
    const int n = couplings.nodes();
    for (int i = 0; i < n; ++i) {
        hs.times.push_back(couplings.node_time(i));
    }
    for (int j = 0; j < model.n_qubits(); ++j) {
        std::vector<double> e(n);
        for (int i = 0; i < n; ++i) {
            e[i] = invert_coupling(std::abs(couplings.samples(j)[i]), model.g(j));
        }
        hs.eps.push_back(std::move(e));
        hs.gtilde.push_back(couplings.samples(j));
    }
    return hs;
}

void write_csv(std::ostream &os, const HardwareSchedule &schedule) {
    std::vector<std::string> header{"t_ns"};
    for (std::size_t j = 0; j < schedule.eps.size(); ++j) {
        header.push_back("eps_" + std::to_string(j));
    }
    for (std::size_t j = 0; j < schedule.gtilde.size(); ++j) {
        header.push_back("gtilde_" + std::to_string(j));
    }
    CsvWriter csv(os, header);
    std::vector<double> row(header.size());
    for (std::size_t i = 0; i < schedule.times.size(); ++i) {
        row[0] = schedule.times[i];
        for (std::size_t j = 0; j < schedule.eps.size(); ++j) {
            row[1 + j] = schedule.eps[j][i];
            row[1 + schedule.eps.size() + j] = schedule.gtilde[j][i];
        }
        csv.row(row);
    }
}

} // namespace stirup::circuit
