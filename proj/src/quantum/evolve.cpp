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

#include "stirup/quantum/evolve.hpp"

#include <cmath>
#include <sstream>

namespace stirup::quantum {
namespace {

Matrix checked_sample(const HamiltonianFn &H, double t) {
    Matrix h = H(t);
    if (h.rows() != H.dim || h.cols() != H.dim) {
        throw DimensionError("Hamiltonian sample has wrong shape");
    }
    const double scale = 1.0 + h.cwiseAbs().maxCoeff();
    const double defect = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (!std::isfinite(defect) || defect > 1e-12 * scale) {
        std::ostringstream msg;
        msg << "Hamiltonian not Hermitian (or not finite) at t = " << t << " ns, |H - H^dag| = "
            << defect;
        throw DomainError(msg.str());
    }
    return h;
}

struct Dissipator {
    Matrix op;
    Matrix op_dag;
    Matrix op_dag_op;
    double half_rate;
};

} // namespace

PureTrajectory evolve_schrodinger(const HamiltonianFn &H, const StateVector &psi0,
                                  const TimeGrid &grid) {
    if (H.dim != psi0.dim()) {
        throw DimensionError("Hamiltonian dimension " + std::to_string(H.dim) +
                             " does not match state dimension " + std::to_string(psi0.dim()));
    }
    const double dt = grid.spacing();
    auto rhs = [&](double t, const Vector &psi) -> Vector {
        return -kI * (checked_sample(H, t) * psi);
    };

    PureTrajectory traj{grid, {}};
    traj.states.reserve(grid.steps() + 1);
    traj.states.push_back(psi0);

    Vector psi = psi0.amplitudes();
    for (int i = 0; i < grid.steps(); ++i) {
        const double t = grid.node(i);
        const Vector k1 = rhs(t, psi);
        const Vector k2 = rhs(t + 0.5 * dt, psi + 0.5 * dt * k1);
        const Vector k3 = rhs(t + 0.5 * dt, psi + 0.5 * dt * k2);
        const Vector k4 = rhs(t + dt, psi + dt * k3);
        psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!psi.allFinite()) {
            throw SimulationError("Schrodinger integration produced non-finite amplitudes at t = " +
                                  std::to_string(t + dt));
        }
        traj.states.push_back(StateVector::from_integration(psi));
    }
    return traj;
}

MixedTrajectory evolve_lindblad(const HamiltonianFn &H, std::span<const CollapseChannel> channels,
                                const DensityMatrix &rho0, const TimeGrid &grid) {
    const int dim = rho0.dim();
    if (H.dim != dim) {
        throw DimensionError("Hamiltonian dimension " + std::to_string(H.dim) +
                             " does not match density matrix dimension " + std::to_string(dim));
    }
    std::vector<Dissipator> dissipators;
    for (const auto &ch : channels) {
        if (ch.op().rows() != dim) {
            throw DimensionError("collapse operator dimension does not match the state");
        }
        if (ch.rate() < 0.0) {
            throw DomainError("negative collapse rate");
        }
        if (ch.rate() == 0.0) {
            continue;
        }
        Matrix dag = ch.op().adjoint();
        Matrix dag_op = dag * ch.op();
        dissipators.push_back({ch.op(), std::move(dag), std::move(dag_op), 0.5 * ch.rate()});
    }

    auto rhs = [&](double t, const Matrix &rho) -> Matrix {
        const Matrix h = checked_sample(H, t);
        Matrix out = kI * (rho * h - h * rho);
        for (const auto &d : dissipators) {
            out += d.half_rate *
                   (2.0 * d.op * rho * d.op_dag - d.op_dag_op * rho - rho * d.op_dag_op);
        }
        return out;
    };

    const double dt = grid.spacing();
    MixedTrajectory traj{grid, {}};
    traj.states.reserve(grid.steps() + 1);
    traj.states.push_back(rho0);

    Matrix rho = rho0.entries();
    for (int i = 0; i < grid.steps(); ++i) {
        const double t = grid.node(i);
        const Matrix k1 = rhs(t, rho);
        const Matrix k2 = rhs(t + 0.5 * dt, rho + 0.5 * dt * k1);
        const Matrix k3 = rhs(t + 0.5 * dt, rho + 0.5 * dt * k2);
        const Matrix k4 = rhs(t + dt, rho + dt * k3);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!rho.allFinite()) {
            throw SimulationError("Lindblad integration produced non-finite entries at t = " +
                                  std::to_string(t + dt));
        }
        traj.states.push_back(DensityMatrix::from_integration(rho));
    }
    return traj;
}

double max_norm_drift(const PureTrajectory &traj) {
    double drift = 0.0;
    for (const auto &s : traj.states) {
        drift = std::max(drift, std::abs(s.norm() - 1.0));
    }
    return drift;
}

double max_trace_drift(const MixedTrajectory &traj) {
    double drift = 0.0;
    for (const auto &s : traj.states) {
        drift = std::max(drift, std::abs(s.trace() - 1.0));
    }
    return drift;
}

} // namespace stirup::quantum
