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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "stirup/errors.hpp"
#include "stirup/quantum/evolve.hpp"
#include "stirup/quantum/metrics.hpp"
#include "stirup/quantum/types.hpp"

namespace {

using namespace stirup;
using namespace stirup::quantum;

HamiltonianFn zero_hamiltonian(int dim) {
    return {dim, [dim](double) { return Matrix::Zero(dim, dim); }};
}

HamiltonianFn sigma_x(double h) {
    return {2, [h](double) {
                Matrix m = Matrix::Zero(2, 2);
                m(0, 1) = h;
                m(1, 0) = h;
                return m;
            }};
}

TEST(StateVector, RejectsUnnormalizedInput) {
    Vector v(2);
    v << 1.0, 1.0;
    EXPECT_THROW(StateVector{v}, DomainError);
    EXPECT_NO_THROW(StateVector{v / std::sqrt(2.0)});
}

TEST(DensityMatrix, RejectsNonHermitianAndBadTrace) {
    Matrix m = Matrix::Identity(2, 2) * 0.5;
    m(0, 1) = 0.3;
    EXPECT_THROW(DensityMatrix{m}, DomainError);
    EXPECT_THROW(DensityMatrix{Matrix::Identity(2, 2)}, DomainError);
    EXPECT_NO_THROW(DensityMatrix{Matrix::Identity(2, 2) * 0.5});
}

TEST(TimeGrid, NodesAndSpacing) {
    const TimeGrid grid(1.0, 3.0, 4);
    EXPECT_DOUBLE_EQ(grid.spacing(), 0.5);
    EXPECT_DOUBLE_EQ(grid.node(4), 3.0);
    EXPECT_THROW(TimeGrid(0.0, 1.0, 0), DomainError);
    EXPECT_THROW(TimeGrid(1.0, 1.0, 10), DomainError);
}

TEST(Schrodinger, ZeroHamiltonianLeavesStateUnchanged) {
    Vector v(3);
    v << 0.6, Complex(0.0, 0.8), 0.0;
    const StateVector psi0(v);
    const auto traj = evolve_schrodinger(zero_hamiltonian(3), psi0, TimeGrid(0.0, 5.0, 50));
    for (const auto &s : traj.states) {
        EXPECT_EQ((s.amplitudes() - v).norm(), 0.0);
    }
}

TEST(Schrodinger, RabiOscillationMatchesClosedForm) {
    const double h = 0.7;
    const double T = std::numbers::pi / 2.0 / h;
    const auto traj = evolve_schrodinger(sigma_x(h), StateVector::basis(2, 0),
                                         TimeGrid(0.0, T, kDefaultSteps));
    for (int i = 0; i <= traj.grid.steps(); i += 250) {
        const double t = traj.grid.node(i);
        EXPECT_NEAR(std::abs(traj.states[i][0] - Complex(std::cos(h * t), 0.0)), 0.0, 1e-10);
        EXPECT_NEAR(std::abs(traj.states[i][1] - Complex(0.0, -std::sin(h * t))), 0.0, 1e-10);
    }
    EXPECT_NEAR(population(traj.final_state(), 1), 1.0, 1e-10);
    EXPECT_LT(max_norm_drift(traj), 1e-10);
}

TEST(Schrodinger, RungeKuttaErrorIsFourthOrder) {
    const double h = 1.0;
    const double T = 10.0;
    const Complex exact(0.0, -std::sin(h * T));
    auto error = [&](int steps) {
        const auto traj =
            evolve_schrodinger(sigma_x(h), StateVector::basis(2, 0), TimeGrid(0.0, T, steps));
        return std::abs(traj.final_state()[1] - exact);
    };
    const double ratio = error(100) / error(200);
    EXPECT_GT(ratio, 14.0);
    EXPECT_LT(ratio, 18.0);
}

TEST(Schrodinger, RejectsNonHermitianHamiltonian) {
    const HamiltonianFn bad{2, [](double) {
                                Matrix m = Matrix::Zero(2, 2);
                                m(0, 1) = 1.0;
                                return m;
                            }};
    EXPECT_THROW(evolve_schrodinger(bad, StateVector::basis(2, 0), TimeGrid(0.0, 1.0, 10)),
                 DomainError);
}

TEST(Schrodinger, DimensionMismatchThrows) {
    EXPECT_THROW(evolve_schrodinger(zero_hamiltonian(3), StateVector::basis(2, 0),
                                    TimeGrid(0.0, 1.0, 10)),
                 DimensionError);
}

TEST(Lindblad, NoChannelsAndZeroHamiltonianIsStationary) {
    const auto rho0 = DensityMatrix::from_pure(StateVector::basis(3, 1));
    const auto traj = evolve_lindblad(zero_hamiltonian(3), {}, rho0, TimeGrid(0.0, 2.0, 20));
    for (const auto &rho : traj.states) {
        EXPECT_EQ((rho.entries() - rho0.entries()).norm(), 0.0);
    }
}

TEST(Lindblad, TwoLevelDecayMatchesExponential) {
    const double rate = 0.3;
    Matrix lower = Matrix::Zero(2, 2);
    lower(0, 1) = 1.0;
    const std::vector<CollapseChannel> channels{{lower, rate}};
    const auto traj =
        evolve_lindblad(zero_hamiltonian(2), channels,
                        DensityMatrix::from_pure(StateVector::basis(2, 1)),
                        TimeGrid(0.0, 10.0, kDefaultSteps));
    for (int i = 0; i <= traj.grid.steps(); i += 100) {
        EXPECT_NEAR(traj.states[i](1, 1).real(), std::exp(-rate * traj.grid.node(i)), 1e-6);
    }
    EXPECT_LT(max_trace_drift(traj), 1e-12);
}

TEST(Lindblad, DecayToHalfAtLnTwoOverRate) {
    const double rate = 0.25;
    Matrix lower = Matrix::Zero(2, 2);
    lower(0, 1) = 1.0;
    const std::vector<CollapseChannel> channels{{lower, rate}};
    const auto traj = evolve_lindblad(zero_hamiltonian(2), channels,
                                      DensityMatrix::from_pure(StateVector::basis(2, 1)),
                                      TimeGrid(0.0, std::log(2.0) / rate, kDefaultSteps));
    EXPECT_NEAR(fidelity_mixed(StateVector::basis(2, 1), traj.final_state()), 0.5, 1e-9);
}

TEST(Lindblad, ProjectorDephasingDampsCoherenceAtHalfRate) {
    const double rate = 0.4;
    Matrix plus = Matrix::Zero(3, 3);
    plus(1, 1) = 1.0;
    plus(2, 2) = 1.0;
    const std::vector<CollapseChannel> channels{{plus, rate}};
    Matrix rho0 = Matrix::Zero(3, 3);
    rho0(0, 0) = 0.25;
    rho0(1, 1) = 0.25;
    rho0(2, 2) = 0.5;
    rho0(0, 2) = rho0(2, 0) = 0.5 * 0.5;
    rho0(1, 2) = rho0(2, 1) = 0.2;
    const auto traj = evolve_lindblad(zero_hamiltonian(3), channels, DensityMatrix(rho0),
                                      TimeGrid(0.0, 5.0, kDefaultSteps));
    for (int i = 0; i <= traj.grid.steps(); i += 100) {
        const double t = traj.grid.node(i);
        EXPECT_NEAR(std::abs(traj.states[i](0, 2) - 0.25 * std::exp(-rate * t / 2.0)), 0.0,
                    1e-9);
        EXPECT_NEAR(std::abs(traj.states[i](1, 2) - 0.2), 0.0, 1e-12);
    }
}

TEST(Lindblad, WithoutChannelsMatchesSchrodinger) {
    const double h = 0.9;
    const TimeGrid grid(0.0, 3.0, 1000);
    const auto pure = evolve_schrodinger(sigma_x(h), StateVector::basis(2, 0), grid);
    const auto mixed = evolve_lindblad(sigma_x(h), {},
                                       DensityMatrix::from_pure(StateVector::basis(2, 0)), grid);
    const Matrix expected =
        pure.final_state().amplitudes() * pure.final_state().amplitudes().adjoint();
    EXPECT_LT((mixed.final_state().entries() - expected).norm(), 1e-10);
}

TEST(CollapseChannel, RejectsNegativeRate) {
    EXPECT_THROW(CollapseChannel(Matrix::Identity(2, 2), -1.0), DomainError);
}

TEST(Metrics, PureFidelityCases) {
    const auto a = StateVector::basis(2, 0);
    Vector v(2);
    v << 1.0, 1.0;
    const StateVector b(v / std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(fidelity_pure(a, a), 1.0);
    EXPECT_DOUBLE_EQ(fidelity_pure(a, StateVector::basis(2, 1)), 0.0);
    EXPECT_NEAR(fidelity_pure(a, b), 0.5, 1e-15);
    EXPECT_THROW(fidelity_pure(a, StateVector::basis(3, 0)), DimensionError);
}

TEST(Metrics, MixedFidelityCases) {
    const auto t = StateVector::basis(4, 2);
    EXPECT_DOUBLE_EQ(fidelity_mixed(t, DensityMatrix::from_pure(t)), 1.0);
    EXPECT_NEAR(fidelity_mixed(t, DensityMatrix(Matrix::Identity(4, 4) / 4.0)), 0.25, 1e-15);
}

TEST(Metrics, StateDistanceCases) {
    const TimeGrid grid(0.0, 1.0, 2);
    const PureTrajectory a{grid, {StateVector::basis(2, 0), StateVector::basis(2, 0),
                                  StateVector::basis(2, 0)}};
    const PureTrajectory b{grid, {StateVector::basis(2, 0), StateVector::basis(2, 1),
                                  StateVector::basis(2, 0)}};
    EXPECT_DOUBLE_EQ(max_state_distance(a, a), 0.0);
    EXPECT_NEAR(max_state_distance(a, b), 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(transfer_efficiency(a, StateVector::basis(2, 0)), 1.0);
    EXPECT_DOUBLE_EQ(transfer_efficiency(b, StateVector::basis(2, 1)), 0.0);
}

TEST(Metrics, PopulationOfBasisState) {
    const auto s = StateVector::basis(3, 0);
    EXPECT_DOUBLE_EQ(population(s, 0), 1.0);
    EXPECT_DOUBLE_EQ(population(s, 1), 0.0);
    EXPECT_THROW(population(s, 3), DimensionError);
}

} // namespace
