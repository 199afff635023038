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
#include <sstream>

#include "stirup/circuit/bessel.hpp"
#include "stirup/circuit/model.hpp"
#include "stirup/circuit/scenario.hpp"
#include "stirup/csv.hpp"
#include "stirup/errors.hpp"
#include "stirup/pulses/pulses.hpp"
#include "stirup/quantum/evolve.hpp"
#include "stirup/quantum/metrics.hpp"
#include "stirup/units.hpp"

namespace {

using namespace stirup;
using namespace stirup::circuit;
constexpr double kPi = std::numbers::pi;

pulses::ControlPulses constant_couplings(std::vector<double> values) {
    std::vector<std::vector<double>> samples;
    for (double v : values) {
        samples.push_back(std::vector<double>(8, v));
    }
    return pulses::ControlPulses(static_cast<int>(values.size()) + 1, 10.0, samples);
}

TEST(Bessel, AgreesWithStandardLibrary) {
    for (double x = -10.0; x <= 10.0; x += 0.037) {
        EXPECT_NEAR(bessel_j1(x), std::cyl_bessel_j(1.0, std::abs(x)) * (x < 0 ? -1.0 : 1.0),
                    1e-10)
            << "x = " << x;
    }
}

TEST(Bessel, SpecialValuesAndParity) {
    EXPECT_EQ(bessel_j1(0.0), 0.0);
    EXPECT_NEAR(bessel_j1(1.8412), 0.5819, 1e-4);
    EXPECT_NEAR(bessel_j1(kJ1ArgMax), kJ1Max, 1e-14);
    EXPECT_NEAR(bessel_j1_derivative(kJ1ArgMax), 0.0, 1e-12);
    for (double x : {0.3, 2.2, 7.9}) {
        EXPECT_DOUBLE_EQ(bessel_j1(-x), -bessel_j1(x));
    }
    EXPECT_THROW(bessel_j1(10.5), DomainError);
}

TEST(Bessel, SatisfiesDefiningEquation) {
    // x^2 y'' + x y' + (x^2 - 1) y = 0, with y'' from differences of the analytic y'.
    // Cancellation in the series near |x| = 10 limits the difference quotient to ~1e-7.
    const double h = 1e-4;
    for (double x : {0.5, 1.8412, 3.3, 6.0, 9.5}) {
        const double y = bessel_j1(x);
        const double dy = bessel_j1_derivative(x);
        const double d2y = (bessel_j1_derivative(x + h) - bessel_j1_derivative(x - h)) / (2 * h);
        EXPECT_NEAR(x * x * d2y + x * dy + (x * x - 1) * y, 0.0, 1e-6) << "x = " << x;
    }
}

TEST(InvertCoupling, BranchEndpointsAndRoundTrip) {
    const double g = 0.1;
    EXPECT_EQ(invert_coupling(0.0, g), 0.0);
    EXPECT_NEAR(invert_coupling(0.5819 * g, g), 1.8412, 1e-4);
    for (double ratio : {0.05, 0.3, 0.55}) {
        const double eps = invert_coupling(ratio * g, g);
        EXPECT_LE(eps, kJ1ArgMax);
        EXPECT_NEAR(g * bessel_j1(eps), ratio * g, 1e-12);
    }
    EXPECT_THROW(invert_coupling(0.6 * g, g), DomainError);
    EXPECT_THROW(invert_coupling(-0.01, g), DomainError);
    EXPECT_THROW(invert_coupling(0.01, 0.0), DomainError);
}

TEST(CircuitModel, StandardParametersAndValidation) {
    const auto m = CircuitModel::standard(3, units::kGammaUnit);
    EXPECT_EQ(m.n_qubits(), 3);
    EXPECT_NEAR(m.g(1), units::two_pi_mhz(20.0), 1e-15);
    EXPECT_NEAR(m.params().nu[0], m.params().omega_c - m.params().omega_q[0], 1e-12);
    auto p = m.params();
    p.nu[1] += 0.1;
    EXPECT_THROW(CircuitModel{p}, DomainError);
    EXPECT_THROW(CircuitModel::standard(1, 0.0), DimensionError);
}

TEST(SingleExcitationMap, LabelsAndIndices) {
    const SingleExcitationMap map(2);
    EXPECT_EQ(map.levels(), 3);
    EXPECT_EQ(map.label(0), "eg0");
    EXPECT_EQ(map.label(1), "ge0");
    EXPECT_EQ(map.label(2), "gg1");
    EXPECT_EQ(map.extended_index(map.ground()), 3);
    EXPECT_EQ(map.extended_index(BasisLabel{3u, 0}), -1);
}

TEST(EffectiveHamiltonian, ZeroCouplingsGiveZeroOperator) {
    const auto m = CircuitModel::standard(2, 0.0);
    const auto H = effective_hamiltonian(m, SingleExcitationMap(2), constant_couplings({0.0, 0.0}));
    EXPECT_EQ(H(1.0).norm(), 0.0);
}

TEST(EffectiveHamiltonian, MatchesStarGraphOfPulses) {
    for (int n : {2, 3}) {
        std::vector<double> values;
        for (int j = 0; j < n; ++j) {
            values.push_back(0.01 * (j + 1) * (j % 2 ? -1.0 : 1.0));
        }
        const auto couplings = constant_couplings(values);
        const auto m = CircuitModel::standard(n, 0.0);
        const auto H = effective_hamiltonian(m, SingleExcitationMap(n), couplings);
        const auto ref = pulses::hamiltonian(couplings);
        EXPECT_LT((H(2.0) - ref(2.0)).norm(), 1e-15) << n << " qubits";
    }
}

TEST(EffectiveHamiltonian, ExtendedSpaceKeepsGroundInert) {
    const auto m = CircuitModel::standard(2, 0.0);
    const SingleExcitationMap map(2);
    const auto couplings = constant_couplings({0.02, 0.03});
    const quantum::Matrix ext = extended_hamiltonian(m, map, couplings, 1.0, 0.004)(1.0);
    const quantum::Matrix sub = effective_hamiltonian(m, map, couplings, 1.0, 0.004)(1.0);
    EXPECT_LT((ext.topLeftCorner(3, 3) - sub).norm(), 1e-15);
    EXPECT_EQ(ext.row(3).norm(), 0.0);
    EXPECT_EQ(ext.col(3).norm(), 0.0);
    EXPECT_DOUBLE_EQ(sub(0, 0).real(), 0.004);
    EXPECT_DOUBLE_EQ(sub(2, 2).real(), 0.0);
}

TEST(CollapseChannels, TwoQubitChannelSet) {
    const auto m = CircuitModel::standard(2, 0.01);
    const SingleExcitationMap map(2);
    const auto channels = collapse_channels(m, map);
    ASSERT_EQ(channels.size(), 5u);
    const int ground = map.extended_index(map.ground());
    // qubit 0 decay: |eg0> -> |gg0>
    EXPECT_EQ(channels[0].op()(ground, 0), quantum::Complex(1.0));
    EXPECT_EQ(channels[0].op().cwiseAbs().sum(), 1.0);
    // qubit 0 dephasing projector
    EXPECT_EQ(channels[1].op()(0, 0), quantum::Complex(1.0));
    EXPECT_EQ(channels[1].op().trace(), quantum::Complex(1.0));
    // cavity decay: |gg1> -> |gg0>
    EXPECT_EQ(channels[4].op()(ground, 2), quantum::Complex(1.0));
    for (const auto &c : channels) {
        EXPECT_DOUBLE_EQ(c.rate(), 0.01);
    }
}

TEST(CollapseChannels, ZeroRatesReduceToSchrodinger) {
    const auto m = CircuitModel::standard(2, 0.0);
    const auto s = scenario("qst2", m);
    const auto run = simulate_scenario(s);
    const auto traj = quantum::evolve_schrodinger(
        effective_hamiltonian(m, s.map, s.couplings()), s.initial,
        quantum::TimeGrid(0.0, s.duration, quantum::kDefaultSteps));
    EXPECT_NEAR(run.fidelity, quantum::transfer_efficiency(traj, s.target), 1e-8);
    EXPECT_GT(run.fidelity, 1.0 - 1e-6);
}

TEST(HardwareSchedule, RealisesCouplings) {
    const auto m = CircuitModel::standard(3, 0.0);
    const auto s = scenario("w", m);
    const auto hw = hardware_schedule(m, s.couplings());
    EXPECT_LT(hw.invariant_defect(m), 1e-12);
    for (const auto &row : hw.eps) {
        for (double e : row) {
            EXPECT_GE(e, 0.0);
            EXPECT_LE(e, kJ1ArgMax);
        }
    }
    std::stringstream ss;
    write_csv(ss, hw);
    const auto table = read_csv_table(ss);
    EXPECT_EQ(table.header, (std::vector<std::string>{"t_ns", "eps_0", "eps_1", "eps_2",
                                                      "gtilde_0", "gtilde_1", "gtilde_2"}));
    EXPECT_EQ(table.rows.size(), hw.times.size());
}

TEST(Scenario, ResolvedParameters) {
    const auto bell = scenario("bell", CircuitModel::standard(2, units::kGammaUnit));
    EXPECT_DOUBLE_EQ(bell.duration, 90.0);
    ASSERT_EQ(bell.boundary_angles.size(), 1u);
    EXPECT_NEAR(bell.boundary_angles[0], -kPi / 4.0, 1e-14);

    const auto w = scenario("w", CircuitModel::standard(3, units::kGammaUnit));
    EXPECT_DOUBLE_EQ(w.duration, 98.5);
    EXPECT_NEAR(w.boundary_angles[0], kPi / 4.0, 1e-14);
    EXPECT_NEAR(w.boundary_angles[1], -std::asin(1.0 / std::sqrt(3.0)), 1e-14);

    const auto qst2 = scenario("qst2", CircuitModel::standard(2, units::kGammaUnit));
    EXPECT_DOUBLE_EQ(qst2.duration, 82.0);
    EXPECT_EQ(qst2.map.label(1), "ge0");
    EXPECT_NEAR(std::abs(qst2.target[1]), 1.0, 1e-15);

    EXPECT_THROW(scenario("ghz", CircuitModel::standard(2, 0.0)), DomainError);
    EXPECT_THROW(scenario("w", CircuitModel::standard(2, 0.0)), DimensionError);
}

TEST(Scenario, PeakCouplingRespectsHeadroom) {
    const auto m = CircuitModel::standard(2, units::kGammaUnit);
    const auto s = scenario("bell", m);
    EXPECT_NEAR(s.couplings().max_amplitude(), kCouplingHeadroom * m.g(0) * kJ1Max,
                1e-6 * m.g(0));
}

TEST(Scenario, BellFidelityWithDecoherence) {
    const auto run = simulate_scenario(scenario("bell", CircuitModel::standard(2, units::kGammaUnit)));
    EXPECT_NEAR(run.fidelity, 0.997, 0.005);
    EXPECT_LT(run.trace_drift, 1e-10);
}

} // namespace
