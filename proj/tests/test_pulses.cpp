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
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "stirup/errors.hpp"
#include "stirup/passage/passage.hpp"
#include "stirup/pulses/control_pulses.hpp"
#include "stirup/pulses/pulses.hpp"
#include "stirup/quantum/evolve.hpp"
#include "stirup/quantum/metrics.hpp"

namespace {

using namespace stirup;
using namespace stirup::pulses;
constexpr double kPi = std::numbers::pi;

ControlPulses constant_pulses(std::vector<double> values, double T = 1.0) {
    std::vector<std::vector<double>> samples;
    for (double v : values) {
        samples.push_back(std::vector<double>(16, v));
    }
    return ControlPulses(static_cast<int>(values.size()) + 1, T, samples);
}

// Largest trace distance between the simulated state and the passage coefficients.
double round_trip_distance(const passage::Passage &p) {
    const auto pulses = inverse_engineer(p);
    const quantum::TimeGrid grid(0.0, p.duration(), quantum::kDefaultSteps);
    const auto traj = quantum::evolve_schrodinger(
        hamiltonian(pulses), quantum::StateVector::basis(p.levels, 0), grid);
    double worst = 0.0;
    for (int i = 0; i <= grid.steps(); ++i) {
        const auto a = passage::coefficients(p.levels, p.gamma, p.chis, grid.node(i));
        const double overlap = std::norm(a.dot(traj.states[i].amplitudes()));
        worst = std::max(worst, std::sqrt(std::max(0.0, 1.0 - overlap)));
    }
    return worst;
}

TEST(ControlPulses, ValidatesInput) {
    EXPECT_THROW(ControlPulses(3, 1.0, {std::vector<double>(8, 0.0)}), DimensionError);
    EXPECT_THROW(ControlPulses(3, 1.0, {std::vector<double>(3), std::vector<double>(3)}),
                 DomainError);
    EXPECT_THROW(ControlPulses(3, -1.0, {std::vector<double>(8), std::vector<double>(8)}),
                 DomainError);
    std::vector<double> bad(8, 0.0);
    bad[3] = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(ControlPulses(3, 1.0, {bad, std::vector<double>(8)}), DivergenceError);
}

TEST(ControlPulses, CubicInterpolationIsExactForCubics) {
    auto cubic = [](double t) { return 0.3 - 1.2 * t + 0.7 * t * t - 0.25 * t * t * t; };
    const auto p = ControlPulses::sample(
        3, 3.0,
        [&](double t, std::span<double> out) {
            out[0] = cubic(t);
            out[1] = 0.0;
        },
        33);
    for (double t : {0.0, 0.01, 0.77, 1.5, 2.999, 3.0}) {
        EXPECT_NEAR(p.envelope(0, t), cubic(t), 1e-13);
    }
}

TEST(ControlPulses, LinearInterpolationBetweenNodes) {
    const ControlPulses p(3, 3.0, {{0.0, 2.0, 0.0, 0.0}, {1.0, 1.0, 1.0, -4.0}},
                          Interpolation::kLinear);
    EXPECT_DOUBLE_EQ(p.envelope(0, 0.5), 1.0);
    EXPECT_DOUBLE_EQ(p.envelope(0, 1.0), 2.0);
    EXPECT_DOUBLE_EQ(p.envelope(1, 2.5), -1.5);
    EXPECT_DOUBLE_EQ(p.max_amplitude(), 4.0);
}

TEST(ControlPulses, CsvRoundTrip) {
    const auto p = inverse_engineer(passage::default_passage(
        4, passage::AmplitudeSchedule(1.0, 0.0, 12.0), std::vector<double>{0.4, -0.3}), 257);
    std::stringstream ss;
    write_csv(ss, p);
    const std::string header = ss.str().substr(0, ss.str().find('\n'));
    EXPECT_EQ(header, "t_ns,h_14,h_24,h_34");
    const auto back = read_csv(ss);
    ASSERT_EQ(back.levels(), 4);
    ASSERT_EQ(back.nodes(), 257);
    for (int m = 0; m < 3; ++m) {
        for (int i = 0; i < 257; ++i) {
            EXPECT_NEAR(back.samples(m)[i], p.samples(m)[i],
                        1e-11 * std::max(1.0, std::abs(p.samples(m)[i])));
        }
    }
}

TEST(Engineer, ThreeLevelMatchesClosedForm) {
    const double T = 9.0;
    const passage::AmplitudeSchedule omega(0.8, 0.01, T);
    const auto p = passage::default_passage(3, omega, std::vector<double>{kPi / 2.0});
    for (double t : {0.0, 0.9, 3.3, 4.5, 7.1, T}) {
        const double chi = p.chis[0].value(t);
        const double gdot = p.gamma.derivative(t);
        const auto h = engineered_fields(p, t);
        EXPECT_NEAR(h[0], omega.value(t) * std::sin(chi) + gdot * std::cos(chi), 1e-12);
        EXPECT_NEAR(h[1], omega.value(t) * std::cos(chi) - gdot * std::sin(chi), 1e-12);
    }
    // chi(0) = 0 leaves only gamma'(0) = pi^2 / (2 Omega0 T^2) in the first field.
    const auto h0 = engineered_fields(p, 0.0);
    EXPECT_NEAR(h0[0], kPi * kPi / (2.0 * 0.8 * T * T), 1e-12);
    EXPECT_NEAR(h0[1], 0.8, 1e-15);
}

TEST(Engineer, InitialSlopeOfFirstField) {
    // h13 ~ (pi^2 / (2 Omega0 T^2)) near t = 0 from gamma' at the origin.
    const double T = 5.0;
    const double omega0 = 1.3;
    const auto p = passage::default_passage(3, passage::AmplitudeSchedule(omega0, 0.0, T),
                                            std::vector<double>{kPi / 2.0});
    EXPECT_NEAR(p.gamma.derivative(0.0), kPi * kPi / (2.0 * omega0 * T * T), 1e-9);
}

TEST(Engineer, RoundTripAcrossLevelsAndRandomTargets) {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> normal;
    for (int levels : {3, 4, 5}) {
        for (int trial = 0; trial < 2; ++trial) {
            std::vector<double> target(levels, 0.0);
            double norm = 0.0;
            for (int k = 0; k < levels - 1; ++k) {
                target[k] = normal(rng);
                norm += target[k] * target[k];
            }
            for (double &v : target) {
                v /= std::sqrt(norm);
            }
            const double T = minimum_time(1.0) * (trial == 0 ? 1.0 : 4.0);
            const auto p = passage::default_passage(levels, passage::AmplitudeSchedule(1.0, 0.0, T),
                                                    passage::solve_boundary_angles(target));
            EXPECT_LT(round_trip_distance(p), 1e-6) << "levels " << levels;
        }
    }
}

TEST(Engineer, RoundTripWithoutAnsatzIdentity) {
    // Same schedules with the rate weights dropped: cot(gamma) chi' is computed directly
    // and by its series limit at the endpoints.
    const double T = 8.0;
    auto p = passage::default_passage(3, passage::AmplitudeSchedule(1.0, 0.0, T),
                                      std::vector<double>{kPi / 2.0});
    const auto with_identity = inverse_engineer(p, 513);
    p.rate_weights.clear();
    const auto direct = inverse_engineer(p, 513);
    for (int m = 0; m < 2; ++m) {
        for (int i = 0; i < 513; ++i) {
            EXPECT_NEAR(direct.samples(m)[i], with_identity.samples(m)[i], 1e-6);
        }
    }
}

TEST(Engineer, NonRemovableSingularityThrows) {
    const double T = 2.0;
    passage::Passage p{3,
                       passage::AngleSchedule::constant(T, 0.0),
                       {passage::AngleSchedule::linear(T, 0.0, kPi / 2.0)},
                       passage::AmplitudeSchedule(1.0, 0.0, T),
                       {}};
    EXPECT_THROW(engineered_fields(p, 1.0), DivergenceError);
    EXPECT_THROW(inverse_engineer(p), DivergenceError);
}

TEST(Hamiltonian, ZeroFieldsGiveZeroOperator) {
    const auto H = hamiltonian(constant_pulses({0.0, 0.0, 0.0}));
    EXPECT_EQ(H(0.5).norm(), 0.0);
}

TEST(Hamiltonian, StarStructureScaleAndDetuning) {
    const auto H = hamiltonian(constant_pulses({0.3, -0.7}), 1.5, 0.1);
    const quantum::Matrix m = H(0.2);
    EXPECT_NEAR(m(0, 2).real(), 0.45, 1e-15);
    EXPECT_NEAR(m(1, 2).real(), -1.05, 1e-15);
    EXPECT_EQ(m(2, 0), m(0, 2));
    EXPECT_EQ(m(0, 1), quantum::Complex(0.0));
    EXPECT_DOUBLE_EQ(m(0, 0).real(), 0.1);
    EXPECT_DOUBLE_EQ(m(1, 1).real(), 0.1);
    EXPECT_DOUBLE_EQ(m(2, 2).real(), 0.0);
}

TEST(Hamiltonian, StarSpectrumIsZeroAndPlusMinusNorm) {
    const std::vector<double> fields{0.3, -1.1, 0.6, 0.2};
    double r = 0.0;
    for (double f : fields) {
        r += f * f;
    }
    r = std::sqrt(r);
    const Eigen::SelfAdjointEigenSolver<quantum::Matrix> solver(star_matrix(fields));
    const auto ev = solver.eigenvalues();
    EXPECT_NEAR(ev(0), -r, 1e-13);
    EXPECT_NEAR(ev(ev.size() - 1), r, 1e-13);
    for (int i = 1; i + 1 < ev.size(); ++i) {
        EXPECT_NEAR(ev(i), 0.0, 1e-13);
    }
}

TEST(DarkState, LimitingMixingAngles) {
    auto check = [](std::vector<double> fields, double c1, double c2) {
        const auto d = dark_state(constant_pulses(fields), 0.5);
        EXPECT_NEAR(std::abs(d[0] - quantum::Complex(c1)), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(d[1] - quantum::Complex(c2)), 0.0, 1e-15);
        EXPECT_EQ(d[2], quantum::Complex(0.0));
    };
    check({0.0, 1.0}, 1.0, 0.0);
    check({1.0, 0.0}, 0.0, -1.0);
    check({0.5, 0.5}, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0));
    EXPECT_THROW(dark_state(constant_pulses({0.0, 0.0}), 0.5), DomainError);
    EXPECT_THROW(dark_state(constant_pulses({1.0, 1.0, 1.0}), 0.5), DimensionError);
}

TEST(Baselines, StirapShapesAndAdiabaticLimit) {
    const double omega0 = 1.0;
    const double T = 2 * kPi * 40 / omega0;
    const auto p = stirap_baseline(omega0, T);
    EXPECT_NEAR(p.envelope(0, 0.0), 0.0, 1e-15);
    EXPECT_NEAR(p.envelope(1, 0.0), omega0, 1e-15);
    EXPECT_NEAR(p.envelope(0, T), omega0, 1e-15);
    EXPECT_NEAR(p.envelope(1, T), 0.0, 1e-15);
    const double t = 0.3 * T;
    EXPECT_NEAR(std::atan2(p.envelope(0, t), p.envelope(1, t)), kPi * t / (2 * T), 1e-10);
    const auto traj = quantum::evolve_schrodinger(hamiltonian(p), quantum::StateVector::basis(3, 0),
                                                  quantum::TimeGrid(0.0, T, 20000));
    EXPECT_GT(quantum::population(traj.final_state(), 1), 1.0 - 1e-2);
}

TEST(Baselines, ResonantRabiTransfersThroughIntermediateLevel) {
    const double T = 40.0;
    const auto p = rr_baseline(T);
    const auto traj = quantum::evolve_schrodinger(hamiltonian(p), quantum::StateVector::basis(3, 0),
                                                  quantum::TimeGrid(0.0, T, quantum::kDefaultSteps));
    EXPECT_NEAR(quantum::population(traj.final_state(), 1), 1.0, 1e-6);
    EXPECT_NEAR(quantum::population(traj.states[quantum::kDefaultSteps / 2], 2), 1.0, 1e-6);
}

TEST(Baselines, ProtocolNames) {
    for (auto kind : {ProtocolKind::kStirup, ProtocolKind::kStirap, ProtocolKind::kResonantRabi}) {
        EXPECT_EQ(protocol_from_string(to_string(kind)), kind);
    }
    EXPECT_THROW(protocol_from_string("adiabatic"), DomainError);
}

TEST(MinimumTime, ScalesInverselyWithAmplitude) {
    const double t1 = minimum_time(1.0);
    const double t2 = minimum_time(2.0);
    EXPECT_NEAR(t2, t1 / 2.0, 1e-4 * t1);
    EXPECT_THROW(minimum_time(0.0), DomainError);
}

TEST(MinimumTime, BisectionPostcondition) {
    const double omega0 = 1.0;
    const double tau = minimum_time(omega0);
    auto peak = [&](double T) {
        return three_level_pulses({ProtocolKind::kStirup, 0.0}, omega0, T).max_amplitude();
    };
    EXPECT_LE(peak(tau), omega0 * (1 + 1e-12));
    EXPECT_GT(peak(tau * (1 - 2e-3)), omega0);
}

} // namespace
