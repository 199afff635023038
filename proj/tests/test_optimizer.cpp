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
#include <sstream>

#include "stirup/csv.hpp"
#include "stirup/errors.hpp"
#include "stirup/optimizer/fourier.hpp"
#include "stirup/optimizer/q_search.hpp"
#include "stirup/optimizer/robustness.hpp"
#include "stirup/optimizer/simplex.hpp"
#include "stirup/passage/passage.hpp"
#include "stirup/pulses/pulses.hpp"

namespace {

using namespace stirup;
using namespace stirup::optimizer;
constexpr double kPi = std::numbers::pi;

quantum::StateVector minus_level_two() {
    quantum::Vector v = quantum::Vector::Zero(3);
    v(1) = -1.0;
    return quantum::StateVector(v);
}

TEST(NelderMead, FindsRosenbrockMinimum) {
    const Objective rosen = [](std::span<const double> x) {
        return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
    };
    SimplexOptions opts;
    opts.max_evaluations = 4000;
    opts.initial_step = 0.5;
    const auto r = nelder_mead(rosen, {-1.2, 1.0}, opts);
    EXPECT_NEAR(r.x[0], 1.0, 1e-4);
    EXPECT_NEAR(r.x[1], 1.0, 1e-4);
    EXPECT_LE(r.evaluations, 4000);
}

TEST(NelderMead, TreatsNonFiniteValuesAsInfinite) {
    const Objective f = [](std::span<const double> x) {
        if (x[0] < 0.0) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        return (x[0] - 0.5) * (x[0] - 0.5);
    };
    SimplexOptions opts;
    opts.initial_step = 0.2;
    const auto r = nelder_mead(f, {0.1}, opts);
    EXPECT_NEAR(r.x[0], 0.5, 1e-5);
    EXPECT_TRUE(std::isfinite(r.value));
}

TEST(FiniteDifferenceDescent, MinimizesQuadratic) {
    const Objective f = [](std::span<const double> x) {
        return (x[0] - 1.0) * (x[0] - 1.0) + 3.0 * (x[1] + 2.0) * (x[1] + 2.0);
    };
    GradientOptions opts;
    opts.max_evaluations = 2000;
    const auto r = finite_difference_descent(f, {0.0, 0.0}, opts);
    EXPECT_NEAR(r.x[0], 1.0, 1e-4);
    EXPECT_NEAR(r.x[1], -2.0, 1e-4);
}

TEST(QSearch, ZeroModulationMatchesPassage) {
    const double T = 8.0;
    const auto point = evaluate_q(1.0, 0.0, T);
    const auto p = passage::default_passage(3, passage::AmplitudeSchedule(1.0, 0.0, T),
                                            std::vector<double>{kPi / 2.0});
    EXPECT_NEAR(point.population_max, passage::intermediate_population_max(p.gamma), 1e-12);
    EXPECT_NEAR(point.peak, pulses::inverse_engineer(p).max_amplitude(), 1e-12);
}

TEST(QSearch, OptimumAtMinimumTime) {
    const double omega0 = 1.0;
    QSearch search;
    search.omega0 = omega0;
    search.duration = pulses::minimum_time(omega0);
    const auto r = optimize_q(search);
    EXPECT_TRUE(r.feasible);
    EXPECT_NEAR(r.q, 0.02, 0.3 * 0.02);
    EXPECT_LE(r.peak, r.reference_peak * (1 + 1e-12));
    EXPECT_LT(r.population_max, evaluate_q(omega0, 0.0, search.duration).population_max);
    EXPECT_EQ(r.scan.size(), 41u);
}

TEST(QSearch, OptimumAtFortyMinimumTimes) {
    QSearch search;
    search.omega0 = 1.0;
    search.duration = 40.0 * pulses::minimum_time(1.0);
    EXPECT_NEAR(optimize_q(search).q, 0.0106, 0.3 * 0.0106);
}

TEST(QSearch, RejectsBadSettings) {
    QSearch search;
    search.omega0 = 1.0;
    search.duration = 5.0;
    search.grid_points = 1;
    EXPECT_THROW(optimize_q(search), DomainError);
    search.grid_points = 11;
    search.q_lo = 0.2;
    EXPECT_THROW(optimize_q(search), DomainError);
}

TEST(QSearch, CsvListsScanThenOptimum) {
    QSearch search;
    search.omega0 = 1.0;
    search.duration = 10.0;
    search.grid_points = 5;
    const auto r = optimize_q(search);
    std::stringstream ss;
    write_csv(ss, r);
    const auto table = read_csv_table(ss);
    EXPECT_EQ(table.header,
              (std::vector<std::string>{"stage", "q", "population_max", "peak", "feasible"}));
    ASSERT_EQ(table.rows.size(), 6u);
    EXPECT_NEAR(table.number(5, "q"), r.q, 1e-11 * std::max(1.0, std::abs(r.q)));
}

TEST(Robustness, BareChannelOperators) {
    const auto none = bare_channels(4, 0.0, 0.0);
    EXPECT_TRUE(none.empty());
    const auto both = bare_channels(4, 0.1, 0.2);
    ASSERT_EQ(both.size(), 2u);
    const quantum::Matrix &lower = both[0].op();
    for (int m = 0; m < 3; ++m) {
        EXPECT_EQ(lower(m, 3), quantum::Complex(1.0));
    }
    EXPECT_EQ(lower.cwiseAbs().sum(), 3.0);
    const quantum::Matrix &plus = both[1].op();
    EXPECT_EQ(plus(0, 0), quantum::Complex(0.0));
    EXPECT_EQ(plus.trace(), quantum::Complex(3.0));
    EXPECT_DOUBLE_EQ(both[1].rate(), 0.2);
}

TEST(Robustness, UnperturbedFidelityIsExactTransfer) {
    const auto pulses = pulses::three_level_pulses({pulses::ProtocolKind::kStirup, 0.0}, 1.0,
                                                   2 * pulses::minimum_time(1.0));
    EXPECT_GT(perturbed_fidelity(pulses, minus_level_two(), {}), 1.0 - 1e-6);
    ObjectiveSpec spec;
    spec.infidelity_weight = 1.0;
    EXPECT_LT(robustness_score(pulses, spec, minus_level_two()), 1e-6);
}

TEST(Robustness, MasterEquationAgreesWithSchrodingerForTinyRates) {
    const auto pulses = pulses::three_level_pulses({pulses::ProtocolKind::kStirup, 0.0}, 1.0, 10.0);
    Perturbation closed;
    closed.eta = 0.03;
    Perturbation open = closed;
    open.gamma1 = 1e-14;
    EXPECT_NEAR(perturbed_fidelity(pulses, minus_level_two(), closed),
                perturbed_fidelity(pulses, minus_level_two(), open), 1e-8);
}

TEST(Robustness, GridOrderDoesNotChangeScore) {
    const auto pulses = pulses::three_level_pulses({pulses::ProtocolKind::kStirup, 0.0}, 1.0, 10.0);
    ObjectiveSpec a;
    a.eta_weight = 1.0;
    a.eta_grid = {-0.05, 0.0, 0.05};
    ObjectiveSpec b = a;
    b.eta_grid = {0.05, -0.05, 0.0};
    EXPECT_EQ(robustness_score(pulses, a, minus_level_two()),
              robustness_score(pulses, b, minus_level_two()));
}

TEST(Robustness, ObjectiveValidation) {
    ObjectiveSpec spec;
    spec.eta_weight = -1.0;
    EXPECT_THROW(spec.validate(), DomainError);
    spec.eta_weight = 1.0;
    EXPECT_THROW(spec.validate(), DomainError); // weight without a grid
}

TEST(Fourier, ZeroAnsatzIsDefaultPassage) {
    const double T = 12.0;
    const passage::AmplitudeSchedule omega(1.0, 0.0, T);
    const auto s = schedules_from_ansatz(FourierAnsatz::zero(2, 3), omega);
    const auto chi = passage::default_chi(T);
    const auto gamma = passage::default_gamma(chi, omega);
    for (double t : {0.0, 1.0, 5.5, 11.0, T}) {
        EXPECT_NEAR(s.chi.value(t), chi.value(t), 1e-12);
        EXPECT_NEAR(s.gamma.value(t), gamma.value(t), 1e-12);
        EXPECT_NEAR(s.chi.derivative(t), chi.derivative(t), 1e-12);
    }
}

TEST(Fourier, AnyCoefficientsKeepBoundaries) {
    const double T = 12.0;
    const passage::AmplitudeSchedule omega(1.0, 0.0, T);
    FourierAnsatz ansatz{{0.3, -0.2}, {0.1, 0.05}};
    const auto p = ansatz_passage(ansatz, omega);
    EXPECT_NEAR(p.chis[0].value(0.0), 0.0, 1e-15);
    EXPECT_NEAR(p.chis[0].value(T), kPi / 2.0, 1e-12);
    passage::PassageSpec spec;
    spec.levels = 3;
    spec.boundary_angles = {kPi / 2.0};
    spec.initial = quantum::Vector::Zero(3);
    spec.initial(0) = 1.0;
    spec.target = {0.0, -1.0, 0.0};
    EXPECT_TRUE(passage::validate_boundaries(spec, p.gamma, p.chis).all_passed());
}

TEST(Fourier, PackUnpackRoundTrip) {
    const FourierAnsatz a{{1.0, 2.0, 3.0}, {4.0}};
    const auto b = FourierAnsatz::unpack(3, a.pack());
    EXPECT_EQ(b.c, a.c);
    EXPECT_EQ(b.s, a.s);
}

TEST(Fourier, InfidelityObjectiveNeverRegresses) {
    ObjectiveSpec objective;
    objective.infidelity_weight = 1.0;
    objective.steps = 1000;
    FourierOptions opts;
    opts.restarts = 2;
    opts.max_evaluations = 30;
    const double T = 3 * pulses::minimum_time(1.0);
    const auto r = optimize_fourier(objective, T, 1.0, opts);
    EXPECT_LT(r.zero_objective, 1e-6);
    EXPECT_LE(r.objective, r.zero_objective);
}

TEST(Fourier, RobustObjectiveImprovesOnZeroAnsatz) {
    ObjectiveSpec objective;
    objective.eta_weight = 1.0;
    objective.eta_grid = {-0.05, 0.0, 0.05};
    objective.steps = 1000;
    FourierOptions opts;
    opts.restarts = 2;
    opts.max_evaluations = 60;
    const double T = 3 * pulses::minimum_time(1.0);
    const auto r = optimize_fourier(objective, T, 1.0, opts);
    EXPECT_LT(r.objective, r.zero_objective);
    ASSERT_EQ(r.restarts.size(), 2u);

    const auto again = optimize_fourier(objective, T, 1.0, opts);
    EXPECT_EQ(again.objective, r.objective);
    EXPECT_EQ(again.ansatz.pack(), r.ansatz.pack());

    std::stringstream ss;
    write_csv(ss, r);
    const auto table = read_csv_table(ss);
    EXPECT_EQ(table.header.front(), "restart");
    EXPECT_EQ(table.header.back(), "feasible");
    EXPECT_EQ(table.rows.back().front(), "-1");
}

} // namespace
