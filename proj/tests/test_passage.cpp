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
#include "stirup/passage/passage.hpp"
#include "stirup/passage/schedule.hpp"

namespace {

using namespace stirup;
using namespace stirup::passage;
constexpr double kPi = std::numbers::pi;

void expect_vector_near(const quantum::Vector &actual, std::initializer_list<double> expected,
                        double tol) {
    ASSERT_EQ(actual.size(), static_cast<Eigen::Index>(expected.size()));
    int i = 0;
    for (double e : expected) {
        EXPECT_NEAR(std::abs(actual(i) - quantum::Complex(e, 0.0)), 0.0, tol) << "index " << i;
        ++i;
    }
}

PassageSpec three_level_spec(double s) {
    PassageSpec spec;
    spec.levels = 3;
    spec.boundary_angles = {s};
    spec.initial = quantum::Vector::Zero(3);
    spec.initial(0) = 1.0;
    spec.target = {std::cos(s), -std::sin(s), 0.0};
    return spec;
}

TEST(AmplitudeSchedule, ModulationProfile) {
    const AmplitudeSchedule omega(2.0, 0.05, 10.0);
    EXPECT_DOUBLE_EQ(omega.value(0.0), 2.0);
    EXPECT_NEAR(omega.value(5.0), 2.0 * (1.0 + 16.0 * 0.05), 1e-12);
    EXPECT_NEAR(omega.derivative(5.0), 0.0, 1e-12);
    const double h = 1e-5;
    EXPECT_NEAR(omega.derivative(2.3), (omega.value(2.3 + h) - omega.value(2.3 - h)) / (2 * h),
                1e-8);
    EXPECT_THROW(AmplitudeSchedule(-1.0, 0.0, 1.0), DomainError);
    EXPECT_THROW(AmplitudeSchedule(1.0, -0.0625, 1.0), DomainError);
}

TEST(DefaultChi, BoundaryAndMidpointValues) {
    const double T = 7.0;
    const auto chi = default_chi(T);
    EXPECT_NEAR(chi.value(0.0), 0.0, 1e-15);
    EXPECT_NEAR(chi.value(T), kPi / 2.0, 1e-15);
    EXPECT_NEAR(chi.value(T / 2.0), kPi / 4.0, 1e-14);
    EXPECT_NEAR(chi.derivative(T / 2.0), kPi / T, 1e-14);
    EXPECT_NEAR(chi.derivative(0.0), 0.0, 1e-15);
    EXPECT_NEAR(chi.derivative(T), 0.0, 1e-15);
    EXPECT_LT(derivative_consistency(chi), 1e-6);
}

TEST(DefaultChi, MatchesTangentSquaredForm) {
    const double T = 3.0;
    const auto chi = default_chi(T);
    for (double t : {0.3, 1.1, 1.9, 2.6}) {
        const double tn = std::tan(kPi * t / (2 * T));
        EXPECT_NEAR(chi.value(t), std::atan(tn * tn), 1e-14);
    }
}

TEST(DefaultGamma, MidpointAngleAtTwoPiArea) {
    const double omega0 = 1.0;
    const double T = 2 * kPi / omega0;
    const AmplitudeSchedule omega(omega0, 0.0, T);
    const auto gamma = default_gamma(default_chi(T), omega);
    EXPECT_NEAR(gamma.value(0.0), 0.0, 1e-15);
    EXPECT_NEAR(gamma.value(T / 2.0), std::atan(0.5), 1e-14);
    EXPECT_NEAR(std::pow(std::sin(gamma.value(T / 2.0)), 2), 0.2, 1e-14);
    EXPECT_NEAR(intermediate_population_max(gamma), 0.2, 1e-12);
    EXPECT_LT(derivative_consistency(gamma), 1e-6);
}

TEST(DefaultGamma, ModulationLowersMidpointAngle) {
    const double T = 2 * kPi;
    const auto chi = default_chi(T);
    const auto flat = default_gamma(chi, AmplitudeSchedule(1.0, 0.0, T));
    const auto modulated = default_gamma(chi, AmplitudeSchedule(1.0, 0.02, T));
    EXPECT_LT(modulated.value(T / 2.0), flat.value(T / 2.0));
    EXPECT_LT(intermediate_population_max(modulated), intermediate_population_max(flat));
}

TEST(Coefficients, ThreeLevelCases) {
    const double chis0[] = {0.0};
    expect_vector_near(coefficients_at(3, 0.0, chis0), {1.0, 0.0, 0.0}, 1e-15);
    const double chis1[] = {kPi / 2.0};
    expect_vector_near(coefficients_at(3, 0.0, chis1), {0.0, -1.0, 0.0}, 1e-15);
}

TEST(Coefficients, FourLevelEqualSuperposition) {
    const double chis[] = {kPi / 4.0, -std::asin(1.0 / std::sqrt(3.0))};
    const double c = 1.0 / std::sqrt(3.0);
    expect_vector_near(coefficients_at(4, 0.0, chis), {c, c, c, 0.0}, 1e-14);
}

TEST(Coefficients, AlwaysNormalized) {
    const double chis[] = {0.3, -1.2, 2.2};
    for (double g : {0.0, 0.4, 1.3, kPi}) {
        EXPECT_NEAR(coefficients_at(5, g, chis).norm(), 1.0, 1e-14);
    }
    EXPECT_NEAR(std::abs(coefficients_at(5, kPi / 2, chis)(4) - quantum::Complex(0.0, -1.0)),
                0.0, 1e-15);
}

TEST(Coefficients, WrongAngleCountThrows) {
    const double chis[] = {0.1, 0.2};
    EXPECT_THROW(coefficients_at(3, 0.0, chis), DimensionError);
}

TEST(GroundProfile, JacobianMatchesFiniteDifference) {
    std::vector<double> chis{0.4, -0.7, 1.1};
    const auto jac = ground_profile_jacobian(5, chis);
    const double h = 1e-6;
    for (int i = 0; i < 3; ++i) {
        auto up = chis;
        auto down = chis;
        up[i] += h;
        down[i] -= h;
        const Eigen::VectorXd fd = (ground_profile(5, up) - ground_profile(5, down)) / (2 * h);
        EXPECT_LT((jac.col(i) - fd).norm(), 1e-8);
    }
}

TEST(BoundaryAngles, KnownTargets) {
    const double a[] = {0.0, -1.0, 0.0};
    EXPECT_NEAR(solve_boundary_angles(a)[0], kPi / 2.0, 1e-14);
    const double r = 1.0 / std::sqrt(2.0);
    const double b[] = {r, r, 0.0};
    EXPECT_NEAR(solve_boundary_angles(b)[0], -kPi / 4.0, 1e-14);
    const double c = 1.0 / std::sqrt(3.0);
    const double w[] = {c, c, c, 0.0};
    const auto s = solve_boundary_angles(w);
    EXPECT_NEAR(s[0], kPi / 4.0, 1e-14);
    EXPECT_NEAR(s[1], -std::asin(c), 1e-14);
}

TEST(BoundaryAngles, ReproduceRandomTargetsUpToSign) {
    const std::vector<std::vector<double>> targets{
        {0.3, -0.5, std::sqrt(1 - 0.09 - 0.25), 0.0},
        {-0.1, 0.7, 0.2, -std::sqrt(1 - 0.01 - 0.49 - 0.04), 0.0},
        {-1.0, 0.0, 0.0}};
    for (const auto &t : targets) {
        const auto s = solve_boundary_angles(t);
        const auto a = coefficients_at(static_cast<int>(t.size()), 0.0, s);
        double plus = 0.0;
        double minus = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            plus += std::norm(a(i) - t[i]);
            minus += std::norm(a(i) + t[i]);
        }
        EXPECT_LT(std::min(plus, minus), 1e-24);
    }
}

TEST(BoundaryAngles, RejectsInvalidTargets) {
    const double unnormalized[] = {1.0, 1.0, 0.0};
    EXPECT_THROW(solve_boundary_angles(unnormalized), DomainError);
    const double excited[] = {0.0, 0.0, 1.0};
    EXPECT_THROW(solve_boundary_angles(excited), DomainError);
}

TEST(ValidateBoundaries, DefaultSchedulesPass) {
    const double T = 10.0;
    const AmplitudeSchedule omega(1.0, 0.0, T);
    const double s[] = {kPi / 2.0};
    const auto p = default_passage(3, omega, s);
    const auto report = validate_boundaries(three_level_spec(kPi / 2.0), p.gamma, p.chis);
    EXPECT_TRUE(report.all_passed());
}

TEST(ValidateBoundaries, LinearChiFailsSlopeChecks) {
    const double T = 10.0;
    const std::vector<AngleSchedule> chis{AngleSchedule::linear(T, 0.0, kPi / 2.0)};
    const auto gamma = AngleSchedule::constant(T, 0.0);
    const auto report = validate_boundaries(three_level_spec(kPi / 2.0), gamma, chis);
    EXPECT_FALSE(report.all_passed());
    bool slope_failed = false;
    for (const auto &c : report.checks) {
        if (!c.passed && c.name.find("chi") != std::string::npos) {
            slope_failed = true;
        }
    }
    EXPECT_TRUE(slope_failed);
}

TEST(ValidateBoundaries, PiEndpointAcceptedWhenDeclared) {
    const double T = 4.0;
    const auto gamma = AngleSchedule(
        T, [T](double t) { return kPi * t / T; }, [T](double) { return kPi / T; });
    const std::vector<AngleSchedule> chis{default_chi(T)};
    auto spec = three_level_spec(kPi / 2.0);
    spec.gamma_endpoint = GammaEndpoint::kPi;
    EXPECT_TRUE(validate_boundaries(spec, gamma, chis).all_passed());
    spec.gamma_endpoint = GammaEndpoint::kZero;
    EXPECT_FALSE(validate_boundaries(spec, gamma, chis).all_passed());
}

TEST(IntermediatePopulation, ZeroForVanishingGamma) {
    EXPECT_DOUBLE_EQ(intermediate_population_max(AngleSchedule::constant(3.0, 0.0)), 0.0);
}

TEST(AngleSchedule, ScaledMultipliesEverything) {
    const auto chi = default_chi(5.0).scaled(-0.5);
    const auto ref = default_chi(5.0);
    EXPECT_DOUBLE_EQ(chi.value(1.7), -0.5 * ref.value(1.7));
    EXPECT_DOUBLE_EQ(chi.derivative(1.7), -0.5 * ref.derivative(1.7));
}

} // namespace
