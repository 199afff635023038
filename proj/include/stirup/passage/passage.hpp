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

#include <numbers>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stirup/passage/schedule.hpp"
#include "stirup/quantum/types.hpp"

namespace stirup::passage {

enum class GammaEndpoint { kZero, kPi };

inline double endpoint_angle(GammaEndpoint e) { return e == GammaEndpoint::kPi ? std::numbers::pi : 0.0; }

/// Boundary data of a user-defined passage in an N-pod.
struct PassageSpec {
    int levels = 3;
    std::vector<double> boundary_angles; ///< s_i = chi_i(T), i = 1..N-2
    GammaEndpoint gamma_endpoint = GammaEndpoint::kZero;
    quantum::Vector initial;   ///< b_n
    std::vector<double> target; ///< c_n, real, zero last entry

    /// Throws DomainError / DimensionError when sizes or norms are off.
    void validate() const;
};

/// The schedules that define a passage, plus the amplitude they were built for.
///
/// When `rate_weights` is non-empty the schedules follow the default ansatz:
/// tan(gamma) = chi0'/Omega and chi_i' = w_i chi0', so cot(gamma) chi_i' = w_i Omega
/// exactly. Inverse engineering uses that identity instead of dividing by sin(gamma).
struct Passage {
    int levels = 3;
    AngleSchedule gamma;
    std::vector<AngleSchedule> chis;
    AmplitudeSchedule omega;
    std::vector<double> rate_weights;

    double duration() const { return gamma.duration(); }
};

/// Real profile u_m (m = 1..N-1) of the ground-like coefficients, a_m = cos(gamma) u_m.
Eigen::VectorXd ground_profile(int levels, std::span<const double> chis);

/// d u_m / d chi_i as an (N-1) x (N-2) matrix.
Eigen::MatrixXd ground_profile_jacobian(int levels, std::span<const double> chis);

/// Coefficient vector for fixed angle values.
quantum::Vector coefficients_at(int levels, double gamma, std::span<const double> chis);

/// Passage coefficients a_n(t) of the hyperspherical N-pod parameterization.
quantum::Vector coefficients(int levels, const AngleSchedule &gamma,
                             std::span<const AngleSchedule> chis, double t);

/// chi(t) = arctan[(1 - cos(pi t/T)) / (1 + cos(pi t/T))]: 0 -> pi/2 with flat ends.
AngleSchedule default_chi(double duration);

/// gamma(t) = arctan(chi'(t) / Omega(t)).
AngleSchedule default_gamma(const AngleSchedule &chi, const AmplitudeSchedule &omega);

/// Default-ansatz passage reaching the given boundary angles:
/// chi_i = (2 s_i / pi) chi_default, gamma = arctan(chi_default' / Omega).
Passage default_passage(int levels, const AmplitudeSchedule &omega,
                        std::span<const double> boundary_angles);

/// Boundary angles s_i whose coefficients at t = T reproduce `target` up to global sign.
std::vector<double> solve_boundary_angles(std::span<const double> target,
                                          GammaEndpoint endpoint = GammaEndpoint::kZero);

struct BoundaryCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct BoundaryReport {
    std::vector<BoundaryCheck> checks;

    bool all_passed() const;
};

/// Checks every boundary condition of the passage; never throws on failure.
BoundaryReport validate_boundaries(const PassageSpec &spec, const AngleSchedule &gamma,
                                   std::span<const AngleSchedule> chis);

/// max_t sin^2(gamma(t)) over a uniform grid (endpoints included).
double intermediate_population_max(const AngleSchedule &gamma, int samples = 8193);

} // namespace stirup::passage
