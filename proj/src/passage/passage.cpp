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

#include "stirup/passage/passage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "stirup/errors.hpp"

namespace stirup::passage {
namespace {

constexpr double kPi = std::numbers::pi;

enum class Factor { kCos, kSin, kNegSin };

struct Term {
    int angle;
    Factor kind;
};

// Product structure of u_m: a list of single-angle factors per ground-like level.
std::vector<std::vector<Term>> profile_terms(int levels) {
    const int angles = levels - 2;
    std::vector<std::vector<Term>> terms(levels - 1);
    for (int i = 0; i < angles; ++i) {
        terms[0].push_back({i, Factor::kCos});
    }
    for (int k = 2; k <= angles; ++k) {
        terms[k - 1].push_back({k - 2, Factor::kSin});
        for (int i = k - 1; i < angles; ++i) {
            terms[k - 1].push_back({i, Factor::kCos});
        }
    }
    terms[levels - 2] = {{angles - 1, Factor::kNegSin}};
    return terms;
}

double factor_value(Factor f, double x) {
    switch (f) {
    case Factor::kCos:
        return std::cos(x);
    case Factor::kSin:
        return std::sin(x);
    case Factor::kNegSin:
        return -std::sin(x);
    }
    return 0.0;
}

double factor_derivative(Factor f, double x) {
    switch (f) {
    case Factor::kCos:
        return -std::sin(x);
    case Factor::kSin:
        return std::cos(x);
    case Factor::kNegSin:
        return -std::cos(x);
    }
    return 0.0;
}

void check_angle_count(int levels, std::size_t count) {
    if (levels < 3) {
        throw DimensionError("an N-pod needs at least 3 levels");
    }
    if (count != static_cast<std::size_t>(levels - 2)) {
        std::ostringstream msg;
        msg << "expected " << levels - 2 << " chi schedules for N = " << levels << ", got "
            << count;
        throw DimensionError(msg.str());
    }
}

BoundaryCheck make_check(std::string name, double residual, double tolerance) {
    const bool ok = std::isfinite(residual) && residual <= tolerance;
    return {std::move(name), residual, tolerance, ok};
}

} // namespace

Eigen::VectorXd ground_profile(int levels, std::span<const double> chis) {
    check_angle_count(levels, chis.size());
    const auto terms = profile_terms(levels);
    Eigen::VectorXd u(levels - 1);
    for (int m = 0; m < levels - 1; ++m) {
        double v = 1.0;
        for (const auto &term : terms[m]) {
            v *= factor_value(term.kind, chis[term.angle]);
        }
        u(m) = v;
    }
    return u;
}

Eigen::MatrixXd ground_profile_jacobian(int levels, std::span<const double> chis) {
    check_angle_count(levels, chis.size());
    const auto terms = profile_terms(levels);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(levels - 1, levels - 2);
    for (int m = 0; m < levels - 1; ++m) {
        for (std::size_t d = 0; d < terms[m].size(); ++d) {
            double v = factor_derivative(terms[m][d].kind, chis[terms[m][d].angle]);
            for (std::size_t o = 0; o < terms[m].size(); ++o) {
                if (o != d) {
                    v *= factor_value(terms[m][o].kind, chis[terms[m][o].angle]);
                }
            }
            jac(m, terms[m][d].angle) += v;
        }
    }
    return jac;
}

quantum::Vector coefficients_at(int levels, double gamma, std::span<const double> chis) {
    const Eigen::VectorXd u = ground_profile(levels, chis);
    quantum::Vector a(levels);
    const double c = std::cos(gamma);
    for (int m = 0; m < levels - 1; ++m) {
        a(m) = c * u(m);
    }
    a(levels - 1) = -quantum::kI * std::sin(gamma);
    return a;
}

quantum::Vector coefficients(int levels, const AngleSchedule &gamma,
                             std::span<const AngleSchedule> chis, double t) {
    check_angle_count(levels, chis.size());
    std::vector<double> angles(chis.size());
    for (std::size_t i = 0; i < chis.size(); ++i) {
        angles[i] = chis[i].value(t);
    }
    return coefficients_at(levels, gamma.value(t), angles);
}

AngleSchedule default_chi(double duration) {
    if (!(duration > 0.0)) {
        throw DomainError("duration must be positive");
    }
    const double T = duration;
    const double w = kPi / T;
    auto value = [w](double t) {
        const double c = std::cos(w * t);
        return std::atan2(1.0 - c, 1.0 + c);
    };
    auto rate = [w](double t) {
        const double c = std::cos(w * t);
        return w * std::sin(w * t) / (1.0 + c * c);
    };
    auto accel = [w](double t) {
        const double c = std::cos(w * t);
        const double den = 1.0 + c * c;
        return w * w * c * (3.0 - c * c) / (den * den);
    };
    return AngleSchedule(T, value, rate, accel);
}

AngleSchedule default_gamma(const AngleSchedule &chi, const AmplitudeSchedule &omega) {
    auto value = [chi, omega](double t) { return std::atan(chi.derivative(t) / omega.value(t)); };
    auto rate = [chi, omega](double t) {
        const double x1 = chi.derivative(t);
        const double x2 = chi.second_derivative(t);
        const double om = omega.value(t);
        const double dom = omega.derivative(t);
        return (x2 * om - x1 * dom) / (om * om + x1 * x1);
    };
    return AngleSchedule(chi.duration(), value, rate);
}

Passage default_passage(int levels, const AmplitudeSchedule &omega,
                        std::span<const double> boundary_angles) {
    check_angle_count(levels, boundary_angles.size());
    const AngleSchedule base = default_chi(omega.duration());
    std::vector<AngleSchedule> chis;
    std::vector<double> weights;
    for (double s : boundary_angles) {
        const double w = 2.0 * s / kPi;
        chis.push_back(base.scaled(w));
        weights.push_back(w);
    }
    return Passage{levels, default_gamma(base, omega), std::move(chis), omega, std::move(weights)};
}

std::vector<double> solve_boundary_angles(std::span<const double> target, GammaEndpoint endpoint) {
    const int levels = static_cast<int>(target.size());
    if (levels < 3) {
        throw DimensionError("target must have at least 3 entries");
    }
    if (std::abs(target[levels - 1]) > 1e-12) {
        throw DomainError("target occupies the intermediate level");
    }
    double norm2 = 0.0;
    for (double c : target) {
        norm2 += c * c;
    }
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw DomainError("target is not normalized: sum c_n^2 = " + std::to_string(norm2));
    }

    const double sign = std::cos(endpoint_angle(endpoint)) < 0.0 ? -1.0 : 1.0;
    std::vector<double> r(levels - 1);
    for (int m = 0; m < levels - 1; ++m) {
        r[m] = sign * target[m];
    }

    const int angles = levels - 2;
    std::vector<double> s(angles, 0.0);
    auto inner_norm = [&r](int count) {
        double acc = 0.0;
        for (int m = 0; m < count; ++m) {
            acc += r[m] * r[m];
        }
        return std::sqrt(acc);
    };
    if (angles == 1) {
        s[0] = std::atan2(-r[1], r[0]);
        return s;
    }
    // Outermost angle carries the minus sign of u_{N-1}; middle angles keep cos >= 0.
    s[angles - 1] = std::atan2(-r[angles], inner_norm(angles));
    for (int j = angles - 1; j >= 2; --j) {
        s[j - 1] = std::atan2(r[j], inner_norm(j));
    }
    s[0] = std::atan2(r[1], r[0]);
    return s;
}

bool BoundaryReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed; });
}

BoundaryReport validate_boundaries(const PassageSpec &spec, const AngleSchedule &gamma,
                                   std::span<const AngleSchedule> chis) {
    BoundaryReport report;
    auto &out = report.checks;
    const double T = gamma.duration();
    constexpr double kTol = 1e-9;

    out.push_back(make_check("gamma(0) = 0", std::abs(gamma.value(0.0)), kTol));
    out.push_back(make_check("gamma(T) = endpoint",
                             std::abs(gamma.value(T) - endpoint_angle(spec.gamma_endpoint)), kTol));

    if (chis.size() != static_cast<std::size_t>(spec.levels - 2)) {
        out.push_back(make_check("chi schedule count", std::abs(double(chis.size()) -
                                                                (spec.levels - 2)),
                                 0.0));
        return report;
    }
    for (std::size_t i = 0; i < chis.size(); ++i) {
        const std::string tag = "chi_" + std::to_string(i + 1);
        out.push_back(make_check(tag + "(0) = 0", std::abs(chis[i].value(0.0)), kTol));
        if (i < spec.boundary_angles.size()) {
            out.push_back(make_check(tag + "(T) = s",
                                     std::abs(chis[i].value(T) - spec.boundary_angles[i]), kTol));
        }
        // Rates are reported in units of 1/T so the tolerance is dimensionless.
        out.push_back(make_check(tag + "'(0) = 0", std::abs(chis[i].derivative(0.0)) * T, kTol));
        out.push_back(make_check(tag + "'(T) = 0", std::abs(chis[i].derivative(T)) * T, kTol));
    }

    auto phase_residual = [](const quantum::Vector &a, const quantum::Vector &b) {
        if (a.size() != b.size()) {
            return 1.0;
        }
        return std::abs(1.0 - std::abs(a.dot(b)));
    };
    const quantum::Vector start = coefficients(spec.levels, gamma, chis, 0.0);
    if (spec.initial.size() == spec.levels) {
        out.push_back(make_check("a(0) = b", phase_residual(start, spec.initial), kTol));
    }
    if (spec.target.size() == static_cast<std::size_t>(spec.levels)) {
        quantum::Vector c(spec.levels);
        for (int n = 0; n < spec.levels; ++n) {
            c(n) = spec.target[n];
        }
        const quantum::Vector end = coefficients(spec.levels, gamma, chis, T);
        out.push_back(make_check("a(T) = c", phase_residual(end, c), kTol));
    }
    return report;
}

double intermediate_population_max(const AngleSchedule &gamma, int samples) {
    const double T = gamma.duration();
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double s = std::sin(gamma.value(T * i / (samples - 1)));
        worst = std::max(worst, s * s);
    }
    return worst;
}

void PassageSpec::validate() const {
    if (levels < 3) {
        throw DimensionError("an N-pod needs at least 3 levels");
    }
    if (boundary_angles.size() != static_cast<std::size_t>(levels - 2)) {
        throw DimensionError("boundary angle count must be N - 2");
    }
    if (initial.size() != levels || target.size() != static_cast<std::size_t>(levels)) {
        throw DimensionError("initial/target coefficient count must be N");
    }
    if (std::abs(initial.squaredNorm() - 1.0) > 1e-12) {
        throw DomainError("initial coefficients are not normalized");
    }
    double norm2 = 0.0;
    for (double c : target) {
        norm2 += c * c;
    }
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw DomainError("target coefficients are not normalized");
    }
}

} // namespace stirup::passage
