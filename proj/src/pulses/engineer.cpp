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


#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include "stirup/errors.hpp"
#include "stirup/pulses/pulses.hpp"

namespace stirup::pulses {
namespace {

constexpr double kSingularSin = 1e-6;
constexpr double kVanishingRate = 1e-5;

// cot(gamma) * chi_i' at time t, with the removable singularity at gamma = 0 resolved.
double cot_rate(const passage::Passage &p, int i, double t, double sin_g, double cos_g,
                double gamma_rate) {
    if (!p.rate_weights.empty()) {
        return p.rate_weights[i] * p.omega.value(t);
    }
    const double chi_rate = p.chis[i].derivative(t);
    if (std::abs(sin_g) >= kSingularSin) {
        return cos_g * chi_rate / sin_g;
    }
    // gamma passes through zero: chi_i' / gamma tends to chi_i'' / gamma' provided
    // chi_i' vanishes at the crossing itself.
    const double T = p.duration();
    const double chi_accel = p.chis[i].second_derivative(t);
    if (std::abs(gamma_rate) * T > kVanishingRate) {
        const double deviation = cos_g >= 0.0 ? std::asin(sin_g) : -std::asin(sin_g);
        const double offset = deviation / gamma_rate;
        if (std::abs(chi_rate - chi_accel * offset) * T < kVanishingRate) {
            return chi_accel / gamma_rate;
        }
    } else if (std::abs(chi_rate) * T < kVanishingRate &&
               std::abs(chi_accel) * T * T < kVanishingRate) {
        return 0.0;
    }
    std::ostringstream msg;
    msg << "cot(gamma) term diverges at t = " << t << " ns: gamma = " << std::asin(sin_g)
        << " with chi_" << i + 1 << "' = " << chi_rate << " rad/ns";
    throw DivergenceError(msg.str());
}

} // namespace

std::vector<double> engineered_fields(const passage::Passage &p, double t) {
    const int angles = p.levels - 2;
    if (static_cast<int>(p.chis.size()) != angles) {
        throw DimensionError("passage has " + std::to_string(p.chis.size()) +
                             " chi schedules, expected " + std::to_string(angles));
    }
    if (!p.rate_weights.empty() && static_cast<int>(p.rate_weights.size()) != angles) {
        throw DimensionError("rate weight count does not match the chi schedules");
    }
    const double g = p.gamma.value(t);
    const double g_rate = p.gamma.derivative(t);
    const double sin_g = std::sin(g);
    const double cos_g = std::cos(g);

    std::vector<double> chis(angles);
    Eigen::VectorXd k(angles);
    for (int i = 0; i < angles; ++i) {
        chis[i] = p.chis[i].value(t);
        k(i) = cot_rate(p, i, t, sin_g, cos_g, g_rate);
    }
    const Eigen::VectorXd u = passage::ground_profile(p.levels, chis);
    const Eigen::MatrixXd J = passage::ground_profile_jacobian(p.levels, chis);
    const Eigen::VectorXd h = g_rate * u - J * k;
    return {h.data(), h.data() + h.size()};
}

ControlPulses inverse_engineer(const passage::Passage &p, int nodes) {
    return ControlPulses::sample(
        p.levels, p.duration(),
        [&p](double t, std::span<double> out) {
            const std::vector<double> h = engineered_fields(p, t);
            std::copy(h.begin(), h.end(), out.begin());
        },
        nodes);
}

quantum::Matrix star_matrix(std::span<const double> fields) {
    const int n = static_cast<int>(fields.size()) + 1;
    quantum::Matrix H = quantum::Matrix::Zero(n, n);
    for (int m = 0; m < n - 1; ++m) {
        H(m, n - 1) = fields[m];
        H(n - 1, m) = fields[m];
    }
    return H;
}

quantum::HamiltonianFn hamiltonian(const ControlPulses &pulses, double scale, double detuning) {
    auto shared = std::make_shared<const ControlPulses>(pulses);
    const int n = pulses.levels();
    return {n, [shared, n, scale, detuning](double t) {
                quantum::Matrix H = quantum::Matrix::Zero(n, n);
                for (int m = 0; m < n - 1; ++m) {
                    const double h = scale * shared->envelope(m, t);
                    H(m, n - 1) = h;
                    H(n - 1, m) = h;
                    H(m, m) = detuning;
                }
                return H;
            }};
}

quantum::StateVector dark_state(const ControlPulses &pulses, double t) {
    if (pulses.levels() != 3) {
        throw DimensionError("the dark state is defined for the three-level system only");
    }
    const double h13 = pulses.envelope(0, t);
    const double h23 = pulses.envelope(1, t);
    if (h13 == 0.0 && h23 == 0.0) {
        std::ostringstream msg;
        msg << "dark state undefined at t = " << t << " ns: both envelopes vanish";
        throw DomainError(msg.str());
    }
    const double theta = std::atan2(h13, h23);
    quantum::Vector v(3);
    v << std::cos(theta), -std::sin(theta), 0.0;
    return quantum::StateVector(v);
}

double minimum_time(double omega0, double q) {
    if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
        throw DomainError("minimum_time needs omega0 > 0");
    }
    constexpr double kPi = std::numbers::pi;
    const std::vector<double> angles{kPi / 2};
    auto feasible = [&](double T) {
        const passage::AmplitudeSchedule omega(omega0, q, T);
        const passage::Passage p = passage::default_passage(3, omega, angles);
        return inverse_engineer(p).max_amplitude() <= omega0 * (1.0 + 1e-12);
    };
    double hi = 100.0 / omega0;
    if (!feasible(hi)) {
        throw DomainError("minimum_time: no admissible duration below 100/omega0");
    }
    double lo = 0.5 / omega0;
    while (feasible(lo)) {
        hi = lo;
        lo *= 0.5;
        if (lo < 1e-6 / omega0) {
            return hi;
        }
    }
    while ((hi - lo) > 1e-4 * hi) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? hi : lo) = mid;
    }
    return hi;
}

} // namespace stirup::pulses
