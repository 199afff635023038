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

#include "stirup/passage/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stirup/errors.hpp"

namespace stirup::passage {

AngleSchedule::AngleSchedule(double duration, ScalarFn value, ScalarFn derivative,
                             ScalarFn second_derivative)
    : duration_(duration), value_(std::move(value)), derivative_(std::move(derivative)),
      second_derivative_(std::move(second_derivative)) {
    if (!(duration > 0.0)) {
        throw DomainError("schedule duration must be positive");
    }
    if (!value_ || !derivative_) {
        throw DomainError("schedule requires value and derivative functions");
    }
}

AngleSchedule AngleSchedule::constant(double duration, double angle) {
    return AngleSchedule(
        duration, [angle](double) { return angle; }, [](double) { return 0.0; },
        [](double) { return 0.0; });
}

AngleSchedule AngleSchedule::linear(double duration, double from, double to) {
    const double slope = (to - from) / duration;
    return AngleSchedule(
        duration, [from, slope](double t) { return from + slope * t; },
        [slope](double) { return slope; }, [](double) { return 0.0; });
}

double AngleSchedule::second_derivative(double t) const {
    if (second_derivative_) {
        return second_derivative_(t);
    }
    const double h = 1e-5 * duration_;
    return (derivative_(t + h) - derivative_(t - h)) / (2.0 * h);
}

AngleSchedule AngleSchedule::scaled(double factor) const {
    AngleSchedule self = *this;
    ScalarFn second = second_derivative_
                          ? ScalarFn([self, factor](double t) {
                                return factor * self.second_derivative_(t);
                            })
                          : ScalarFn{};
    return AngleSchedule(
        duration_, [self, factor](double t) { return factor * self.value(t); },
        [self, factor](double t) { return factor * self.derivative(t); }, std::move(second));
}

AmplitudeSchedule::AmplitudeSchedule(double omega0, double q, double duration)
    : omega0_(omega0), q_(q), duration_(duration) {
    if (!(duration > 0.0)) {
        throw DomainError("amplitude schedule duration must be positive");
    }
    if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
        throw DomainError("amplitude schedule needs a finite Omega0 > 0");
    }
    // (1 - cos)^4 peaks at 16, so Q <= -1/16 lets Omega(T/2) reach zero.
    if (!(q > -1.0 / 16.0) || !std::isfinite(q)) {
        throw DomainError("amplitude modulation Q must exceed -1/16");
    }
}

double AmplitudeSchedule::value(double t) const {
    if (q_ == 0.0) {
        return omega0_;
    }
    const double bump = 1.0 - std::cos(2.0 * std::numbers::pi * t / duration_);
    return omega0_ * (1.0 + q_ * std::pow(bump, 4));
}

double AmplitudeSchedule::derivative(double t) const {
    if (q_ == 0.0) {
        return 0.0;
    }
    const double w = 2.0 * std::numbers::pi / duration_;
    const double bump = 1.0 - std::cos(w * t);
    return omega0_ * q_ * 4.0 * std::pow(bump, 3) * w * std::sin(w * t);
}

double derivative_consistency(const AngleSchedule &schedule, int samples) {
    const double T = schedule.duration();
    const double h = 1e-6 * T;
    double worst = 0.0;
    for (int i = 1; i < samples - 1; ++i) {
        const double t = T * i / (samples - 1);
        const double fd = (schedule.value(t + h) - schedule.value(t - h)) / (2.0 * h);
        worst = std::max(worst, std::abs(fd - schedule.derivative(t)));
    }
    return worst;
}

} // namespace stirup::passage
