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


#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stirup/errors.hpp"
#include "stirup/pulses/pulses.hpp"

namespace stirup::pulses {

namespace {
constexpr double kPi = std::numbers::pi;

void check_duration(double T) {
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw DomainError("pulse duration must be positive and finite");
    }
}
} // namespace

ControlPulses stirap_baseline(double omega0, double duration) {
    check_duration(duration);
    return ControlPulses::sample(3, duration, [omega0, duration](double t, std::span<double> out) {
        const double theta = kPi * t / (2.0 * duration);
        out[0] = omega0 * std::sin(theta);
        out[1] = omega0 * std::cos(theta);
    });
}

ControlPulses rr_baseline(double duration) {
    check_duration(duration);
    const double area_rate = kPi / duration;
    return ControlPulses::sample(
        3, duration,
        [area_rate, duration](double t, std::span<double> out) {
            const bool first = t < 0.5 * duration;
            out[0] = first ? area_rate : 0.0;
            out[1] = first ? 0.0 : area_rate;
        },
        kDefaultNodes, Interpolation::kLinear);
}

std::string to_string(ProtocolKind kind) {
    switch (kind) {
    case ProtocolKind::kStirup:
        return "stirup";
    case ProtocolKind::kStirap:
        return "stirap";
    case ProtocolKind::kResonantRabi:
        return "rr";
    }
    return "unknown";
}

ProtocolKind protocol_from_string(const std::string &name) {
    if (name == "stirup") {
        return ProtocolKind::kStirup;
    }
    if (name == "stirap") {
        return ProtocolKind::kStirap;
    }
    if (name == "rr") {
        return ProtocolKind::kResonantRabi;
    }
    throw DomainError("unknown protocol '" + name + "' (expected stirup, stirap or rr)");
}

ControlPulses three_level_pulses(const Protocol &protocol, double omega0, double duration) {
    switch (protocol.kind) {
    case ProtocolKind::kStirup: {
        const passage::AmplitudeSchedule omega(omega0, protocol.q, duration);
        const std::vector<double> angles{kPi / 2};
        return inverse_engineer(passage::default_passage(3, omega, angles));
    }
    case ProtocolKind::kStirap:
        return stirap_baseline(omega0, duration);
    case ProtocolKind::kResonantRabi:
        return rr_baseline(duration);
    }
    throw std::logic_error("unhandled protocol kind");
}

} // namespace stirup::pulses
