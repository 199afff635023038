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

#include <functional>

namespace stirup::passage {

using ScalarFn = std::function<double(double)>;

/// Scalar angle of time (radians) with its first and second derivatives.
///
/// The second derivative is only consulted when a cot(gamma) singularity has
/// to be resolved by a series limit; if none is supplied it is estimated by a
/// central difference of the first derivative.
class AngleSchedule {
  public:
    AngleSchedule(double duration, ScalarFn value, ScalarFn derivative,
                  ScalarFn second_derivative = {});

    static AngleSchedule constant(double duration, double angle);
    /// angle(t) = from + (to - from) t / T.
    static AngleSchedule linear(double duration, double from, double to);

    double duration() const { return duration_; }
    double value(double t) const { return value_(t); }
    double derivative(double t) const { return derivative_(t); }
    double second_derivative(double t) const;

    /// Same schedule multiplied by a constant factor.
    AngleSchedule scaled(double factor) const;

  private:
    double duration_;
    ScalarFn value_;
    ScalarFn derivative_;
    ScalarFn second_derivative_;
};

/// Omega(t) = Omega0 [1 + Q (1 - cos(2 pi t / T))^4], in rad/ns.
class AmplitudeSchedule {
  public:
    AmplitudeSchedule(double omega0, double q, double duration);

    double omega0() const { return omega0_; }
    double q() const { return q_; }
    double duration() const { return duration_; }

    double value(double t) const;
    double derivative(double t) const;

  private:
    double omega0_;
    double q_;
    double duration_;
};

/// Largest |value'(t) - central difference of value| over `samples` interior nodes.
double derivative_consistency(const AngleSchedule &schedule, int samples = 2001);

} // namespace stirup::passage
