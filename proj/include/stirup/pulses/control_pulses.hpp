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
#include <iosfwd>
#include <span>
#include <vector>

namespace stirup::pulses {

inline constexpr int kDefaultNodes = 8192;

enum class Interpolation { kCubic, kLinear };

/// Sampled control envelopes h_{mN}(t), m = 1..N-1, on a uniform grid over [0, T].
///
/// Envelope index `m` is zero-based: envelope(0, t) is h_{1N}(t).
class ControlPulses {
  public:
    using FieldFn = std::function<void(double t, std::span<double> out)>;

    ControlPulses(int levels, double duration, std::vector<std::vector<double>> samples,
                  Interpolation interpolation = Interpolation::kCubic);

    /// Evaluates `fields` at `nodes` uniformly spaced times including both ends.
    static ControlPulses sample(int levels, double duration, const FieldFn &fields,
                                int nodes = kDefaultNodes,
                                Interpolation interpolation = Interpolation::kCubic);

    int levels() const { return levels_; }
    int envelopes() const { return levels_ - 1; }
    double duration() const { return duration_; }
    int nodes() const { return static_cast<int>(samples_.front().size()); }
    double node_time(int i) const { return duration_ * i / (nodes() - 1); }
    Interpolation interpolation() const { return interpolation_; }

    const std::vector<double> &samples(int m) const { return samples_.at(m); }
    double envelope(int m, double t) const;
    std::vector<double> fields(double t) const;
    double max_amplitude() const { return max_amplitude_; }

  private:
    int levels_;
    double duration_;
    std::vector<std::vector<double>> samples_;
    Interpolation interpolation_;
    double max_amplitude_ = 0.0;
};

/// CSV with header `t_ns,h_1N,...,h_{N-1}N`, one row per sample node.
void write_csv(std::ostream &os, const ControlPulses &pulses);

/// Parses the CSV emitted by write_csv (cubic interpolation assumed).
ControlPulses read_csv(std::istream &is);

} // namespace stirup::pulses
