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


#include "stirup/pulses/control_pulses.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "stirup/csv.hpp"
#include "stirup/errors.hpp"

namespace stirup::pulses {

ControlPulses::ControlPulses(int levels, double duration, std::vector<std::vector<double>> samples,
                             Interpolation interpolation)
    : levels_(levels), duration_(duration), samples_(std::move(samples)),
      interpolation_(interpolation) {
    if (levels_ < 3) {
        throw DimensionError("control pulses need at least 3 levels");
    }
    if (!(duration_ > 0.0) || !std::isfinite(duration_)) {
        throw DomainError("pulse duration must be positive and finite");
    }
    if (static_cast<int>(samples_.size()) != levels_ - 1) {
        throw DimensionError("expected " + std::to_string(levels_ - 1) + " envelopes, got " +
                             std::to_string(samples_.size()));
    }
    const std::size_t n = samples_.front().size();
    if (n < 4) {
        throw DomainError("control pulses need at least 4 sample nodes");
    }
    for (std::size_t m = 0; m < samples_.size(); ++m) {
        if (samples_[m].size() != n) {
            throw DimensionError("envelopes have different sample counts");
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double v = samples_[m][i];
            if (!std::isfinite(v)) {
                std::ostringstream msg;
                msg << "envelope h_" << m + 1 << "N is not finite at t = "
                    << duration_ * static_cast<double>(i) / static_cast<double>(n - 1) << " ns";
                throw DivergenceError(msg.str());
            }
            max_amplitude_ = std::max(max_amplitude_, std::abs(v));
        }
    }
}

ControlPulses ControlPulses::sample(int levels, double duration, const FieldFn &fields, int nodes,
                                    Interpolation interpolation) {
    if (levels < 3) {
        throw DimensionError("control pulses need at least 3 levels");
    }
    if (nodes < 4) {
        throw DomainError("control pulses need at least 4 sample nodes");
    }
    std::vector<std::vector<double>> samples(levels - 1, std::vector<double>(nodes));
    std::vector<double> row(levels - 1);
    for (int i = 0; i < nodes; ++i) {
        const double t = duration * i / (nodes - 1);
        fields(t, row);
        for (int m = 0; m < levels - 1; ++m) {
            samples[m][i] = row[m];
        }
    }
    return ControlPulses(levels, duration, std::move(samples), interpolation);
}

double ControlPulses::envelope(int m, double t) const {
    const std::vector<double> &y = samples_.at(m);
    const int n = static_cast<int>(y.size());
    const double h = duration_ / (n - 1);
    const double x = std::clamp(t, 0.0, duration_) / h;
    int i = std::min(static_cast<int>(x), n - 2);
    if (interpolation_ == Interpolation::kLinear) {
        const double f = x - i;
        return y[i] + f * (y[i + 1] - y[i]);
    }
    // Four-point Lagrange stencil, shifted inward at the ends.
    int first = std::clamp(i - 1, 0, n - 4);
    const double s = x - first;
    const double y0 = y[first], y1 = y[first + 1], y2 = y[first + 2], y3 = y[first + 3];
    const double l0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
    const double l1 = s * (s - 2.0) * (s - 3.0) / 2.0;
    const double l2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
    const double l3 = s * (s - 1.0) * (s - 2.0) / 6.0;
    return l0 * y0 + l1 * y1 + l2 * y2 + l3 * y3;
}

std::vector<double> ControlPulses::fields(double t) const {
    std::vector<double> out(envelopes());
    for (int m = 0; m < envelopes(); ++m) {
        out[m] = envelope(m, t);
    }
    return out;
}

void write_csv(std::ostream &os, const ControlPulses &pulses) {
    std::vector<std::string> header{"t_ns"};
    for (int m = 1; m < pulses.levels(); ++m) {
        header.push_back("h_" + std::to_string(m) + std::to_string(pulses.levels()));
    }
    CsvWriter csv(os, std::move(header));
    std::vector<double> row(pulses.envelopes() + 1);
    for (int i = 0; i < pulses.nodes(); ++i) {
        row[0] = pulses.node_time(i);
        for (int m = 0; m < pulses.envelopes(); ++m) {
            row[m + 1] = pulses.samples(m)[i];
        }
        csv.row(row);
    }
}

ControlPulses read_csv(std::istream &is) {
    const CsvTable table = read_csv_table(is);
    const int columns = static_cast<int>(table.header.size());
    if (columns < 3 || table.header.front() != "t_ns") {
        throw DomainError("pulse CSV header must be t_ns,h_1N,...");
    }
    if (table.rows.size() < 4) {
        throw DomainError("pulse CSV needs at least 4 rows");
    }
    std::vector<std::vector<double>> samples(columns - 1);
    for (const auto &row : table.rows) {
        for (int c = 1; c < columns; ++c) {
            samples[c - 1].push_back(std::stod(row[c]));
        }
    }
    return ControlPulses(columns, std::stod(table.rows.back().front()), std::move(samples));
}

} // namespace stirup::pulses
