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


#include "stirup/optimizer/q_search.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include "stirup/errors.hpp"
#include "stirup/csv.hpp"
#include "stirup/passage/passage.hpp"
#include "stirup/pulses/pulses.hpp"

namespace stirup::optimizer {

void QSearch::validate() const {
    if (!(q_lo < q_hi)) {
        throw DomainError("Q search bounds must satisfy q_lo < q_hi");
    }
    if (grid_points < 3) {
        throw DomainError("Q search needs at least 3 grid points");
    }
    if (!(duration > 0.0) || !(omega0 > 0.0)) {
        throw DomainError("Q search needs positive duration and omega0");
    }
    if (!(refine_tolerance > 0.0)) {
        throw DomainError("Q search refine tolerance must be positive");
    }
}

QPoint evaluate_q(double omega0, double q, double duration) {
    const passage::AmplitudeSchedule omega(omega0, q, duration);
    const std::vector<double> angles{std::numbers::pi / 2};
    const passage::Passage p = passage::default_passage(3, omega, angles);
    QPoint point;
    point.q = q;
    point.population_max = passage::intermediate_population_max(p.gamma);
    point.peak = pulses::inverse_engineer(p).max_amplitude();
    return point;
}

QResult optimize_q(const QSearch &search) {
    search.validate();
    QResult result;
    result.reference_peak = evaluate_q(search.omega0, 0.0, search.duration).peak;
    const double limit = result.reference_peak * (1.0 + 1e-12);

    auto evaluate = [&](double q) {
        QPoint pt = evaluate_q(search.omega0, q, search.duration);
        pt.feasible = pt.peak <= limit;
        return pt;
    };
    auto better = [](const QPoint &a, const QPoint &b) {
        if (a.population_max != b.population_max) {
            return a.population_max < b.population_max;
        }
        return std::abs(a.q) < std::abs(b.q);
    };

    int best_index = -1;
    const int n = search.grid_points;
    for (int i = 0; i < n; ++i) {
        const double q = search.q_lo + (search.q_hi - search.q_lo) * i / (n - 1);
        result.scan.push_back(evaluate(q));
        const QPoint &pt = result.scan.back();
        if (pt.feasible && (best_index < 0 || better(pt, result.scan[best_index]))) {
            best_index = i;
        }
    }
    if (best_index < 0) {
        result.q = 0.0;
        const QPoint zero = evaluate(0.0);
        result.population_max = zero.population_max;
        result.peak = zero.peak;
        result.feasible = false;
        return result;
    }

    QPoint best = result.scan[best_index];
    const double step = (search.q_hi - search.q_lo) / (n - 1);
    double a = std::max(search.q_lo, best.q - step);
    double b = std::min(search.q_hi, best.q + step);
    auto cost = [&](double q) {
        const QPoint pt = evaluate(q);
        if (pt.feasible && better(pt, best)) {
            best = pt;
        }
        return pt.feasible ? pt.population_max : std::numeric_limits<double>::infinity();
    };
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - ratio * (b - a);
    double x2 = a + ratio * (b - a);
    double f1 = cost(x1);
    double f2 = cost(x2);
    while (b - a > search.refine_tolerance) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - ratio * (b - a);
            f1 = cost(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + ratio * (b - a);
            f2 = cost(x2);
        }
    }
    result.q = best.q;
    result.population_max = best.population_max;
    result.peak = best.peak;
    result.feasible = true;
    return result;
}

void write_csv(std::ostream &os, const QResult &result) {
    CsvWriter csv(os, {"stage", "q", "population_max", "peak", "feasible"});
    for (const QPoint &pt : result.scan) {
        csv.row({std::string("scan"), pt.q, pt.population_max, pt.peak, pt.feasible ? 1.0 : 0.0});
    }
    csv.row({std::string("optimum"), result.q, result.population_max, result.peak,
             result.feasible ? 1.0 : 0.0});
}

} // namespace stirup::optimizer
