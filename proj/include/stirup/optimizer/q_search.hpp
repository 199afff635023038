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

#include <iosfwd>
#include <vector>

namespace stirup::optimizer {

/// Brute-force search for the amplitude-modulation strength Q at fixed T and Omega0.
struct QSearch {
    double q_lo = -0.05;
    double q_hi = 0.1;
    int grid_points = 41;
    double duration = 0.0; ///< ns
    double omega0 = 0.0;   ///< rad/ns
    double refine_tolerance = 1e-10;

    void validate() const;
};

struct QPoint {
    double q = 0.0;
    double population_max = 0.0; ///< max_t sin^2 gamma
    double peak = 0.0;            ///< max |h_mN|
    bool feasible = false;
};

struct QResult {
    double q = 0.0;
    double population_max = 0.0;
    double peak = 0.0;
    double reference_peak = 0.0; ///< peak at Q = 0
    bool feasible = false;       ///< false: nothing met the constraint, q reset to 0
    std::vector<QPoint> scan;    ///< coarse grid, in grid order
};

/// Evaluates one Q value of the three-level default passage.
QPoint evaluate_q(double omega0, double q, double duration);

/// Minimizes max sin^2 gamma subject to peak(Q) <= peak(0), ties toward smaller |Q|.
/// Coarse scan over the grid, then golden-section refinement around the best point.
QResult optimize_q(const QSearch &search);

/// CSV `stage,q,population_max,peak,feasible`: the coarse scan rows, then the optimum.
void write_csv(std::ostream &os, const QResult &result);

} // namespace stirup::optimizer
