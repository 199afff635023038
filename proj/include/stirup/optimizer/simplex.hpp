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
#include <span>
#include <vector>

namespace stirup::optimizer {

using Objective = std::function<double(std::span<const double>)>;

struct SimplexOptions {
    int max_evaluations = 300;
    double initial_step = 0.05;
    double f_tolerance = 1e-12; ///< stop when the simplex value spread falls below this
    double x_tolerance = 1e-9;  ///< or when every vertex lies this close to the best one
};

struct MinimizeResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
};

/// Nelder-Mead downhill simplex (standard coefficients 1, 2, 1/2, 1/2).
/// Non-finite objective values are treated as +infinity.
MinimizeResult nelder_mead(const Objective &f, std::vector<double> x0,
                           const SimplexOptions &options = {});

struct GradientOptions {
    int max_evaluations = 300;
    double difference_step = 1e-4;
    double initial_rate = 0.05;
    double g_tolerance = 1e-10;
};

/// Steepest descent with central finite-difference gradients and backtracking.
MinimizeResult finite_difference_descent(const Objective &f, std::vector<double> x0,
                                         const GradientOptions &options = {});

} // namespace stirup::optimizer
