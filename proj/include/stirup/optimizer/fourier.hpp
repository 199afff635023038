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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "stirup/optimizer/robustness.hpp"
#include "stirup/passage/passage.hpp"

namespace stirup::optimizer {

/// Sine-series corrections to the three-level default passage:
///   tau(t)  = (2/pi) chi0(t)
///   chi(t)  = (pi/2) tau + sum_m S_m sin(2 m pi tau)
///   gamma(t) = arctan(chi'(t) / Omega(t)) + sum_n C_n sin(2 n chi)
/// Every term vanishes at both ends, and so does its slope through tau' and chi'.
struct FourierAnsatz {
    std::vector<double> c;
    std::vector<double> s;

    static FourierAnsatz zero(int n_c, int n_s);
    /// Coefficients packed as (C_1..C_nc, S_1..S_ns).
    static FourierAnsatz unpack(int n_c, std::span<const double> packed);
    std::vector<double> pack() const;
};

struct AnsatzSchedules {
    passage::AngleSchedule gamma;
    passage::AngleSchedule chi;
};

AnsatzSchedules schedules_from_ansatz(const FourierAnsatz &ansatz,
                                      const passage::AmplitudeSchedule &omega);

/// Three-level passage |1> -> -|2> built from the ansatz.
passage::Passage ansatz_passage(const FourierAnsatz &ansatz, const passage::AmplitudeSchedule &omega);

enum class SearchMethod { kSimplex, kFiniteDifference };

struct FourierOptions {
    int n_c = 2;
    int n_s = 2;
    double q = 0.0;
    int restarts = 5;
    std::uint64_t seed = 20260101;
    double seed_spread = 0.1;     ///< restarts after the first draw coefficients in [-spread, spread]
    int max_evaluations = 200;    ///< per restart
    double amplitude_cap = 4.0;   ///< designs with peak > cap * Omega0 score +infinity
    SearchMethod method = SearchMethod::kSimplex;

    void validate() const;
};

/// Objective of one coefficient vector; +infinity when the design diverges or exceeds the cap.
double fourier_objective(const FourierAnsatz &ansatz, const ObjectiveSpec &objective,
                         const passage::AmplitudeSchedule &omega, const FourierOptions &options);

struct RestartRecord {
    std::vector<double> start;
    std::vector<double> best;
    double objective = 0.0;
    int evaluations = 0;
};

struct FourierResult {
    FourierAnsatz ansatz;
    double objective = 0.0;
    double zero_objective = 0.0;
    std::vector<RestartRecord> restarts;
};

/// Restarted local search; the first restart starts from all-zero coefficients and
/// the result is never worse than the all-zero ansatz.
FourierResult optimize_fourier(const ObjectiveSpec &objective, double duration, double omega0,
                               const FourierOptions &options = {});

/// CSV `restart,C_1..,S_1..,objective,feasible`; restart -1 is the returned optimum.
void write_csv(std::ostream &os, const FourierResult &result);

} // namespace stirup::optimizer
