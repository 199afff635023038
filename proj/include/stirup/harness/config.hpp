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
#include <optional>
#include <string>
#include <vector>

#include "stirup/errors.hpp"

namespace stirup::harness {

/// Invalid configuration; every issue names a path, the offending value and the constraint.
class ConfigError : public Error {
  public:
    explicit ConfigError(std::vector<std::string> issues);

    const std::vector<std::string> &issues() const { return issues_; }

  private:
    std::vector<std::string> issues_;
};

struct SweepSpec {
    /// One of T, gamma_prime, eta, zeta, omega0_T, q.
    std::string parameter;
    std::vector<double> values;

    bool operator==(const SweepSpec &) const = default;
};

struct QSearchConfig {
    double lo = -0.05;
    double hi = 0.1;
    int grid_points = 41;

    bool operator==(const QSearchConfig &) const = default;
};

struct ObjectiveConfig {
    double infidelity_weight = 0.0;
    double eta_weight = 1.0;
    std::vector<double> eta_grid{-0.05, 0.0, 0.05};
    double zeta_weight = 0.0;
    std::vector<double> zeta_grid;
    double population_weight = 0.0;

    bool operator==(const ObjectiveConfig &) const = default;
};

struct FourierConfig {
    int n_c = 2;
    int n_s = 2;
    int restarts = 5;
    int max_evaluations = 200;
    std::uint64_t seed = 20260101;
    double seed_spread = 0.1;
    std::string method = "simplex"; ///< simplex | finite_difference
    ObjectiveConfig objective;

    bool operator==(const FourierConfig &) const = default;
};

/// A run description as written by the user, in the user's units.
struct ScenarioConfig {
    std::string protocol = "stirup"; ///< stirup | stirap | rr
    double q = 0.0;
    bool q_auto = false;
    int levels = 3;
    std::string scenario;            ///< empty for the bare N-pod, else qst2 | qst3 | bell | w
    std::vector<double> target;      ///< empty: |N-1>
    double duration = 2.0;
    std::string duration_unit = "tau_min"; ///< ns | tau_min
    double omega0 = 1.0;
    std::string omega0_unit = "rad_per_ns"; ///< rad_per_ns | 2pi_MHz | 2pi_GHz
    double gamma = 5.0;
    std::string gamma_unit = "2pi_kHz";     ///< 2pi_kHz | 2pi_MHz | rad_per_ns
    double gamma1 = 0.0;  ///< in units of gamma
    double gamma2 = 0.0;  ///< in units of gamma
    double gamma_c = 0.0; ///< in units of gamma (circuit scenarios only)
    double eta = 0.0;
    double zeta = 0.0;
    int steps = 4000;
    std::string output_dir = "out";
    std::string output_prefix = "run";
    std::optional<SweepSpec> sweep;
    QSearchConfig q_search;
    FourierConfig fourier;

    bool operator==(const ScenarioConfig &) const = default;
};

/// Parses JSON text; unknown keys, type errors and domain violations are all collected
/// into one ConfigError.
ScenarioConfig parse_config(const std::string &json_text);

/// Reads and parses a config file.
ScenarioConfig load_config(const std::string &path);

/// Canonical JSON (every key written, defaults included).
std::string serialize_config(const ScenarioConfig &config);

/// Applies the checks of parse_config to an in-memory config.
void validate_config(const ScenarioConfig &config);

/// Config quantities in internal units (ns, rad/ns).
struct Resolved {
    double duration = 0.0;
    double omega0 = 0.0;
    double gamma_unit = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double gamma_c = 0.0;
    std::vector<double> target; ///< N-pod target amplitudes (bare model)
};

Resolved resolve(const ScenarioConfig &config);

/// Converts a value in the named unit to rad/ns.
double to_rad_per_ns(double value, const std::string &unit);

/// Sweep parameter names accepted by SweepSpec.
const std::vector<std::string> &sweep_parameters();

/// Copy of `config` with the sweep parameter set to `value` (sweep removed).
ScenarioConfig apply_sweep_value(const ScenarioConfig &config, const std::string &parameter,
                                 double value);

} // namespace stirup::harness
