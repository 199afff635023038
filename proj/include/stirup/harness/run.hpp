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
#include <optional>
#include <string>
#include <vector>

#include "stirup/circuit/model.hpp"
#include "stirup/harness/config.hpp"
#include "stirup/pulses/control_pulses.hpp"

namespace stirup::harness {

/// One simulated configuration.
struct RunRecord {
    int index = 0;
    std::string parameter; ///< swept parameter, empty for single runs
    double value = 0.0;
    std::string protocol;
    double q = 0.0;
    double duration = 0.0;            ///< ns
    double omega0 = 0.0;              ///< rad/ns
    double fidelity = 0.0;            ///< with decoherence and errors applied
    double transfer_efficiency = 0.0; ///< closed system, no errors
    double population_max = 0.0;      ///< max_t population of the intermediate level
    double max_amplitude = 0.0;       ///< rad/ns
    double wall_seconds = 0.0;        ///< never written to CSV
};

struct RunReport {
    std::vector<RunRecord> records;
};

/// Level populations along the simulated trajectory.
struct PopulationTrace {
    std::vector<std::string> labels;
    std::vector<double> times;
    std::vector<std::vector<double>> populations; ///< [node][level]
};

struct RunArtifacts {
    pulses::ControlPulses pulses;
    PopulationTrace trace;
    std::optional<circuit::HardwareSchedule> hardware;
};

struct PointResult {
    RunRecord record;
    std::optional<RunArtifacts> artifacts;
};

/// Pulses a config describes (Q search performed when q is "auto"); `q_used` receives Q.
pulses::ControlPulses design_pulses(const ScenarioConfig &config, double *q_used = nullptr);

/// Simulates one config without touching the file system.
PointResult run_point(const ScenarioConfig &config, bool keep_artifacts);

/// Single run: writes <prefix>_report.csv, <prefix>_pulses.csv, <prefix>_populations.csv
/// (and <prefix>_hardware.csv for circuit scenarios) under output_dir.
RunReport run(const ScenarioConfig &config);

/// Runs `body(i)` for i in [0, count) on `workers` threads; the exception of the lowest
/// failing index is rethrown after all workers stop.
void parallel_for(int count, int workers, const std::function<void(int)> &body);

/// Sweep over config.sweep; records are in grid order whatever the scheduling.
/// Writes <prefix>_sweep.csv.
RunReport sweep(const ScenarioConfig &config, int workers);

/// CSV `index,parameter,value,protocol,q,duration_ns,omega0_rad_per_ns,fidelity,
/// transfer_efficiency,population_max,max_amplitude`.
void write_report_csv(std::ostream &os, const RunReport &report);

void write_population_csv(std::ostream &os, const PopulationTrace &trace);

/// Creates the directory (and parents) or throws ConfigError.
void ensure_directory(const std::string &dir);

/// Writes `text` to dir/name and returns the path.
std::string write_file(const std::string &dir, const std::string &name,
                       const std::function<void(std::ostream &)> &writer);

} // namespace stirup::harness
