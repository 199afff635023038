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


#include "stirup/harness/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "stirup/circuit/scenario.hpp"
#include "stirup/csv.hpp"
#include "stirup/optimizer/q_search.hpp"
#include "stirup/optimizer/robustness.hpp"
#include "stirup/passage/passage.hpp"
#include "stirup/pulses/pulses.hpp"
#include "stirup/quantum/evolve.hpp"
#include "stirup/quantum/metrics.hpp"

namespace stirup::harness {
namespace {

circuit::CircuitModel circuit_model(const ScenarioConfig &config, const Resolved &r) {
    auto params = circuit::CircuitModel::standard(circuit::scenario_qubits(config.scenario), 0.0)
                      .params();
    params.gamma1 = r.gamma1;
    params.gamma2 = r.gamma2;
    params.gamma_c = r.gamma_c;
    return circuit::CircuitModel(params);
}

quantum::StateVector real_state(const std::vector<double> &v) {
    quantum::Vector a(static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        a(static_cast<int>(i)) = v[i];
    }
    return quantum::StateVector(a);
}

template <typename State>
PopulationTrace trace_of(const quantum::Trajectory<State> &traj, std::vector<std::string> labels) {
    PopulationTrace trace{std::move(labels), {}, {}};
    for (int i = 0; i <= traj.grid.steps(); ++i) {
        trace.times.push_back(traj.grid.node(i));
        std::vector<double> p;
        for (int level = 0; level < traj.states[i].dim(); ++level) {
            p.push_back(quantum::population(traj.states[i], level));
        }
        trace.populations.push_back(std::move(p));
    }
    return trace;
}

PointResult run_bare(const ScenarioConfig &config, const Resolved &r, bool keep) {
    RunRecord rec;
    rec.protocol = config.protocol;
    rec.duration = r.duration;
    rec.omega0 = r.omega0;
    const auto pulses = design_pulses(config, &rec.q);
    rec.max_amplitude = pulses.max_amplitude();

    const int n = config.levels;
    const auto target = real_state(r.target);
    const auto psi0 = quantum::StateVector::basis(n, 0);
    const quantum::TimeGrid grid(0.0, r.duration, config.steps);
    const optimizer::Perturbation perturbation{config.eta, config.zeta, r.gamma1, r.gamma2};
    const auto H = optimizer::perturbed_hamiltonian(pulses, perturbation);

    std::vector<std::string> labels;
    for (int level = 1; level <= n; ++level) {
        labels.push_back(std::to_string(level));
    }
    PopulationTrace trace;
    const bool closed = r.gamma1 == 0.0 && r.gamma2 == 0.0;
    if (closed) {
        const auto traj = quantum::evolve_schrodinger(H, psi0, grid);
        rec.fidelity = quantum::transfer_efficiency(traj, target);
        trace = trace_of(traj, labels);
    } else {
        const auto channels = optimizer::bare_channels(n, r.gamma1, r.gamma2);
        const auto traj =
            quantum::evolve_lindblad(H, channels, quantum::DensityMatrix::from_pure(psi0), grid);
        rec.fidelity = quantum::fidelity_mixed(target, traj.final_state());
        trace = trace_of(traj, labels);
    }
    for (const auto &p : trace.populations) {
        rec.population_max = std::max(rec.population_max, p[n - 1]);
    }
    if (closed && config.eta == 0.0 && config.zeta == 0.0) {
        rec.transfer_efficiency = rec.fidelity;
    } else {
        rec.transfer_efficiency = quantum::transfer_efficiency(
            quantum::evolve_schrodinger(pulses::hamiltonian(pulses), psi0, grid), target);
    }
    PointResult out{rec, std::nullopt};
    if (keep) {
        out.artifacts = RunArtifacts{pulses, std::move(trace), std::nullopt};
    }
    return out;
}

PointResult run_circuit(const ScenarioConfig &config, const Resolved &r, bool keep) {
    const auto model = circuit_model(config, r);
    const auto s = circuit::scenario(config.scenario, model);
    const auto run = circuit::simulate_scenario(s, config.eta, config.zeta, config.steps);
    const auto couplings = s.couplings();

    RunRecord rec;
    rec.protocol = config.protocol;
    rec.duration = s.duration;
    rec.omega0 = s.omega0;
    rec.fidelity = run.fidelity;
    rec.population_max = run.population_max;
    rec.max_amplitude = couplings.max_amplitude();
    const auto closed = quantum::evolve_schrodinger(
        circuit::effective_hamiltonian(model, s.map, couplings), s.initial,
        quantum::TimeGrid(0.0, s.duration, config.steps));
    rec.transfer_efficiency = quantum::transfer_efficiency(closed, s.target);

    PointResult out{rec, std::nullopt};
    if (keep) {
        std::vector<std::string> labels;
        for (int level = 0; level <= s.levels(); ++level) {
            labels.push_back(s.map.label(level));
        }
        out.artifacts = RunArtifacts{couplings, trace_of(run.trajectory, labels),
                                     circuit::hardware_schedule(model, couplings)};
    }
    return out;
}

} // namespace

pulses::ControlPulses design_pulses(const ScenarioConfig &config, double *q_used) {
    const Resolved r = resolve(config);
    if (!config.scenario.empty()) {
        const auto s = circuit::scenario(config.scenario, circuit_model(config, r));
        if (q_used) {
            *q_used = 0.0;
        }
        return s.couplings();
    }
    const pulses::ProtocolKind kind = pulses::protocol_from_string(config.protocol);
    double q = config.q;
    if (kind == pulses::ProtocolKind::kStirup && config.q_auto) {
        optimizer::QSearch search;
        search.q_lo = config.q_search.lo;
        search.q_hi = config.q_search.hi;
        search.grid_points = config.q_search.grid_points;
        search.duration = r.duration;
        search.omega0 = r.omega0;
        q = optimizer::optimize_q(search).q;
    }
    if (kind != pulses::ProtocolKind::kStirup) {
        q = 0.0;
    }
    if (q_used) {
        *q_used = q;
    }
    if (kind != pulses::ProtocolKind::kStirup) {
        return pulses::three_level_pulses({kind, 0.0}, r.omega0, r.duration);
    }
    const passage::AmplitudeSchedule omega(r.omega0, q, r.duration);
    const auto angles = passage::solve_boundary_angles(r.target);
    return pulses::inverse_engineer(passage::default_passage(config.levels, omega, angles));
}

PointResult run_point(const ScenarioConfig &config, bool keep_artifacts) {
    const auto start = std::chrono::steady_clock::now();
    const Resolved r = resolve(config);
    PointResult out = config.scenario.empty() ? run_bare(config, r, keep_artifacts)
                                              : run_circuit(config, r, keep_artifacts);
    out.record.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

void ensure_directory(const std::string &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw ConfigError({"output_dir: \"" + dir + "\": cannot be created (" + ec.message() + ")"});
    }
}

std::string write_file(const std::string &dir, const std::string &name,
                       const std::function<void(std::ostream &)> &writer) {
    ensure_directory(dir);
    const std::string path = (std::filesystem::path(dir) / name).string();
    std::ofstream out(path);
    if (!out) {
        throw ConfigError({"output_dir: \"" + path + "\": cannot be written"});
    }
    writer(out);
    return path;
}

RunReport run(const ScenarioConfig &config) {
    PointResult point = run_point(config, true);
    RunReport report{{point.record}};
    const std::string &dir = config.output_dir;
    const std::string &prefix = config.output_prefix;
    write_file(dir, prefix + "_report.csv", [&](std::ostream &os) { write_report_csv(os, report); });
    const RunArtifacts &a = *point.artifacts;
    write_file(dir, prefix + "_pulses.csv", [&](std::ostream &os) { pulses::write_csv(os, a.pulses); });
    write_file(dir, prefix + "_populations.csv",
               [&](std::ostream &os) { write_population_csv(os, a.trace); });
    if (a.hardware) {
        write_file(dir, prefix + "_hardware.csv",
                   [&](std::ostream &os) { circuit::write_csv(os, *a.hardware); });
    }
    return report;
}

void write_report_csv(std::ostream &os, const RunReport &report) {
    CsvWriter csv(os, {"index", "parameter", "value", "protocol", "q", "duration_ns",
                       "omega0_rad_per_ns", "fidelity", "transfer_efficiency", "population_max",
                       "max_amplitude"});
    for (const RunRecord &r : report.records) {
        csv.row({static_cast<double>(r.index), r.parameter.empty() ? std::string("none") : r.parameter,
                 r.value, r.protocol, r.q, r.duration, r.omega0, r.fidelity,
                 r.transfer_efficiency, r.population_max, r.max_amplitude});
    }
}

void write_population_csv(std::ostream &os, const PopulationTrace &trace) {
    std::vector<std::string> header{"t_ns"};
    for (const auto &l : trace.labels) {
        header.push_back("P_" + l);
    }
    CsvWriter csv(os, header);
    std::vector<double> row(header.size());
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        row[0] = trace.times[i];
        std::copy(trace.populations[i].begin(), trace.populations[i].end(), row.begin() + 1);
        csv.row(row);
    }
}

} // namespace stirup::harness
