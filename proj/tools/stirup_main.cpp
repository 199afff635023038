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


#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "stirup/errors.hpp"
#include "stirup/harness/acceptance.hpp"
#include "stirup/harness/config.hpp"
#include "stirup/harness/reproduce.hpp"
#include "stirup/harness/run.hpp"
#include "stirup/optimizer/fourier.hpp"
#include "stirup/optimizer/q_search.hpp"
#include "stirup/pulses/pulses.hpp"

namespace {

using namespace stirup;
using harness::ScenarioConfig;

constexpr int kExitConfig = 2;
constexpr int kExitSimulation = 3;
constexpr int kExitAcceptance = 4;

struct Options {
    std::string config_path;
    std::string out_dir;
    int workers = 0;
    int steps = 0;
    std::string artifact;
};

ScenarioConfig load(const Options &opt) {
    ScenarioConfig config =
        opt.config_path.empty() ? ScenarioConfig{} : harness::load_config(opt.config_path);
    if (!opt.out_dir.empty()) {
        config.output_dir = opt.out_dir;
    }
    if (opt.steps > 0) {
        config.steps = opt.steps;
    }
    harness::validate_config(config);
    return config;
}

void require_bare(const ScenarioConfig &config, const char *command) {
    if (!config.scenario.empty() || config.levels != 3) {
        throw harness::ConfigError({std::string("scenario/levels: ") + command +
                                    " works on the bare three-level system only"});
    }
}

int workers_or_default(int workers) {
    if (workers > 0) {
        return workers;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void print_paths(const std::vector<std::string> &paths) {
    for (const auto &p : paths) {
        std::cout << p << '\n';
    }
}

int cmd_design(const Options &opt) {
    const ScenarioConfig config = load(opt);
    harness::ensure_directory(config.output_dir);
    const auto pulses = harness::design_pulses(config);
    print_paths({harness::write_file(config.output_dir, config.output_prefix + "_pulses.csv",
                                     [&](std::ostream &os) { pulses::write_csv(os, pulses); })});
    return 0;
}

int cmd_simulate(const Options &opt) {
    const ScenarioConfig config = load(opt);
    const auto report = harness::run(config);
    harness::write_report_csv(std::cout, report);
    return 0;
}

int cmd_sweep(const Options &opt) {
    const ScenarioConfig config = load(opt);
    if (!config.sweep) {
        throw harness::ConfigError({"sweep: missing: required by the sweep command"});
    }
    const auto report = harness::sweep(config, workers_or_default(opt.workers));
    harness::write_report_csv(std::cout, report);
    return 0;
}

int cmd_optimize_q(const Options &opt) {
    const ScenarioConfig config = load(opt);
    require_bare(config, "optimize-q");
    const auto r = harness::resolve(config);
    optimizer::QSearch search;
    search.q_lo = config.q_search.lo;
    search.q_hi = config.q_search.hi;
    search.grid_points = config.q_search.grid_points;
    search.duration = r.duration;
    search.omega0 = r.omega0;
    const auto result = optimizer::optimize_q(search);
    harness::ensure_directory(config.output_dir);
    print_paths({harness::write_file(config.output_dir, config.output_prefix + "_qsearch.csv",
                                     [&](std::ostream &os) { optimizer::write_csv(os, result); })});
    std::printf("q=%.12g population_max=%.12g feasible=%d\n", result.q, result.population_max,
                result.feasible ? 1 : 0);
    return 0;
}

int cmd_optimize_fourier(const Options &opt) {
    const ScenarioConfig config = load(opt);
    require_bare(config, "optimize-fourier");
    const auto r = harness::resolve(config);
    const auto &fc = config.fourier;
    optimizer::ObjectiveSpec objective;
    objective.infidelity_weight = fc.objective.infidelity_weight;
    objective.gamma1 = r.gamma1;
    objective.gamma2 = r.gamma2;
    objective.eta_weight = fc.objective.eta_weight;
    objective.eta_grid = fc.objective.eta_grid;
    objective.zeta_weight = fc.objective.zeta_weight;
    objective.zeta_grid = fc.objective.zeta_grid;
    objective.population_weight = fc.objective.population_weight;
    objective.steps = config.steps;

    optimizer::FourierOptions options;
    options.n_c = fc.n_c;
    options.n_s = fc.n_s;
    options.q = config.q;
    options.restarts = fc.restarts;
    options.seed = fc.seed;
    options.seed_spread = fc.seed_spread;
    options.max_evaluations = fc.max_evaluations;
    options.method = fc.method == "finite_difference" ? optimizer::SearchMethod::kFiniteDifference
                                                      : optimizer::SearchMethod::kSimplex;
    const auto result = optimizer::optimize_fourier(objective, r.duration, r.omega0, options);
    const auto pulses = pulses::inverse_engineer(optimizer::ansatz_passage(
        result.ansatz, passage::AmplitudeSchedule(r.omega0, config.q, r.duration)));

    harness::ensure_directory(config.output_dir);
    print_paths({harness::write_file(config.output_dir, config.output_prefix + "_fourier.csv",
                                     [&](std::ostream &os) { optimizer::write_csv(os, result); }),
                 harness::write_file(config.output_dir, config.output_prefix + "_pulses.csv",
                                     [&](std::ostream &os) { pulses::write_csv(os, pulses); })});
    std::printf("objective=%.12g zero_objective=%.12g\n", result.objective,
                result.zero_objective);
    return 0;
}

int cmd_reproduce(const Options &opt) {
    const std::string out = opt.out_dir.empty() ? "out" : opt.out_dir;
    const int steps = opt.steps > 0 ? opt.steps : 4000;
    const int workers = workers_or_default(opt.workers);
    if (opt.artifact == "all") {
        for (const auto &id : harness::artifact_ids()) {
            print_paths(harness::reproduce(id, out, workers, steps));
        }
    } else {
        print_paths(harness::reproduce(opt.artifact, out, workers, steps));
    }
    return 0;
}

int cmd_check(const Options &opt) {
    const auto results = harness::run_acceptance(workers_or_default(opt.workers), &std::cout);
    for (const auto &r : results) {
        if (!r.passed) {
            return kExitAcceptance;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Inverse-engineered N-pod pulse design and simulation"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App *sub, bool with_config) {
        if (with_config) {
            sub->add_option("--config", opt.config_path, "JSON run description")
                ->check(CLI::ExistingFile);
        }
        sub->add_option("--out", opt.out_dir, "output directory");
        sub->add_option("--workers", opt.workers, "worker threads (default: all cores)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--steps", opt.steps, "RK4 steps per simulation")
            ->check(CLI::PositiveNumber);
    };

    struct Command {
        const char *name;
        const char *help;
        int (*fn)(const Options &);
        bool with_config;
    };
    const Command commands[] = {
        {"design", "write the control pulses of a config", cmd_design, true},
        {"simulate", "run one config and write report, pulses and populations", cmd_simulate,
         true},
        {"sweep", "run the config's parameter sweep", cmd_sweep, true},
        {"optimize-q", "search the amplitude-modulation strength Q", cmd_optimize_q, true},
        {"optimize-fourier", "optimize Fourier corrections to the passage", cmd_optimize_fourier,
         true},
        {"reproduce", "write the data behind a figure or table", cmd_reproduce, false},
        {"check", "run the acceptance suite", cmd_check, false},
    };
    int (*selected)(const Options &) = nullptr;
    for (const auto &c : commands) {
        CLI::App *sub = app.add_subcommand(c.name, c.help);
        add_common(sub, c.with_config);
        if (std::string(c.name) == "reproduce") {
            std::string ids = "all";
            for (const auto &id : stirup::harness::artifact_ids()) {
                ids += ", " + id;
            }
            sub->add_option("id", opt.artifact, "artifact id: " + ids)->required();
        }
        sub->callback([&selected, fn = c.fn] { selected = fn; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = 0;
    try {
        code = selected(opt);
    } catch (const stirup::harness::ConfigError &e) {
        std::cerr << "config error:\n";
        for (const auto &issue : e.issues()) {
            std::cerr << "  " << issue << '\n';
        }
        code = kExitConfig;
    } catch (const stirup::Error &e) {
        std::cerr << "simulation error: " << e.what() << '\n';
        code = kExitSimulation;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        code = kExitSimulation;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::fprintf(stderr, "wall time %.3f s\n", seconds);
    return code;
}
