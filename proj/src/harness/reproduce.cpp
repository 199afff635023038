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


#include "stirup/harness/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>

#include "stirup/circuit/scenario.hpp"
#include "stirup/csv.hpp"
#include "stirup/harness/bench.hpp"
#include "stirup/harness/config.hpp"
#include "stirup/harness/run.hpp"
#include "stirup/optimizer/q_search.hpp"
#include "stirup/quantum/metrics.hpp"
#include "stirup/units.hpp"

namespace stirup::harness {
namespace {

constexpr double kTwoPi = units::kTwoPi;

using pulses::Protocol;
using pulses::ProtocolKind;

const Protocol kStirup{ProtocolKind::kStirup, 0.0};
const Protocol kStirap{ProtocolKind::kStirap, 0.0};
const Protocol kRr{ProtocolKind::kResonantRabi, 0.0};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

std::string emit_table(const std::string &dir, const std::string &name, const Table &t) {
    return write_file(dir, name, [&](std::ostream &os) {
        CsvWriter csv(os, t.header);
        for (const auto &row : t.rows) {
            csv.row(row);
        }
    });
}

std::string emit_plot(const std::string &dir, const std::string &id, const std::string &body) {
    return write_file(dir, id + ".gp", [&](std::ostream &os) {
        os << "set datafile separator ','\n"
           << "set key autotitle columnhead\n"
           << "set terminal pngcairo size 900,600\n"
           << "set output '" << id << ".png'\n"
           << body;
    });
}

/// Ten durations spread linearly over [tau_min, 40 tau_min] (in units of tau_min).
std::vector<double> duration_ratios() {
    std::vector<double> r;
    for (int k = 0; k < 10; ++k) {
        r.push_back(1.0 + 39.0 * k / 9.0);
    }
    return r;
}

std::vector<std::string> fig2a(const std::string &dir, int workers, int steps) {
    const std::vector<double> products{kTwoPi,      kTwoPi * 2,  kTwoPi * 5, kTwoPi * 10,
                                       kTwoPi * 20, kTwoPi * 30, kTwoPi * 40};
    Table t{{"omega0_T", "d_max"}, std::vector<std::vector<double>>(products.size())};
    parallel_for(static_cast<int>(products.size()), workers, [&](int i) {
        t.rows[i] = {products[i], bench::dark_state_distance(1.0, products[i], steps)};
    });
    return {emit_table(dir, "fig2a.csv", t),
            emit_plot(dir, "fig2a",
                      "set logscale xy\nset xlabel 'Omega0 T'\nset ylabel 'D_max'\n"
                      "plot 'fig2a.csv' using 1:2 with linespoints\n")};
}

// P3max (population) or 1 - Fe (error) for STIRAP, STIRUP, STIRUP-OP over the duration grid.
std::vector<std::string> fig2bc(const std::string &dir, const std::string &id, bool population,
                                int workers, int steps) {
    const double tau = pulses::minimum_time(1.0, 0.0);
    const auto ratios = duration_ratios();
    Table t{{"t_over_tau_min", "omega0_T", "stirap", "stirup", "stirup_op", "q_op"},
            std::vector<std::vector<double>>(ratios.size())};
    parallel_for(static_cast<int>(ratios.size()), workers, [&](int i) {
        const double T = ratios[i] * tau;
        const double q = bench::optimal_q(1.0, T);
        std::vector<double> row{ratios[i], T};
        for (const Protocol &p : {kStirap, kStirup, Protocol{ProtocolKind::kStirup, q}}) {
            const auto pulses = pulses::three_level_pulses(p, 1.0, T);
            if (population) {
                row.push_back(bench::closed_population_max(pulses, steps));
            } else {
                row.push_back(1.0 - optimizer::perturbed_fidelity(
                                        pulses, quantum::StateVector::basis(3, 1), {}, steps));
            }
        }
        row.push_back(q);
        t.rows[i] = row;
    });
    const std::string ylabel = population ? "P3_max" : "1 - F_e";
    const std::string log = population ? "set logscale x\n" : "set logscale xy\n";
    return {emit_table(dir, id + ".csv", t),
            emit_plot(dir, id,
                      log + "set xlabel 'Omega0 T'\nset ylabel '" + ylabel + "'\n" + "plot '" + id +
                          ".csv' using 2:3 with linespoints, '' using 2:4 with linespoints, "
                          "'' using 2:5 with linespoints\n")};
}

// 1 - F over decay or dephasing rate x duration, for STIRUP (Q = 0) or STIRUP-OP.
std::vector<std::string> fig2de(const std::string &dir, const std::string &id, bool optimized,
                                int workers, int steps) {
    const double omega0 = bench::robustness_omega0();
    const double tau = pulses::minimum_time(omega0, 0.0);
    const auto ratios = duration_ratios();
    const std::vector<double> rates{0, 2, 4, 6, 8, 10};
    struct Point {
        int channel;
        double rate;
        double ratio;
    };
    std::vector<Point> points;
    for (int channel = 0; channel < 2; ++channel) {
        for (double rate : rates) {
            for (double ratio : ratios) {
                points.push_back({channel, rate, ratio});
            }
        }
    }
    std::vector<double> qs(ratios.size(), 0.0);
    if (optimized) {
        parallel_for(static_cast<int>(ratios.size()), workers,
                     [&](int i) { qs[i] = bench::optimal_q(omega0, ratios[i] * tau); });
    }
    Table t{{"channel", "rate_units_gamma", "t_over_tau_min", "duration_ns", "q", "error"},
            std::vector<std::vector<double>>(points.size())};
    parallel_for(static_cast<int>(points.size()), workers, [&](int i) {
        const Point &p = points[i];
        const auto k = static_cast<std::size_t>(
            std::find(ratios.begin(), ratios.end(), p.ratio) - ratios.begin());
        const double T = p.ratio * tau;
        optimizer::Perturbation pert;
        (p.channel == 0 ? pert.gamma1 : pert.gamma2) = p.rate * units::kGammaUnit;
        const double f = bench::protocol_fidelity({ProtocolKind::kStirup, qs[k]}, omega0, T, pert,
                                                  steps);
        t.rows[i] = {static_cast<double>(p.channel), p.rate, p.ratio, T, qs[k], 1.0 - f};
    });
    return {emit_table(dir, id + ".csv", t),
            emit_plot(dir, id,
                      "# channel 0: decay (Gamma1), channel 1: dephasing (Gamma2)\n"
                      "set xlabel 'T / tau_min'\nset ylabel 'rate / Gamma'\nset zlabel '1 - F'\n"
                      "splot '" + id + ".csv' using ($1==0 ? $3 : 1/0):2:6 with points title "
                      "'decay', '' using ($1==1 ? $3 : 1/0):2:6 with points title 'dephasing'\n")};
}

std::vector<std::string> fig3(const std::string &dir, int workers, int steps) {
    const auto &names = circuit::scenario_names();
    std::vector<std::string> files(names.size());
    parallel_for(static_cast<int>(names.size()), workers, [&](int i) {
        const auto model = circuit::CircuitModel::standard(circuit::scenario_qubits(names[i]),
                                                           units::kGammaUnit);
        const auto s = circuit::scenario(names[i], model);
        const auto run = circuit::simulate_scenario(s, 0.0, 0.0, steps);
        std::vector<std::string> header{"t_ns"};
        for (int level = 0; level <= s.levels(); ++level) {
            header.push_back("P_" + s.map.label(level));
        }
        Table t{header, {}};
        const int stride = std::max(1, steps / 400);
        std::vector<int> nodes;
        for (int k = 0; k < steps; k += stride) {
            nodes.push_back(k);
        }
        nodes.push_back(steps);
        for (int k : nodes) {
            std::vector<double> row{run.trajectory.grid.node(k)};
            for (int level = 0; level <= s.levels(); ++level) {
                row.push_back(quantum::population(run.trajectory.states[k], level));
            }
            t.rows.push_back(row);
        }
        files[i] = emit_table(dir, "fig3_" + names[i] + ".csv", t);
    });
    std::string body = "set xlabel 't (ns)'\nset ylabel 'population'\nset multiplot layout 2,2\n";
    for (const auto &n : names) {
        body += "set title '" + n + "'\nplot for [c=2:*] 'fig3_" + n + ".csv' using 1:c with lines\n";
    }
    body += "unset multiplot\n";
    files.push_back(emit_plot(dir, "fig3", body));
    return files;
}

// Fidelity of STIRUP, STIRAP and RR over one error axis at T = 82 ns.
std::vector<std::string> fig4(const std::string &dir, const std::string &id, int axis, int workers,
                              int steps) {
    const double omega0 = bench::robustness_omega0();
    std::vector<double> values;
    std::string column;
    if (axis == 0) {
        column = "gamma_prime_units_gamma";
        for (int k = 0; k <= 10; ++k) {
            values.push_back(k);
        }
    } else {
        column = axis == 1 ? "eta" : "zeta";
        for (int k = -10; k <= 10; ++k) {
            values.push_back(0.01 * k);
        }
    }
    Table t{{column, "stirup", "stirap", "rr"}, std::vector<std::vector<double>>(values.size())};
    parallel_for(static_cast<int>(values.size()), workers, [&](int i) {
        optimizer::Perturbation pert;
        const double rate = (axis == 0 ? values[i] : 1.0) * units::kGammaUnit;
        pert.gamma1 = rate;
        pert.gamma2 = rate;
        if (axis == 1) {
            pert.eta = values[i];
        } else if (axis == 2) {
            pert.zeta = values[i];
        }
        std::vector<double> row{values[i]};
        for (const Protocol &p : {kStirup, kStirap, kRr}) {
            row.push_back(
                bench::protocol_fidelity(p, omega0, bench::kRobustnessDuration, pert, steps));
        }
        t.rows[i] = row;
    });
    return {emit_table(dir, id + ".csv", t),
            emit_plot(dir, id,
                      "set xlabel '" + column + "'\nset ylabel 'fidelity'\nplot '" + id +
                          ".csv' using 1:2 with linespoints, '' using 1:3 with linespoints, "
                          "'' using 1:4 with linespoints\n")};
}

std::vector<std::string> table1(const std::string &dir, int workers) {
    std::vector<double> ratios{1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16, 17, 40};
    const double tau = pulses::minimum_time(1.0, 0.0);
    Table t{{"t_over_tau_min", "omega0_T", "q_opt", "population_max_q0", "population_max_opt",
             "feasible"},
            std::vector<std::vector<double>>(ratios.size())};
    parallel_for(static_cast<int>(ratios.size()), workers, [&](int i) {
        optimizer::QSearch search;
        search.omega0 = 1.0;
        search.duration = ratios[i] * tau;
        const auto r = optimizer::optimize_q(search);
        const double p0 = optimizer::evaluate_q(1.0, 0.0, search.duration).population_max;
        t.rows[i] = {ratios[i], search.duration, r.q, p0, r.population_max, r.feasible ? 1.0 : 0.0};
    });
    return {emit_table(dir, "table1.csv", t),
            emit_plot(dir, "table1",
                      "set xlabel 'T / tau_min'\nset ylabel 'Q x 100'\n"
                      "plot 'table1.csv' using 1:($3*100) with linespoints\n")};
}

} // namespace

const std::vector<std::string> &artifact_ids() {
    static const std::vector<std::string> ids{"fig2a", "fig2b", "fig2c", "fig2d", "fig2e",
                                              "fig3",  "fig4a", "fig4b", "fig4c", "table1"};
    return ids;
}

std::vector<std::string> reproduce(const std::string &id, const std::string &out_dir, int workers,
                                   int steps) {
    if (steps < 10) {
        throw ConfigError({"--steps: " + std::to_string(steps) + ": must be >= 10"});
    }
    if (id == "fig2a") {
        return fig2a(out_dir, workers, steps);
    }
    if (id == "fig2b" || id == "fig2c") {
        return fig2bc(out_dir, id, id == "fig2b", workers, steps);
    }
    if (id == "fig2d" || id == "fig2e") {
        return fig2de(out_dir, id, id == "fig2e", workers, steps);
    }
    if (id == "fig3") {
        return fig3(out_dir, workers, steps);
    }
    if (id == "fig4a" || id == "fig4b" || id == "fig4c") {
        return fig4(out_dir, id, id[4] - 'a', workers, steps);
    }
    if (id == "table1") {
        return table1(out_dir, workers);
    }
    std::string known;
    for (const auto &k : artifact_ids()) {
        known += (known.empty() ? "" : ", ") + k;
    }
    throw ConfigError({"reproduce: \"" + id + "\": unknown artifact id (expected one of " + known +
                       ")"});
}

} // namespace stirup::harness
