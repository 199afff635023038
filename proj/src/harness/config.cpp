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


#include "stirup/harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "stirup/circuit/scenario.hpp"
#include "stirup/passage/passage.hpp"
#include "stirup/pulses/pulses.hpp"
#include "stirup/units.hpp"

namespace stirup::harness {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string> &issues) {
    std::string out = "invalid configuration:";
    for (const auto &i : issues) {
        out += "\n  " + i;
    }
    return out;
}

std::string show(const json &v) { return v.dump(); }

std::string show(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

/// Walks one JSON object, reporting unknown keys and type mismatches by path.
class ObjectReader {
  public:
    ObjectReader(const json &obj, std::string path, std::vector<std::string> &issues)
        : obj_(obj), path_(std::move(path)), issues_(issues) {
        if (!obj_.is_object()) {
            issues_.push_back(where("") + ": " + show(obj_) + ": must be an object");
        }
    }

    ~ObjectReader() = default;

    bool has(const std::string &key) const { return obj_.is_object() && obj_.contains(key); }

    void number(const std::string &key, double &out) {
        if (auto v = take(key)) {
            if (v->is_number()) {
                out = v->get<double>();
            } else {
                issues_.push_back(where(key) + ": " + show(*v) + ": must be a number");
            }
        }
    }

    void integer(const std::string &key, int &out) {
        if (auto v = take(key)) {
            if (v->is_number_integer()) {
                out = v->get<int>();
            } else {
                issues_.push_back(where(key) + ": " + show(*v) + ": must be an integer");
            }
        }
    }

    void unsigned_integer(const std::string &key, std::uint64_t &out) {
        if (auto v = take(key)) {
            if (v->is_number_unsigned() || (v->is_number_integer() && v->get<long long>() >= 0)) {
                out = v->get<std::uint64_t>();
            } else {
                issues_.push_back(where(key) + ": " + show(*v) +
                                  ": must be a non-negative integer");
            }
        }
    }

    void string(const std::string &key, std::string &out) {
        if (auto v = take(key)) {
            if (v->is_string()) {
                out = v->get<std::string>();
            } else {
                issues_.push_back(where(key) + ": " + show(*v) + ": must be a string");
            }
        }
    }

    void numbers(const std::string &key, std::vector<double> &out) {
        if (auto v = take(key)) {
            if (!v->is_array() ||
                !std::all_of(v->begin(), v->end(), [](const json &e) { return e.is_number(); })) {
                issues_.push_back(where(key) + ": " + show(*v) + ": must be an array of numbers");
                return;
            }
            out.clear();
            for (const auto &e : *v) {
                out.push_back(e.get<double>());
            }
        }
    }

    const json *object(const std::string &key) { return take(key); }

    /// Reports every key that no accessor consumed.
    void finish() {
        if (!obj_.is_object()) {
            return;
        }
        for (auto it = obj_.begin(); it != obj_.end(); ++it) {
            if (!seen_.count(it.key())) {
                issues_.push_back(where(it.key()) + ": " + show(it.value()) +
                                  ": unknown key (not accepted)");
            }
        }
    }

    std::string where(const std::string &key) const {
        if (key.empty()) {
            return path_.empty() ? "<root>" : path_;
        }
        return path_.empty() ? key : path_ + "." + key;
    }

  private:
    const json *take(const std::string &key) {
        seen_.insert(key);
        if (!obj_.is_object() || !obj_.contains(key)) {
            return nullptr;
        }
        return &obj_.at(key);
    }

    const json &obj_;
    std::string path_;
    std::vector<std::string> &issues_;
    std::set<std::string> seen_;
};

void check(std::vector<std::string> &issues, bool ok, const std::string &path,
           const std::string &value, const std::string &constraint) {
    if (!ok) {
        issues.push_back(path + ": " + value + ": " + constraint);
    }
}

bool finite(double v) { return std::isfinite(v); }

bool one_of(const std::string &v, std::initializer_list<const char *> options) {
    return std::any_of(options.begin(), options.end(), [&](const char *o) { return v == o; });
}

bool strictly_monotone(const std::vector<double> &v) {
    if (v.size() < 2) {
        return true;
    }
    bool up = true;
    bool down = true;
    for (std::size_t i = 1; i < v.size(); ++i) {
        up = up && v[i] > v[i - 1];
        down = down && v[i] < v[i - 1];
    }
    return up || down;
}

void check_sweep_value(std::vector<std::string> &issues, const ScenarioConfig &c,
                       const std::string &parameter, double v, const std::string &path) {
    const std::string s = show(v);
    check(issues, finite(v), path, s, "must be finite");
    if (parameter == "T" || parameter == "omega0_T") {
        check(issues, v > 0.0, path, s, "must be > 0");
    } else if (parameter == "gamma_prime") {
        check(issues, v >= 0.0, path, s, "must be >= 0");
    } else if (parameter == "eta" || parameter == "zeta") {
        check(issues, v >= -0.5 && v <= 0.5, path, s, "must lie in [-0.5, 0.5]");
    } else if (parameter == "q") {
        check(issues, v > -1.0 / 16.0 && v <= 1.0, path, s, "must lie in (-0.0625, 1]");
        check(issues, c.protocol == "stirup", path, s, "q applies to the stirup protocol only");
    }
}

void collect_issues(const ScenarioConfig &c, std::vector<std::string> &issues) {
    check(issues, one_of(c.protocol, {"stirup", "stirap", "rr"}), "protocol", show(json(c.protocol)),
          "must be one of stirup, stirap, rr");
    if (!c.q_auto) {
        check(issues, finite(c.q) && c.q > -1.0 / 16.0 && c.q <= 1.0, "q", show(c.q),
              "must be \"auto\" or lie in (-0.0625, 1] so that Omega(t) > 0");
    }
    const bool circuit = !c.scenario.empty();
    if (circuit) {
        const auto &names = circuit::scenario_names();
        const bool known = std::find(names.begin(), names.end(), c.scenario) != names.end();
        check(issues, known, "scenario", show(json(c.scenario)), "must be one of qst2, qst3, bell, w");
        check(issues, c.protocol == "stirup", "protocol", show(json(c.protocol)),
              "circuit scenarios use the stirup protocol");
        check(issues, !c.q_auto && c.q == 0.0, "q", c.q_auto ? "\"auto\"" : show(c.q),
              "circuit scenarios use Q = 0");
        check(issues, c.target.empty(), "target", show(json(c.target)),
              "circuit scenarios define their own target");
        if (known) {
            check(issues, c.levels == circuit::scenario_qubits(c.scenario) + 1, "levels",
                  show(c.levels), "must equal the scenario's level count");
        }
    }
    check(issues, c.levels >= 3 && c.levels <= 8, "levels", show(c.levels), "must lie in [3, 8]");
    if (c.protocol != "stirup") {
        check(issues, c.levels == 3, "levels", show(c.levels),
              "stirap and rr baselines are three-level protocols");
    }
    if (c.q_auto) {
        check(issues, c.levels == 3 && c.protocol == "stirup", "q", "\"auto\"",
              "Q search is defined for the three-level stirup protocol");
    }
    if (!c.target.empty()) {
        const bool size_ok = static_cast<int>(c.target.size()) == c.levels;
        check(issues, size_ok, "target", show(json(c.target)),
              "must have one entry per level (" + std::to_string(c.levels) + ")");
        if (size_ok) {
            double norm2 = 0.0;
            bool all_finite = true;
            for (double v : c.target) {
                norm2 += v * v;
                all_finite = all_finite && finite(v);
            }
            check(issues, all_finite && std::abs(std::sqrt(norm2) - 1.0) <= 1e-6, "target",
                  show(json(c.target)), "must have unit norm (within 1e-6)");
            check(issues, std::abs(c.target.back()) <= 1e-12, "target", show(json(c.target)),
                  "last (intermediate) entry must be zero");
            if (c.protocol != "stirup") {
                check(issues, std::abs(std::abs(c.target[1]) - 1.0) <= 1e-6, "target",
                      show(json(c.target)), "baselines transfer |1> to |2> only");
            }
        }
    }
    check(issues, finite(c.duration) && c.duration > 0.0, "duration", show(c.duration), "must be > 0");
    check(issues, one_of(c.duration_unit, {"ns", "tau_min"}), "duration_unit",
          show(json(c.duration_unit)), "must be ns or tau_min");
    check(issues, finite(c.omega0) && c.omega0 > 0.0, "omega0", show(c.omega0), "must be > 0");
    check(issues, one_of(c.omega0_unit, {"rad_per_ns", "2pi_MHz", "2pi_GHz"}), "omega0_unit",
          show(json(c.omega0_unit)), "must be rad_per_ns, 2pi_MHz or 2pi_GHz");
    check(issues, finite(c.gamma) && c.gamma > 0.0, "gamma", show(c.gamma), "must be > 0");
    check(issues, one_of(c.gamma_unit, {"rad_per_ns", "2pi_kHz", "2pi_MHz"}), "gamma_unit",
          show(json(c.gamma_unit)), "must be rad_per_ns, 2pi_kHz or 2pi_MHz");
    check(issues, finite(c.gamma1) && c.gamma1 >= 0.0, "gamma1", show(c.gamma1), "must be >= 0");
    check(issues, finite(c.gamma2) && c.gamma2 >= 0.0, "gamma2", show(c.gamma2), "must be >= 0");
    check(issues, finite(c.gamma_c) && c.gamma_c >= 0.0, "gamma_c", show(c.gamma_c), "must be >= 0");
    if (!circuit) {
        check(issues, c.gamma_c == 0.0, "gamma_c", show(c.gamma_c),
              "cavity decay applies to circuit scenarios only");
    }
    check(issues, c.eta >= -0.5 && c.eta <= 0.5, "eta", show(c.eta), "must lie in [-0.5, 0.5]");
    check(issues, c.zeta >= -0.5 && c.zeta <= 0.5, "zeta", show(c.zeta), "must lie in [-0.5, 0.5]");
    check(issues, c.steps >= 10 && c.steps <= 10000000, "steps", show(c.steps),
          "must lie in [10, 1e7]");
    check(issues, !c.output_dir.empty(), "output_dir", "\"\"", "must not be empty");
    check(issues,
          !c.output_prefix.empty() && c.output_prefix.find('/') == std::string::npos,
          "output_prefix", show(json(c.output_prefix)), "must be a non-empty file name stem");

    if (c.sweep) {
        const auto &params = sweep_parameters();
        const bool known = std::find(params.begin(), params.end(), c.sweep->parameter) != params.end();
        check(issues, known, "sweep.parameter", show(json(c.sweep->parameter)),
              "must be one of T, gamma_prime, eta, zeta, omega0_T, q");
        check(issues, !c.sweep->values.empty(), "sweep.values", "[]", "must not be empty");
        check(issues, strictly_monotone(c.sweep->values), "sweep.values",
              show(json(c.sweep->values)), "must be strictly monotone");
        if (circuit && known) {
            check(issues, !one_of(c.sweep->parameter, {"T", "omega0_T", "q"}), "sweep.parameter",
                  show(json(c.sweep->parameter)),
                  "circuit scenarios fix T and Omega0; sweep gamma_prime, eta or zeta");
        }
        if (known) {
            for (std::size_t i = 0; i < c.sweep->values.size(); ++i) {
                check_sweep_value(issues, c, c.sweep->parameter, c.sweep->values[i],
                                  "sweep.values[" + std::to_string(i) + "]");
            }
        }
    }

    check(issues, c.q_search.lo < c.q_search.hi, "q_search",
          "[" + show(c.q_search.lo) + ", " + show(c.q_search.hi) + "]", "must satisfy lo < hi");
    check(issues, c.q_search.lo > -1.0 / 16.0, "q_search.lo", show(c.q_search.lo),
          "must be > -0.0625 so that Omega(t) > 0");
    check(issues, c.q_search.grid_points >= 3, "q_search.grid_points",
          show(c.q_search.grid_points), "must be >= 3");

    const FourierConfig &f = c.fourier;
    check(issues, f.n_c >= 0 && f.n_s >= 0 && f.n_c + f.n_s >= 1, "fourier",
          "n_c=" + show(f.n_c) + ", n_s=" + show(f.n_s),
          "counts must be >= 0 with at least one coefficient");
    check(issues, f.restarts >= 1, "fourier.restarts", show(f.restarts), "must be >= 1");
    check(issues, f.max_evaluations >= 1, "fourier.max_evaluations", show(f.max_evaluations),
          "must be >= 1");
    check(issues, f.seed_spread >= 0.0, "fourier.seed_spread", show(f.seed_spread), "must be >= 0");
    check(issues, one_of(f.method, {"simplex", "finite_difference"}), "fourier.method",
          show(json(f.method)), "must be simplex or finite_difference");
    const ObjectiveConfig &o = f.objective;
    for (auto [name, w] : {std::pair{"infidelity_weight", o.infidelity_weight},
                           std::pair{"eta_weight", o.eta_weight},
                           std::pair{"zeta_weight", o.zeta_weight},
                           std::pair{"population_weight", o.population_weight}}) {
        check(issues, finite(w) && w >= 0.0, std::string("fourier.objective.") + name, show(w),
              "must be >= 0");
    }
    check(issues,
          o.infidelity_weight + o.eta_weight + o.zeta_weight + o.population_weight > 0.0,
          "fourier.objective", "all weights zero", "at least one weight must be positive");
    check(issues, o.eta_weight == 0.0 || !o.eta_grid.empty(), "fourier.objective.eta_grid", "[]",
          "must not be empty when eta_weight > 0");
    check(issues, o.zeta_weight == 0.0 || !o.zeta_grid.empty(), "fourier.objective.zeta_grid",
          "[]", "must not be empty when zeta_weight > 0");
}

} // namespace

ConfigError::ConfigError(std::vector<std::string> issues)
    : Error(join(issues)), issues_(std::move(issues)) {}

const std::vector<std::string> &sweep_parameters() {
    static const std::vector<std::string> names{"T", "gamma_prime", "eta", "zeta", "omega0_T", "q"};
    return names;
}

double to_rad_per_ns(double value, const std::string &unit) {
    if (unit == "rad_per_ns") {
        return value;
    }
    if (unit == "2pi_GHz") {
        return units::two_pi_ghz(value);
    }
    if (unit == "2pi_MHz") {
        return units::two_pi_mhz(value);
    }
    if (unit == "2pi_kHz") {
        return units::two_pi_khz(value);
    }
    throw ConfigError({"unit: \"" + unit + "\": unknown unit"});
}

ScenarioConfig parse_config(const std::string &json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ConfigError({std::string("<root>: malformed JSON: ") + e.what()});
    }
    std::vector<std::string> issues;
    ScenarioConfig c;
    ObjectReader r(root, "", issues);
    r.string("protocol", c.protocol);
    if (const json *q = r.object("q")) {
        if (q->is_string() && q->get<std::string>() == "auto") {
            c.q_auto = true;
        } else if (q->is_number()) {
            c.q = q->get<double>();
        } else {
            issues.push_back("q: " + show(*q) + ": must be a number or \"auto\"");
        }
    }
    const bool levels_given = r.has("levels");
    r.integer("levels", c.levels);
    r.string("scenario", c.scenario);
    if (!c.scenario.empty() && !levels_given) {
        const auto &names = circuit::scenario_names();
        if (std::find(names.begin(), names.end(), c.scenario) != names.end()) {
            c.levels = circuit::scenario_qubits(c.scenario) + 1;
        }
    }
    r.numbers("target", c.target);
    r.number("duration", c.duration);
    r.string("duration_unit", c.duration_unit);
    r.number("omega0", c.omega0);
    r.string("omega0_unit", c.omega0_unit);
    r.number("gamma", c.gamma);
    r.string("gamma_unit", c.gamma_unit);
    r.number("gamma1", c.gamma1);
    r.number("gamma2", c.gamma2);
    r.number("gamma_c", c.gamma_c);
    r.number("eta", c.eta);
    r.number("zeta", c.zeta);
    r.integer("steps", c.steps);
    r.string("output_dir", c.output_dir);
    r.string("output_prefix", c.output_prefix);
    if (const json *s = r.object("sweep")) {
        SweepSpec spec;
        ObjectReader sr(*s, "sweep", issues);
        sr.string("parameter", spec.parameter);
        sr.numbers("values", spec.values);
        if (!sr.has("parameter")) {
            issues.push_back("sweep.parameter: <missing>: required");
        }
        sr.finish();
        c.sweep = spec;
    }
    if (const json *s = r.object("q_search")) {
        ObjectReader qr(*s, "q_search", issues);
        qr.number("lo", c.q_search.lo);
        qr.number("hi", c.q_search.hi);
        qr.integer("grid_points", c.q_search.grid_points);
        qr.finish();
    }
    if (const json *s = r.object("fourier")) {
        ObjectReader fr(*s, "fourier", issues);
        fr.integer("n_c", c.fourier.n_c);
        fr.integer("n_s", c.fourier.n_s);
        fr.integer("restarts", c.fourier.restarts);
        fr.integer("max_evaluations", c.fourier.max_evaluations);
        fr.unsigned_integer("seed", c.fourier.seed);
        fr.number("seed_spread", c.fourier.seed_spread);
        fr.string("method", c.fourier.method);
        if (const json *o = fr.object("objective")) {
            ObjectiveConfig &oc = c.fourier.objective;
            ObjectReader orr(*o, "fourier.objective", issues);
            orr.number("infidelity_weight", oc.infidelity_weight);
            orr.number("eta_weight", oc.eta_weight);
            orr.numbers("eta_grid", oc.eta_grid);
            orr.number("zeta_weight", oc.zeta_weight);
            orr.numbers("zeta_grid", oc.zeta_grid);
            orr.number("population_weight", oc.population_weight);
            orr.finish();
        }
        fr.finish();
    }
    r.finish();
    // Fields that failed to parse keep their defaults, so the value checks below
    // only add issues about the keys that did parse.
    collect_issues(c, issues);
    if (!issues.empty()) {
        throw ConfigError(std::move(issues));
    }
    return c;
}

ScenarioConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError({"--config: \"" + path + "\": file cannot be opened"});
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ScenarioConfig &c) {
    json j;
    j["protocol"] = c.protocol;
    if (c.q_auto) {
        j["q"] = "auto";
    } else {
        j["q"] = c.q;
    }
    j["levels"] = c.levels;
    j["scenario"] = c.scenario;
    j["target"] = c.target;
    j["duration"] = c.duration;
    j["duration_unit"] = c.duration_unit;
    j["omega0"] = c.omega0;
    j["omega0_unit"] = c.omega0_unit;
    j["gamma"] = c.gamma;
    j["gamma_unit"] = c.gamma_unit;
    j["gamma1"] = c.gamma1;
    j["gamma2"] = c.gamma2;
    j["gamma_c"] = c.gamma_c;
    j["eta"] = c.eta;
    j["zeta"] = c.zeta;
    j["steps"] = c.steps;
    j["output_dir"] = c.output_dir;
    j["output_prefix"] = c.output_prefix;
    if (c.sweep) {
        j["sweep"] = {{"parameter", c.sweep->parameter}, {"values", c.sweep->values}};
    }
    j["q_search"] = {{"lo", c.q_search.lo}, {"hi", c.q_search.hi},
                     {"grid_points", c.q_search.grid_points}};
    const ObjectiveConfig &o = c.fourier.objective;
    j["fourier"] = {{"n_c", c.fourier.n_c},
                    {"n_s", c.fourier.n_s},
                    {"restarts", c.fourier.restarts},
                    {"max_evaluations", c.fourier.max_evaluations},
                    {"seed", c.fourier.seed},
                    {"seed_spread", c.fourier.seed_spread},
                    {"method", c.fourier.method},
                    {"objective",
                     {{"infidelity_weight", o.infidelity_weight},
                      {"eta_weight", o.eta_weight},
                      {"eta_grid", o.eta_grid},
                      {"zeta_weight", o.zeta_weight},
                      {"zeta_grid", o.zeta_grid},
                      {"population_weight", o.population_weight}}}};
    return j.dump(2) + "\n";
}

void validate_config(const ScenarioConfig &config) {
    std::vector<std::string> issues;
    collect_issues(config, issues);
    if (!issues.empty()) {
        throw ConfigError(std::move(issues));
    }
}

Resolved resolve(const ScenarioConfig &c) {
    validate_config(c);
    Resolved r;
    r.omega0 = to_rad_per_ns(c.omega0, c.omega0_unit);
    r.duration = c.duration_unit == "ns" ? c.duration
                                         : c.duration * pulses::minimum_time(r.omega0, 0.0);
    r.gamma_unit = to_rad_per_ns(c.gamma, c.gamma_unit);
    r.gamma1 = c.gamma1 * r.gamma_unit;
    r.gamma2 = c.gamma2 * r.gamma_unit;
    r.gamma_c = c.gamma_c * r.gamma_unit;
    if (c.target.empty()) {
        r.target.assign(c.levels, 0.0);
        r.target[c.levels - 2] = 1.0;
    } else {
        double norm = 0.0;
        for (double v : c.target) {
            norm += v * v;
        }
        norm = std::sqrt(norm);
        for (double v : c.target) {
            r.target.push_back(v / norm);
        }
        r.target.back() = 0.0;
    }
    return r;
}

ScenarioConfig apply_sweep_value(const ScenarioConfig &config, const std::string &parameter,
                                 double value) {
    ScenarioConfig c = config;
    c.sweep.reset();
    if (parameter == "T") {
        c.duration = value;
    } else if (parameter == "gamma_prime") {
        c.gamma1 = value;
        c.gamma2 = value;
        if (!c.scenario.empty()) {
            c.gamma_c = value;
        }
    } else if (parameter == "eta") {
        c.eta = value;
    } else if (parameter == "zeta") {
        c.zeta = value;
    } else if (parameter == "omega0_T") {
        c.duration = value / to_rad_per_ns(c.omega0, c.omega0_unit);
        c.duration_unit = "ns";
    } else if (parameter == "q") {
        c.q = value;
        c.q_auto = false;
    } else {
        throw ConfigError({"sweep.parameter: \"" + parameter + "\": unknown sweep parameter"});
    }
    return c;
}

} // namespace stirup::harness
