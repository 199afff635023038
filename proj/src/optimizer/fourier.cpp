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


#include "stirup/optimizer/fourier.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "stirup/csv.hpp"
#include "stirup/errors.hpp"
#include "stirup/optimizer/simplex.hpp"
#include "stirup/pulses/pulses.hpp"

namespace stirup::optimizer {
namespace {

constexpr double kPi = std::numbers::pi;

std::string describe(std::span<const double> x) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < x.size(); ++i) {
        os << (i ? ", " : "") << format_number(x[i]);
    }
    os << ']';
    return os.str();
}

} // namespace

FourierAnsatz FourierAnsatz::zero(int n_c, int n_s) {
    if (n_c < 0 || n_s < 0) {
        throw DomainError("Fourier coefficient counts must be non-negative");
    }
    return {std::vector<double>(n_c, 0.0), std::vector<double>(n_s, 0.0)};
}

FourierAnsatz FourierAnsatz::unpack(int n_c, std::span<const double> packed) {
    if (n_c < 0 || n_c > static_cast<int>(packed.size())) {
        throw DimensionError("packed coefficients shorter than n_c");
    }
    return {{packed.begin(), packed.begin() + n_c}, {packed.begin() + n_c, packed.end()}};
}

std::vector<double> FourierAnsatz::pack() const {
    std::vector<double> out(c);
    out.insert(out.end(), s.begin(), s.end());
    return out;
}

AnsatzSchedules schedules_from_ansatz(const FourierAnsatz &ansatz,
                                      const passage::AmplitudeSchedule &omega) {
    const double T = omega.duration();
    const passage::AngleSchedule base = passage::default_chi(T);
    const std::vector<double> S = ansatz.s;
    const std::vector<double> C = ansatz.c;

    // chi as a function of tau, with d/dtau and d2/dtau2.
    auto chi_tau = [S](double tau, double &d1, double &d2) {
        double v = 0.5 * kPi * tau;
        d1 = 0.5 * kPi;
        d2 = 0.0;
        for (std::size_t m = 0; m < S.size(); ++m) {
            const double k = 2.0 * kPi * static_cast<double>(m + 1);
            v += S[m] * std::sin(k * tau);
            d1 += S[m] * k * std::cos(k * tau);
            d2 -= S[m] * k * k * std::sin(k * tau);
        }
        return v;
    };
    const double scale = 2.0 / kPi;
    auto chi_value = [base, chi_tau, scale](double t) {
        double d1, d2;
        return chi_tau(scale * base.value(t), d1, d2);
    };
    auto chi_rate = [base, chi_tau, scale](double t) {
        double d1, d2;
        chi_tau(scale * base.value(t), d1, d2);
        return d1 * scale * base.derivative(t);
    };
    auto chi_accel = [base, chi_tau, scale](double t) {
        double d1, d2;
        chi_tau(scale * base.value(t), d1, d2);
        const double r = scale * base.derivative(t);
        return d2 * r * r + d1 * scale * base.second_derivative(t);
    };
    passage::AngleSchedule chi(T, chi_value, chi_rate, chi_accel);

    auto gamma_value = [chi, omega, C](double t) {
        const double x = chi.value(t);
        double v = std::atan(chi.derivative(t) / omega.value(t));
        for (std::size_t n = 0; n < C.size(); ++n) {
            v += C[n] * std::sin(2.0 * static_cast<double>(n + 1) * x);
        }
        return v;
    };
    auto gamma_rate = [chi, omega, C](double t) {
        const double x = chi.value(t);
        const double xd = chi.derivative(t);
        const double xdd = chi.second_derivative(t);
        const double w = omega.value(t);
        double v = (xdd * w - xd * omega.derivative(t)) / (w * w + xd * xd);
        for (std::size_t n = 0; n < C.size(); ++n) {
            const double k = 2.0 * static_cast<double>(n + 1);
            v += C[n] * k * std::cos(k * x) * xd;
        }
        return v;
    };
    return {passage::AngleSchedule(T, gamma_value, gamma_rate), chi};
}

passage::Passage ansatz_passage(const FourierAnsatz &ansatz,
                                const passage::AmplitudeSchedule &omega) {
    AnsatzSchedules sched = schedules_from_ansatz(ansatz, omega);
    passage::Passage p{3, sched.gamma, {sched.chi}, omega, {}};
    return p;
}

void FourierOptions::validate() const {
    if (n_c < 0 || n_s < 0 || n_c + n_s == 0) {
        throw DomainError("Fourier search needs at least one coefficient");
    }
    if (restarts < 1) {
        throw DomainError("Fourier search needs at least one restart");
    }
    if (max_evaluations < 1) {
        throw DomainError("Fourier search needs a positive evaluation budget");
    }
    if (!(amplitude_cap > 0.0) || !(seed_spread >= 0.0)) {
        throw DomainError("Fourier amplitude cap and seed spread must be positive");
    }
}

double fourier_objective(const FourierAnsatz &ansatz, const ObjectiveSpec &objective,
                         const passage::AmplitudeSchedule &omega, const FourierOptions &options) {
    const auto target = quantum::StateVector::basis(3, 1);
    try {
        const auto pulses = pulses::inverse_engineer(ansatz_passage(ansatz, omega));
        if (pulses.max_amplitude() > options.amplitude_cap * omega.omega0()) {
            return std::numeric_limits<double>::infinity();
        }
        return robustness_score(pulses, objective, target);
    } catch (const DivergenceError &) {
        return std::numeric_limits<double>::infinity();
    } catch (const Error &e) {
        throw SimulationError("objective evaluation failed for coefficients " +
                              describe(ansatz.pack()) + ": " + e.what());
    }
}

FourierResult optimize_fourier(const ObjectiveSpec &objective, double duration, double omega0,
                               const FourierOptions &options) {
    objective.validate();
    options.validate();
    const passage::AmplitudeSchedule omega(omega0, options.q, duration);
    const int dim = options.n_c + options.n_s;
    auto f = [&](std::span<const double> x) {
        return fourier_objective(FourierAnsatz::unpack(options.n_c, x), objective, omega, options);
    };

    FourierResult result;
    result.ansatz = FourierAnsatz::zero(options.n_c, options.n_s);
    result.zero_objective = f(result.ansatz.pack());
    result.objective = result.zero_objective;

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> draw(-options.seed_spread, options.seed_spread);
    for (int r = 0; r < options.restarts; ++r) {
        std::vector<double> start(dim, 0.0);
        if (r > 0) {
            for (double &v : start) {
                v = draw(rng);
            }
        }
        MinimizeResult local;
        if (options.method == SearchMethod::kSimplex) {
            SimplexOptions so;
            so.max_evaluations = options.max_evaluations;
            local = nelder_mead(f, start, so);
        } else {
            GradientOptions go;
            go.max_evaluations = options.max_evaluations;
            local = finite_difference_descent(f, start, go);
        }
        result.restarts.push_back({start, local.x, local.value, local.evaluations});
        if (local.value < result.objective) {
            result.objective = local.value;
            result.ansatz = FourierAnsatz::unpack(options.n_c, local.x);
        }
    }
    return result;
}

void write_csv(std::ostream &os, const FourierResult &result) {
    const int n_c = static_cast<int>(result.ansatz.c.size());
    const int n_s = static_cast<int>(result.ansatz.s.size());
    std::vector<std::string> header{"restart"};
    for (int n = 1; n <= n_c; ++n) {
        header.push_back("C_" + std::to_string(n));
    }
    for (int m = 1; m <= n_s; ++m) {
        header.push_back("S_" + std::to_string(m));
    }
    header.push_back("objective");
    header.push_back("feasible");
    CsvWriter csv(os, header);
    auto emit = [&](int index, const std::vector<double> &x, double value) {
        std::vector<double> row{static_cast<double>(index)};
        row.insert(row.end(), x.begin(), x.end());
        row.push_back(value);
        row.push_back(std::isfinite(value) ? 1.0 : 0.0);
        csv.row(row);
    };
    for (std::size_t r = 0; r < result.restarts.size(); ++r) {
        emit(static_cast<int>(r), result.restarts[r].best, result.restarts[r].objective);
    }
    emit(-1, result.ansatz.pack(), result.objective);
}

} // namespace stirup::optimizer
