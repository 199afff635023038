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


#include "stirup/optimizer/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "stirup/errors.hpp"

namespace stirup::optimizer {
namespace {

class Counted {
  public:
    Counted(const Objective &f, int budget) : f_(f), budget_(budget) {}

    double operator()(std::span<const double> x) {
        ++count_;
        const double v = f_(x);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    }
    bool exhausted() const { return count_ >= budget_; }
    int count() const { return count_; }

  private:
    const Objective &f_;
    int budget_;
    int count_ = 0;
};

std::vector<double> affine(const std::vector<double> &a, const std::vector<double> &b, double w) {
    // a + w (b - a)
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + w * (b[i] - a[i]);
    }
    return out;
}

} // namespace

MinimizeResult nelder_mead(const Objective &f, std::vector<double> x0,
                           const SimplexOptions &options) {
    const std::size_t n = x0.size();
    Counted eval(f, options.max_evaluations);
    if (n == 0) {
        return {x0, eval(x0), eval.count()};
    }
    std::vector<std::vector<double>> pts{x0};
    for (std::size_t i = 0; i < n; ++i) {
        auto p = x0;
        p[i] += options.initial_step;
        pts.push_back(std::move(p));
    }
    std::vector<double> vals;
    for (const auto &p : pts) {
        vals.push_back(eval(p));
    }
    std::vector<std::size_t> order(n + 1);

    while (!eval.exhausted()) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[n - 1];

        double x_spread = 0.0;
        for (const auto &p : pts) {
            for (std::size_t i = 0; i < n; ++i) {
                x_spread = std::max(x_spread, std::abs(p[i] - pts[best][i]));
            }
        }
        if (std::isfinite(vals[worst]) && vals[worst] - vals[best] <= options.f_tolerance) {
            break;
        }
        if (x_spread <= options.x_tolerance) {
            break;
        }

        std::vector<double> centroid(n, 0.0);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k == worst) {
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                centroid[i] += pts[k][i] / static_cast<double>(n);
            }
        }

        auto reflected = affine(centroid, pts[worst], -1.0);
        const double fr = eval(reflected);
        if (fr < vals[best]) {
            auto expanded = affine(centroid, pts[worst], -2.0);
            const double fe = eval(expanded);
            if (fe < fr) {
                pts[worst] = std::move(expanded);
                vals[worst] = fe;
            } else {
                pts[worst] = std::move(reflected);
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second]) {
            pts[worst] = std::move(reflected);
            vals[worst] = fr;
            continue;
        }
        const bool outside = fr < vals[worst];
        auto contracted = outside ? affine(centroid, reflected, 0.5)
                                  : affine(centroid, pts[worst], 0.5);
        const double fc = eval(contracted);
        if (fc < (outside ? fr : vals[worst])) {
            pts[worst] = std::move(contracted);
            vals[worst] = fc;
            continue;
        }
        for (std::size_t k = 0; k <= n && !eval.exhausted(); ++k) {
            if (k == best) {
                continue;
            }
            pts[k] = affine(pts[best], pts[k], 0.5);
            vals[k] = eval(pts[k]);
        }
    }
    const auto best = static_cast<std::size_t>(
        std::min_element(vals.begin(), vals.end()) - vals.begin());
    return {pts[best], vals[best], eval.count()};
}

MinimizeResult finite_difference_descent(const Objective &f, std::vector<double> x0,
                                         const GradientOptions &options) {
    Counted eval(f, options.max_evaluations);
    const std::size_t n = x0.size();
    std::vector<double> x = std::move(x0);
    double fx = eval(x);
    double rate = options.initial_rate;
    std::vector<double> grad(n);
    while (!eval.exhausted() && n > 0) {
        double norm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            auto up = x;
            auto down = x;
            up[i] += options.difference_step;
            down[i] -= options.difference_step;
            grad[i] = (eval(up) - eval(down)) / (2.0 * options.difference_step);
            if (!std::isfinite(grad[i])) {
                grad[i] = 0.0;
            }
            norm2 += grad[i] * grad[i];
        }
        if (std::sqrt(norm2) <= options.g_tolerance) {
            break;
        }
        bool moved = false;
        while (!eval.exhausted() && rate > 1e-12) {
            auto trial = x;
            for (std::size_t i = 0; i < n; ++i) {
                trial[i] -= rate * grad[i];
            }
            const double ft = eval(trial);
            if (ft < fx) {
                x = std::move(trial);
                fx = ft;
                rate *= 2.0;
                moved = true;
                break;
            }
            rate *= 0.5;
        }
        if (!moved) {
            break;
        }
    }
    return {x, fx, eval.count()};
}

} // namespace stirup::optimizer
