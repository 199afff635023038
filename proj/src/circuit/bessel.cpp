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


#include "stirup/circuit/bessel.hpp"

#include <cmath>
#include <sstream>

#include "stirup/errors.hpp"

namespace stirup::circuit {
namespace {

constexpr int kTerms = 40;

void check_domain(double x) {
    if (!(std::abs(x) <= 10.0)) {
        std::ostringstream msg;
        msg << "Bessel argument " << x << " outside [-10, 10]";
        throw DomainError(msg.str());
    }
}

// sum_k (-1)^k (x/2)^(2k + order) / (k! (k + order)!) for order 0 or 1.
double series(double x, int order) {
    const double half = 0.5 * x;
    const double q = -half * half;
    double term = order == 0 ? 1.0 : half;
    double sum = term;
    for (int k = 0; k < kTerms; ++k) {
        term *= q / ((k + 1.0) * (k + 1.0 + order));
        sum += term;
    }
    return sum;
}

} // namespace

double bessel_j1(double x) {
    check_domain(x);
    return series(x, 1);
}

double bessel_j1_derivative(double x) {
    check_domain(x);
    if (x == 0.0) {
        return 0.5;
    }
    return series(x, 0) - series(x, 1) / x;
}

double invert_coupling(double g_eff, double g_bare) {
    if (!(g_bare > 0.0)) {
        throw DomainError("bare coupling must be positive");
    }
    const double ratio = g_eff / g_bare;
    if (!(ratio >= 0.0) || ratio > kCouplingCeiling) {
        std::ostringstream msg;
        msg << "unreachable coupling: g_eff / g_bare = " << ratio << " outside [0, "
            << kCouplingCeiling << "]";
        throw DomainError(msg.str());
    }
    if (ratio == 0.0) {
        return 0.0;
    }
    double lo = 0.0;
    double hi = kJ1ArgMax;
    if (ratio >= bessel_j1(hi)) {
        return hi;
    }
    while (hi - lo > 1e-15) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        (bessel_j1(mid) < ratio ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace stirup::circuit
