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

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "stirup/errors.hpp"

namespace stirup::quantum {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Normalized pure state. Construction rejects vectors whose norm differs
/// from one by more than 1e-9.
class StateVector {
  public:
    explicit StateVector(Vector amplitudes);

    static StateVector basis(int dim, int level);

    /// Wraps integrator output without the norm check; drift is measured by
    /// the caller instead of hidden.
    static StateVector from_integration(Vector amplitudes);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const Vector &amplitudes() const { return amplitudes_; }
    Complex operator[](int n) const { return amplitudes_(n); }
    double norm() const { return amplitudes_.norm(); }

  private:
    struct Unchecked {};
    StateVector(Vector amplitudes, Unchecked) : amplitudes_(std::move(amplitudes)) {}

    Vector amplitudes_;
};

/// Mixed state. Construction enforces Hermiticity (1e-10) and unit trace (1e-8).
class DensityMatrix {
  public:
    explicit DensityMatrix(Matrix entries);

    static DensityMatrix from_pure(const StateVector &psi);
    static DensityMatrix from_integration(Matrix entries);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Matrix &entries() const { return entries_; }
    Complex operator()(int r, int c) const { return entries_(r, c); }

    double trace() const { return entries_.trace().real(); }
    double hermiticity_defect() const;
    double min_eigenvalue() const;

  private:
    struct Unchecked {};
    DensityMatrix(Matrix entries, Unchecked) : entries_(std::move(entries)) {}

    Matrix entries_;
};

/// Time-dependent Hamiltonian H(t) in rad/ns (hbar = 1), time in ns.
struct HamiltonianFn {
    int dim = 0;
    std::function<Matrix(double)> evaluate;

    Matrix operator()(double t) const { return evaluate(t); }
};

/// Lindblad channel entering the master equation as rate/2 * L(A),
/// L(A)rho = 2 A rho A^dag - A^dag A rho - rho A^dag A.
class CollapseChannel {
  public:
    CollapseChannel(Matrix op, double rate);

    const Matrix &op() const { return op_; }
    double rate() const { return rate_; }

  private:
    Matrix op_;
    double rate_;
};

/// Uniform grid of n_steps + 1 nodes on [t_start, t_end].
class TimeGrid {
  public:
    TimeGrid(double t_start, double t_end, int n_steps);

    double start() const { return t_start_; }
    double end() const { return t_end_; }
    int steps() const { return n_steps_; }
    double spacing() const { return (t_end_ - t_start_) / n_steps_; }
    double node(int i) const { return t_start_ + i * spacing(); }

    bool operator==(const TimeGrid &) const = default;

  private:
    double t_start_;
    double t_end_;
    int n_steps_;
};

template <typename State>
struct Trajectory {
    TimeGrid grid;
    std::vector<State> states;

    const State &final_state() const { return states.back(); }
};

using PureTrajectory = Trajectory<StateVector>;
using MixedTrajectory = Trajectory<DensityMatrix>;

} // namespace stirup::quantum
