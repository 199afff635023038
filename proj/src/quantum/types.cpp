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

#include "stirup/quantum/types.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace stirup::quantum {

StateVector::StateVector(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw DimensionError("state vector must have positive dimension");
    }
    const double norm2 = amplitudes_.squaredNorm();
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "state vector not normalized: sum |a_n|^2 = " << norm2;
        throw DomainError(msg.str());
    }
}

StateVector StateVector::basis(int dim, int level) {
    if (dim <= 0 || level < 0 || level >= dim) {
        throw DimensionError("basis level " + std::to_string(level) + " outside dimension " +
                             std::to_string(dim));
    }
    Vector v = Vector::Zero(dim);
    v(level) = 1.0;
    return StateVector(std::move(v), Unchecked{});
}

StateVector StateVector::from_integration(Vector amplitudes) {
    return StateVector(std::move(amplitudes), Unchecked{});
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw DimensionError("density matrix must be square with positive dimension");
    }
    if (hermiticity_defect() >= 1e-10) {
        throw DomainError("density matrix is not Hermitian");
    }
    if (std::abs(trace() - 1.0) > 1e-8) {
        throw DomainError("density matrix trace differs from one: " + std::to_string(trace()));
    }
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
    const Vector &a = psi.amplitudes();
    return DensityMatrix(a * a.adjoint(), Unchecked{});
}

DensityMatrix DensityMatrix::from_integration(Matrix entries) {
    return DensityMatrix(std::move(entries), Unchecked{});
}

double DensityMatrix::hermiticity_defect() const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    Matrix herm = 0.5 * (entries_ + entries_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

CollapseChannel::CollapseChannel(Matrix op, double rate) : op_(std::move(op)), rate_(rate) {
    if (op_.rows() != op_.cols()) {
        throw DimensionError("collapse operator must be square");
    }
    if (!(rate_ >= 0.0)) {
        throw DomainError("collapse rate must be non-negative, got " + std::to_string(rate_));
    }
}

TimeGrid::TimeGrid(double t_start, double t_end, int n_steps)
    : t_start_(t_start), t_end_(t_end), n_steps_(n_steps) {
    if (!(t_end > t_start)) {
        throw DomainError("time grid requires t_end > t_start");
    }
    if (n_steps <= 0) {
        throw DomainError("time grid requires a positive step count");
    }
}

} // namespace stirup::quantum
