// Copyright 2026 The dwf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dwf/wigner.hpp"

#include <algorithm>
#include <numeric>

#include "dwf/errors.hpp"
#include "dwf/tolerance.hpp"

namespace dwf {

bool DensityState::is_positive(double tol) const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -tol;
}

DensityState DensityState::pure(const Vector &psi) {
    double norm = psi.norm();
    if (norm < 1e-300) {
        throw DomainError("pure state has zero norm");
    }
    Vector v = psi / norm;
    return {v * v.adjoint(), Kind::pure};
}

DensityState DensityState::mixed(const Matrix &rho) {
    const double tol = tolerances().diagonalization();
    if (rho.rows() != rho.cols() || rho.rows() == 0) {
        throw DomainError("density matrix must be square and non-empty");
    }
    if (max_abs_diff(rho, rho.adjoint()) > tol) {
        throw DomainError("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex(1.0)) > tol) {
        throw DomainError("density matrix trace is " + std::to_string(rho.trace().real()) + ", expected 1");
    }
    return {rho, Kind::mixed};
}

DensityState DensityState::maximally_mixed(int dim) {
    return {Matrix::Identity(dim, dim) / static_cast<double>(dim), Kind::mixed};
}

DensityState random_pure_state(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    Vector v(dim);
    for (int i = 0; i < dim; ++i) {
        v[i] = Complex(gauss(rng), gauss(rng));
    }
    return DensityState::pure(v);
}

DensityState random_mixed_state(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    return DensityState::mixed(rho);
}

std::vector<double> ProbabilityTable::minima() const {
    std::vector<double> out;
    for (const auto &row : p) {
        out.push_back(*std::min_element(row.begin(), row.end()));
    }
    return out;
}

std::vector<int> ProbabilityTable::argmins() const {
    std::vector<int> out;
    for (const auto &row : p) {
        out.push_back(static_cast<int>(std::min_element(row.begin(), row.end()) - row.begin()));
    }
    return out;
}

double ProbabilityTable::sum_of_minima() const {
    auto m = minima();
    return std::accumulate(m.begin(), m.end(), 0.0);
}

ProbabilityTable probabilities(const DensityState &state, const MubSet &mub) {
    if (state.dim() != mub.dim) {
        throw DomainError("state has dimension " + std::to_string(state.dim()) + ", MUB has " +
                          std::to_string(mub.dim));
    }
    ProbabilityTable table;
    for (const auto &basis : mub.bases) {
        std::vector<double> row;
        for (const auto &v : basis.vectors) {
            row.push_back(v.dot(state.rho * v).real());
        }
        table.p.push_back(std::move(row));
    }
    return table;
}

PointOperator point_operator(const NetContext &ctx, const QuantumNet &net, PhasePoint alpha) {
    return {alpha, ctx.point_operators(net)->at(ctx.space().point_index(alpha))};
}

double WignerTable::total() const {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

WignerTable wigner_function(const NetContext &ctx, const ProbabilityTable &probs, const QuantumNet &net) {
    const PhaseSpace &space = ctx.space();
    const int d = space.d();
    if (probs.num_bases() != space.num_striations()) {
        throw DomainError("probability table has the wrong number of bases");
    }
    WignerTable w{net, {}};
    w.values.reserve(static_cast<size_t>(d) * d);
    for (const auto &a : space.points()) {
        double sum = -1.0;
        for (int k = 0; k < space.num_striations(); ++k) {
            sum += probs.p[k][net.assignment[k][space.line_through(k, a)]];
        }
        w.values.push_back(sum / d);
    }
    return w;
}

WignerTable wigner_function(const NetContext &ctx, const DensityState &state, const QuantumNet &net) {
    return wigner_function(ctx, probabilities(state, ctx.mub()), net);
}

WignerTable wigner_by_trace(const NetContext &ctx, const DensityState &state, const QuantumNet &net) {
    if (state.dim() != ctx.d()) {
        throw DomainError("state dimension does not match the net");
    }
    auto ops = ctx.point_operators(net);
    WignerTable w{net, {}};
    for (const auto &a : *ops) {
        Complex value = (state.rho * a).trace();
        if (std::abs(value.imag()) > tolerances().algebraic()) {
            throw InternalError("Tr(rho A) has imaginary part " + std::to_string(value.imag()));
        }
        w.values.push_back(value.real());
    }
    return w;
}

double line_sum(const NetContext &ctx, const WignerTable &w, const Line &line) {
    double sum = 0.0;
    for (const auto &a : ctx.space().line_points(line)) {
        sum += w.at(ctx.space(), a);
    }
    return sum;
}

DensityState reconstruct_state(const NetContext &ctx, const WignerTable &w) {
    auto ops = ctx.point_operators(w.net);
    const int d = ctx.d();
    Matrix rho = Matrix::Zero(d, d);
    for (size_t i = 0; i < ops->size(); ++i) {
        rho += w.values[i] * (*ops)[i];
    }
    rho *= static_cast<double>(d);
    return {rho, DensityState::Kind::mixed};
}

}  // namespace dwf
