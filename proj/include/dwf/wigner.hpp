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

#pragma once

#include <random>
#include <vector>

#include "dwf/linalg.hpp"
#include "dwf/mub.hpp"
#include "dwf/quantum_net.hpp"

namespace dwf {

/// A Hermitian, unit-trace matrix. Positivity is reported, not required.
struct DensityState {
    enum class Kind { pure, mixed };

    Matrix rho;
    Kind kind = Kind::mixed;

    int dim() const {
        return static_cast<int>(rho.rows());
    }
    /// Smallest eigenvalue is >= -tol.
    bool is_positive(double tol = 1e-10) const;

    /// Normalizes psi. Throws DomainError on a zero vector.
    static DensityState pure(const Vector &psi);
    /// Throws DomainError if rho is not square, not Hermitian or not unit trace
    /// (within the diagonalization tolerance).
    static DensityState mixed(const Matrix &rho);
    static DensityState maximally_mixed(int dim);
};

/// Haar-random pure state.
DensityState random_pure_state(int dim, std::mt19937_64 &rng);
/// Random full-rank mixed state from a Ginibre matrix.
DensityState random_mixed_state(int dim, std::mt19937_64 &rng);

/// p[k][j] = <phi_j^(k)| rho |phi_j^(k)>.
struct ProbabilityTable {
    std::vector<std::vector<double>> p;

    int num_bases() const {
        return static_cast<int>(p.size());
    }
    /// Per-basis minimum.
    std::vector<double> minima() const;
    /// Per-basis argmin; the lowest index wins ties.
    std::vector<int> argmins() const;
    double sum_of_minima() const;
};

/// Throws DomainError on a dimension mismatch.
ProbabilityTable probabilities(const DensityState &state, const MubSet &mub);

struct PointOperator {
    PhasePoint alpha;
    Matrix dense;
};

/// A(a) = (sum of the projectors on the lines through a - I) / d.
PointOperator point_operator(const NetContext &ctx, const QuantumNet &net, PhasePoint alpha);

/// One value per phase-space point, indexed by PhaseSpace::point_index.
struct WignerTable {
    QuantumNet net;
    std::vector<double> values;

    double at(const PhaseSpace &space, PhasePoint a) const {
        return values.at(space.point_index(a));
    }
    double total() const;
};

/// W_a = (sum of p over the lines through a - 1) / d.
WignerTable wigner_function(const NetContext &ctx, const ProbabilityTable &probs, const QuantumNet &net);
WignerTable wigner_function(const NetContext &ctx, const DensityState &state, const QuantumNet &net);
/// W_a = Tr(rho A(a)), from the dense point operators. Throws InternalError if
/// an imaginary residue exceeds the algebraic tolerance.
WignerTable wigner_by_trace(const NetContext &ctx, const DensityState &state, const QuantumNet &net);

/// Sum of W over the points of a line.
double line_sum(const NetContext &ctx, const WignerTable &w, const Line &line);

/// rho = d * sum_a W_a A(a).
DensityState reconstruct_state(const NetContext &ctx, const WignerTable &w);

}  // namespace dwf
