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

#include <vector>

#include "dwf/galois.hpp"
#include "dwf/linalg.hpp"
#include "dwf/pauli.hpp"

namespace dwf {

/// An ordered orthonormal basis. labels[j][i] = k means generator i acts on
/// vectors[j] as w_p^k (empty when the basis did not come from a Pauli set).
struct Basis {
    std::vector<Vector> vectors;
    std::vector<ZpVector> labels;

    int size() const {
        return static_cast<int>(vectors.size());
    }
};

/// Joint eigenbasis of a maximal commuting set, ordered lexicographically by
/// label over its generator list. Label 0 is the +1 eigenvalue.
///
/// Throws InternalError if a joint eigenspace is not one-dimensional.
Basis joint_eigenbasis(const AbelianSet &set);

/// d+1 bases in dimension d. `provenance[k]` is the commuting set that basis k
/// diagonalizes; empty for bases supplied from outside.
struct MubSet {
    int dim = 0;
    std::vector<Basis> bases;
    std::vector<AbelianSet> provenance;

    int num_bases() const {
        return static_cast<int>(bases.size());
    }
    const Vector &vector(int basis, int j) const {
        return bases.at(basis).vectors.at(j);
    }
    Matrix projector(int basis, int j) const;
};

/// The standard construction: basis k diagonalizes standard_sets(field)[k]
/// and belongs to striation k.
MubSet build_mub(const Field &field);

struct UnbiasednessReport {
    /// max | |<u|v>|^2 - expected | over all ordered vector pairs, where
    /// expected is the Kronecker delta within a basis and 1/d across bases.
    double max_deviation = 0.0;
    int basis_a = 0;
    int vector_a = 0;
    int basis_b = 0;
    int vector_b = 0;
};

UnbiasednessReport unbiasedness_report(const MubSet &mub);

/// max_k || sum_j P_j^(k) - I ||_max
double completeness_deviation(const MubSet &mub);

}  // namespace dwf
