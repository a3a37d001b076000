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

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include "dwf/geometry.hpp"
#include "dwf/linalg.hpp"
#include "dwf/mub.hpp"
#include "dwf/pauli.hpp"

namespace dwf {

/// A translation-covariant line -> projector assignment.
///
/// ray_choices[k] is the basis-k vector placed on the ray of striation k;
/// assignment[k][c] is the basis-k vector placed on line c of striation k.
struct QuantumNet {
    int dim = 0;
    std::vector<int> ray_choices;
    std::vector<std::vector<int>> assignment;

    bool operator==(const QuantumNet &other) const {
        return dim == other.dim && ray_choices == other.ray_choices;
    }
};

/// Largest d for which enumerate() walks every net.
inline constexpr int kMaxEnumerationDim = 5;

/// Phase space, MUB, labeling and the translation tables for one field.
///
/// The tables record, for each striation k, line c and vector j, which basis
/// vector T(a)|phi_j> equals (up to phase) for any point a on line c. They are
/// built once at construction; everything else is read-only, so a context can
/// be shared between threads. Not copyable because the labeling refers back
/// to the phase space.
class NetContext {
   public:
    explicit NetContext(const Field &field);
    NetContext(const NetContext &) = delete;
    NetContext &operator=(const NetContext &) = delete;

    const Field &field() const {
        return space_.field();
    }
    const PhaseSpace &space() const {
        return space_;
    }
    int d() const {
        return space_.d();
    }
    const MubSet &mub() const {
        return mub_;
    }
    const PauliLabeling &labeling() const {
        return labeling_;
    }

    /// Index of the basis-k vector T(a)|phi_j> for a on line c of striation k.
    int translate(int striation, int line, int j) const {
        return table_[striation][line][j];
    }

    /// Throws DomainError for malformed ray choices.
    QuantumNet complete(const std::vector<int> &ray_choices) const;
    /// (basis, vector) assigned to an arbitrary canonical line.
    std::pair<int, int> assigned(const QuantumNet &net, const Line &line) const;
    const Matrix &projector(int basis, int j) const {
        return projectors_[basis][j];
    }

    /// d^(d+1), or d^(d-1) when the vertical and horizontal rays are pinned
    /// to vector 0 (the all-+1 joint eigenvector).
    long long net_count(bool fix_axes) const;
    /// The index-th net in lexicographic ray_choices order.
    QuantumNet net_at(long long index, bool fix_axes) const;
    /// Visits every net in order. Throws DomainError above kMaxEnumerationDim,
    /// naming the count.
    void enumerate(bool fix_axes, const std::function<void(const QuantumNet &)> &visit) const;
    std::vector<QuantumNet> all_nets(bool fix_axes) const;
    QuantumNet sample(std::mt19937_64 &rng, bool fix_axes = false) const;

    /// A(a) for every point of the net, indexed by point_index. Cached per
    /// ray_choices.
    std::shared_ptr<const std::vector<Matrix>> point_operators(const QuantumNet &net) const;

   private:
    PhaseSpace space_;
    MubSet mub_;
    PauliLabeling labeling_;
    std::vector<std::vector<std::vector<int>>> table_;
    std::vector<std::vector<Matrix>> projectors_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::vector<int>, std::shared_ptr<const std::vector<Matrix>>> cache_;
};

/// The point map (q, p) -> (w q, w^-1 p).
PhasePoint squeeze_point(const Field &field, PhasePoint a);

/// Fixed-axes nets whose point operators U_s permutes: U_s A(a) U_s^dag is
/// again a point operator of the same net, for every a. Requires n >= 2.
std::vector<QuantumNet> squeezing_covariant_nets(const NetContext &ctx, const Matrix &u_s);

}  // namespace dwf
