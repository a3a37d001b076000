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

#include <optional>
#include <vector>

#include "dwf/quantum_net.hpp"
#include "dwf/wigner.hpp"

namespace dwf {

/// A (net, point) pair and its Wigner value.
struct WitnessValue {
    QuantumNet net;
    PhasePoint point;
    double value = 0.0;
};

struct ClassicalityReport {
    ProbabilityTable probabilities;
    /// Minimum of W over every net and every point.
    double min_wigner = 0.0;
    double sum_of_minima = 0.0;
    /// min_wigner >= -membership_tolerance()
    bool in_cd = false;
    /// Set when the state is outside C_d: the net placing each basis's least likely
    /// vector on its ray, evaluated at the origin.
    std::optional<WitnessValue> witness;
};

/// Closed form: (sum over bases of the smallest probability - 1) / d.
ClassicalityReport min_wigner(const NetContext &ctx, const DensityState &state);

/// Exhaustive minimum over all d^(d+1) nets and d^2 points. Throws
/// DomainError for d > 4.
double brute_force_min(const NetContext &ctx, const DensityState &state);

struct DecompositionResult {
    /// c[k][j] multiplies the projector on basis k vector j.
    std::vector<std::vector<double>> coefficients;
    /// sum of minima - 1
    double x_total = 0.0;
    /// The input passed the membership test, so every coefficient should be
    /// non-negative.
    bool certified_classical = false;

    double min_coefficient() const;
    double total() const;
};

/// c[k][j] = p[k][j] - min_j p[k][j] + x / (d + 1). Valid for any Hermitian
/// unit-trace input; coefficients are non-negative exactly on C_d.
DecompositionResult convex_decomposition(const NetContext &ctx, const DensityState &state);

/// sum over k, j of c[k][j] P_j^(k)
Matrix reconstruct_from_coefficients(const NetContext &ctx, const std::vector<std::vector<double>> &c);

struct FullReport {
    ClassicalityReport summary;
    DecompositionResult decomposition;
    /// Up to k negative Wigner values, most negative first. Every value class
    /// is attained at all d^2 points by translating the net; the list holds
    /// the origin representative of each class.
    std::vector<WitnessValue> witnesses;
};

FullReport classify(const NetContext &ctx, const DensityState &state, int k = 5);

}  // namespace dwf
