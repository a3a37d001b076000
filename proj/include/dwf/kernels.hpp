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

// Hot loops over nets. Each has a plain serial version, kept as the
// reference for tests, and an OpenMP version that must agree with it exactly.

#include <vector>

#include "dwf/linalg.hpp"
#include "dwf/quantum_net.hpp"

namespace dwf::kernels {

struct MinResult {
    double value = 0.0;
    long long net_index = -1;
    int point = -1;
};

/// Smallest (sum of p over the lines through a - 1)/d over every net and
/// point. probs[k][j] is the probability of basis k vector j. Ties go to the
/// lowest (net_index, point). Refuses dimensions above kMaxEnumerationDim.
MinResult min_over_nets_serial(const NetContext &ctx, const std::vector<std::vector<double>> &probs,
                               bool fix_axes = false);
MinResult min_over_nets_omp(const NetContext &ctx, const std::vector<std::vector<double>> &probs,
                            bool fix_axes = false);

/// True iff every U A(a) U^dag is within `tol` (max-abs) of some A(b) of the
/// same net.
bool permutes_point_operators(const NetContext &ctx, const Matrix &u, const QuantumNet &net, double tol);

/// flags[i] = permutes_point_operators(ctx, u, nets[i], tol).
std::vector<char> flow_scan_serial(const NetContext &ctx, const Matrix &u, const std::vector<QuantumNet> &nets,
                                   double tol);
std::vector<char> flow_scan_omp(const NetContext &ctx, const Matrix &u, const std::vector<QuantumNet> &nets,
                                double tol);

}  // namespace dwf::kernels
