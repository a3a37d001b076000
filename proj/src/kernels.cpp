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

#include "dwf/kernels.hpp"

#include <limits>

#include "dwf/errors.hpp"

namespace dwf::kernels {

namespace {

bool better(const MinResult &a, const MinResult &b) {
    if (a.value != b.value) {
        return a.value < b.value;
    }
    if (a.net_index != b.net_index) {
        return a.net_index < b.net_index;
    }
    return a.point < b.point;
}

void check_enumerable(const NetContext &ctx) {
    if (ctx.d() > kMaxEnumerationDim) {
        throw DomainError("refusing exhaustive minimum over " + std::to_string(ctx.net_count(false)) + " nets at d=" +
                          std::to_string(ctx.d()));
    }
}

// Minimum over the points of one net.
MinResult net_minimum(const NetContext &ctx, const std::vector<std::vector<double>> &probs, const QuantumNet &net,
                      long long net_index) {
    const PhaseSpace &space = ctx.space();
    const int d = space.d();
    MinResult best{std::numeric_limits<double>::infinity(), net_index, -1};
    for (int idx = 0; idx < d * d; ++idx) {
        PhasePoint a = space.point_at(idx);
        double sum = -1.0;
        for (int k = 0; k < space.num_striations(); ++k) {
            sum += probs[k][net.assignment[k][space.line_through(k, a)]];
        }
        double w = sum / d;
        if (w < best.value) {
            best.value = w;
            best.point = idx;
        }
    }
    return best;
}

}  // namespace

MinResult min_over_nets_serial(const NetContext &ctx, const std::vector<std::vector<double>> &probs,
                               bool fix_axes) {
    check_enumerable(ctx);
    MinResult best{std::numeric_limits<double>::infinity(), -1, -1};
    const long long count = ctx.net_count(fix_axes);
    for (long long i = 0; i < count; ++i) {
        MinResult r = net_minimum(ctx, probs, ctx.net_at(i, fix_axes), i);
        if (better(r, best)) {
            best = r;
        }
    }
    return best;
}

MinResult min_over_nets_omp(const NetContext &ctx, const std::vector<std::vector<double>> &probs, bool fix_axes) {
    check_enumerable(ctx);
    MinResult best{std::numeric_limits<double>::infinity(), -1, -1};
    const long long count = ctx.net_count(fix_axes);
#pragma omp parallel
    {
        MinResult local{std::numeric_limits<double>::infinity(), -1, -1};
#pragma omp for schedule(static)
        for (long long i = 0; i < count; ++i) {
            MinResult r = net_minimum(ctx, probs, ctx.net_at(i, fix_axes), i);
            if (better(r, local)) {
                local = r;
            }
        }
#pragma omp critical
        if (better(local, best)) {
            best = local;
        }
    }
    return best;
}

bool permutes_point_operators(const NetContext &ctx, const Matrix &u, const QuantumNet &net, double tol) {
    auto ops = ctx.point_operators(net);
    for (const auto &a : *ops) {
        Matrix image = u * a * u.adjoint();
        bool found = false;
        for (const auto &b : *ops) {
            if (max_abs_diff(image, b) < tol) {
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

std::vector<char> flow_scan_serial(const NetContext &ctx, const Matrix &u, const std::vector<QuantumNet> &nets,
                                   double tol) {
    std::vector<char> flags(nets.size(), 0);
    for (size_t i = 0; i < nets.size(); ++i) {
        flags[i] = permutes_point_operators(ctx, u, nets[i], tol) ? 1 : 0;
    }
    return flags;
}

std::vector<char> flow_scan_omp(const NetContext &ctx, const Matrix &u, const std::vector<QuantumNet> &nets,
                                double tol) {
    std::vector<char> flags(nets.size(), 0);
    const long long count = static_cast<long long>(nets.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
        flags[i] = permutes_point_operators(ctx, u, nets[i], tol) ? 1 : 0;
    }
    return flags;
}

}  // namespace dwf::kernels
