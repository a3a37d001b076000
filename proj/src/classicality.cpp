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

#include "dwf/classicality.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "dwf/errors.hpp"
#include "dwf/kernels.hpp"
#include "dwf/tolerance.hpp"

namespace dwf {

ClassicalityReport min_wigner(const NetContext &ctx, const DensityState &state) {
    ClassicalityReport report;
    report.probabilities = probabilities(state, ctx.mub());
    report.sum_of_minima = report.probabilities.sum_of_minima();
    report.min_wigner = (report.sum_of_minima - 1.0) / ctx.d();
    report.in_cd = report.min_wigner >= -membership_tolerance();
    if (!report.in_cd) {
        const Field &f = ctx.field();
        report.witness = WitnessValue{ctx.complete(report.probabilities.argmins()), {f.zero(), f.zero()},
                                      report.min_wigner};
    }
    return report;
}

double brute_force_min(const NetContext &ctx, const DensityState &state) {
    if (ctx.d() > 4) {
        throw DomainError("brute_force_min enumerates " + std::to_string(ctx.net_count(false)) +
                          " nets at d=" + std::to_string(ctx.d()) + "; limit is d=4");
    }
    return kernels::min_over_nets_omp(ctx, probabilities(state, ctx.mub()).p).value;
}

double DecompositionResult::min_coefficient() const {
    double m = coefficients.front().front();
    for (const auto &row : coefficients) {
        m = std::min(m, *std::min_element(row.begin(), row.end()));
    }
    return m;
}

double DecompositionResult::total() const {
    double t = 0.0;
    for (const auto &row : coefficients) {
        t = std::accumulate(row.begin(), row.end(), t);
    }
    return t;
}

DecompositionResult convex_decomposition(const NetContext &ctx, const DensityState &state) {
    ProbabilityTable probs = probabilities(state, ctx.mub());
    auto minima = probs.minima();
    DecompositionResult out;
    out.x_total = probs.sum_of_minima() - 1.0;
    const double share = out.x_total / (ctx.d() + 1);
    for (int k = 0; k < probs.num_bases(); ++k) {
        std::vector<double> row;
        for (double p : probs.p[k]) {
            row.push_back(p - minima[k] + share);
        }
        out.coefficients.push_back(std::move(row));
    }
    out.certified_classical = out.x_total / ctx.d() >= -membership_tolerance();
    return out;
}

Matrix reconstruct_from_coefficients(const NetContext &ctx, const std::vector<std::vector<double>> &c) {
    Matrix rho = Matrix::Zero(ctx.d(), ctx.d());
    for (size_t k = 0; k < c.size(); ++k) {
        for (size_t j = 0; j < c[k].size(); ++j) {
            rho += c[k][j] * ctx.projector(static_cast<int>(k), static_cast<int>(j));
        }
    }
    return rho;
}

namespace {

// The k smallest sums picking one entry per row, best-first search over
// per-row sorted orders.
std::vector<std::pair<double, std::vector<int>>> k_smallest_sums(const std::vector<std::vector<double>> &rows,
                                                                 int k) {
    const size_t r = rows.size();
    std::vector<std::vector<int>> order(r);
    for (size_t i = 0; i < r; ++i) {
        order[i].resize(rows[i].size());
        std::iota(order[i].begin(), order[i].end(), 0);
        std::stable_sort(order[i].begin(), order[i].end(),
                         [&](int a, int b) { return rows[i][a] < rows[i][b]; });
    }
    auto sum_of = [&](const std::vector<int> &ranks) {
        double s = 0.0;
        for (size_t i = 0; i < r; ++i) {
            s += rows[i][order[i][ranks[i]]];
        }
        return s;
    };
    using Item = std::pair<double, std::vector<int>>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
    std::set<std::vector<int>> seen;
    std::vector<int> start(r, 0);
    frontier.push({sum_of(start), start});
    seen.insert(start);
    std::vector<std::pair<double, std::vector<int>>> out;
    while (!frontier.empty() && static_cast<int>(out.size()) < k) {
        auto [s, ranks] = frontier.top();
        frontier.pop();
        std::vector<int> choice(r);
        for (size_t i = 0; i < r; ++i) {
            choice[i] = order[i][ranks[i]];
        }
        out.push_back({s, choice});
        for (size_t i = 0; i < r; ++i) {
            if (ranks[i] + 1 < static_cast<int>(rows[i].size())) {
                auto next = ranks;
                ++next[i];
                if (seen.insert(next).second) {
                    frontier.push({sum_of(next), next});
                }
            }
        }
    }
    return out;
}

}  // namespace

FullReport classify(const NetContext &ctx, const DensityState &state, int k) {
    FullReport out;
    out.summary = min_wigner(ctx, state);
    out.decomposition = convex_decomposition(ctx, state);
    const Field &f = ctx.field();
    for (const auto &[sum, choice] : k_smallest_sums(out.summary.probabilities.p, k)) {
        double value = (sum - 1.0) / ctx.d();
        if (value >= -membership_tolerance()) {
            break;
        }
        out.witnesses.push_back({ctx.complete(choice), {f.zero(), f.zero()}, value});
    }
    return out;
}

}  // namespace dwf
