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

#include "dwf/quantum_net.hpp"

#include <cmath>

#include "dwf/errors.hpp"
#include "dwf/kernels.hpp"
#include "dwf/tolerance.hpp"

namespace dwf {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

}  // namespace

NetContext::NetContext(const Field &field) : space_(field), mub_(build_mub(field)), labeling_(space_) {
    const int d = space_.d();
    const double tol = tolerances().lookup();

    for (int k = 0; k < mub_.num_bases(); ++k) {
        std::vector<Matrix> row;
        for (int j = 0; j < d; ++j) {
            row.push_back(mub_.projector(k, j));
        }
        projectors_.push_back(std::move(row));
    }

    table_.assign(space_.num_striations(), std::vector<std::vector<int>>(d, std::vector<int>(d, -1)));
    for (const auto &s : space_.striations()) {
        const Basis &basis = mub_.bases[s.index];
        for (int c = 0; c < d; ++c) {
            PhasePoint shift = space_.line_points(s.lines[c]).front();
            const PauliOperator shift_op = labeling_.at(shift);
            const Matrix &t = shift_op.dense();
            std::vector<bool> hit(d, false);
            for (int j = 0; j < d; ++j) {
                Vector image = t * basis.vectors[j];
                for (int j2 = 0; j2 < d; ++j2) {
                    if (std::abs(std::abs(basis.vectors[j2].dot(image)) - 1.0) < tol) {
                        table_[s.index][c][j] = j2;
                        break;
                    }
                }
                int found = table_[s.index][c][j];
                if (found < 0 || hit[found]) {
                    throw InternalError("translation of basis " + std::to_string(s.index) +
                                        " leaves the basis; labeling is not covariant");
                }
                hit[found] = true;
            }
        }
        // each ray vector must land on a different vector on every line
        for (int j = 0; j < d; ++j) {
            std::vector<bool> hit(d, false);
            for (int c = 0; c < d; ++c) {
                int found = table_[s.index][c][j];
                if (hit[found]) {
                    throw InternalError("completion of striation " + std::to_string(s.index) + " is not a bijection");
                }
                hit[found] = true;
            }
        }
    }
}

QuantumNet NetContext::complete(const std::vector<int> &ray_choices) const {
    const int d = space_.d();
    if (static_cast<int>(ray_choices.size()) != space_.num_striations()) {
        throw DomainError("ray_choices needs " + std::to_string(space_.num_striations()) + " entries, got " +
                          std::to_string(ray_choices.size()));
    }
    QuantumNet net;
    net.dim = d;
    net.ray_choices = ray_choices;
    net.assignment.resize(ray_choices.size());
    for (size_t k = 0; k < ray_choices.size(); ++k) {
        int j = ray_choices[k];
        if (j < 0 || j >= d) {
            throw DomainError("ray_choices[" + std::to_string(k) + "] = " + std::to_string(j) + " is out of range");
        }
        net.assignment[k].resize(d);
        for (int c = 0; c < d; ++c) {
            net.assignment[k][c] = table_[k][c][j];
        }
    }
    return net;
}

std::pair<int, int> NetContext::assigned(const QuantumNet &net, const Line &line) const {
    auto [k, c] = space_.locate(line);
    return {k, net.assignment[k][c]};
}

long long NetContext::net_count(bool fix_axes) const {
    return ipow(d(), fix_axes ? d() - 1 : d() + 1);
}

QuantumNet NetContext::net_at(long long index, bool fix_axes) const {
    const int slots = space_.num_striations();
    if (index < 0 || index >= net_count(fix_axes)) {
        throw DomainError("net index " + std::to_string(index) + " out of range");
    }
    std::vector<int> choices(slots, 0);
    const int first = fix_axes ? 2 : 0;
    for (int k = slots - 1; k >= first; --k) {
        choices[k] = static_cast<int>(index % d());
        index /= d();
    }
    return complete(choices);
}

void NetContext::enumerate(bool fix_axes, const std::function<void(const QuantumNet &)> &visit) const {
    if (d() > kMaxEnumerationDim) {
        throw DomainError("refusing to enumerate " + std::to_string(net_count(fix_axes)) + " nets at d=" +
                          std::to_string(d()) + "; sample instead");
    }
    const long long count = net_count(fix_axes);
    for (long long i = 0; i < count; ++i) {
        visit(net_at(i, fix_axes));
    }
}

std::vector<QuantumNet> NetContext::all_nets(bool fix_axes) const {
    std::vector<QuantumNet> out;
    enumerate(fix_axes, [&](const QuantumNet &net) { out.push_back(net); });
    return out;
}

QuantumNet NetContext::sample(std::mt19937_64 &rng, bool fix_axes) const {
    std::uniform_int_distribution<int> pick(0, d() - 1);
    std::vector<int> choices(space_.num_striations(), 0);
    for (size_t k = fix_axes ? 2 : 0; k < choices.size(); ++k) {
        choices[k] = pick(rng);
    }
    return complete(choices);
}

std::shared_ptr<const std::vector<Matrix>> NetContext::point_operators(const QuantumNet &net) const {
    {
        std::lock_guard lock(cache_mutex_);
        auto it = cache_.find(net.ray_choices);
        if (it != cache_.end()) {
            return it->second;
        }
    }
    const int d = space_.d();
    auto ops = std::make_shared<std::vector<Matrix>>();
    ops->reserve(static_cast<size_t>(d) * d);
    for (const auto &a : space_.points()) {
        Matrix acc = -Matrix::Identity(d, d);
        for (int k = 0; k < space_.num_striations(); ++k) {
            acc += projectors_[k][net.assignment[k][space_.line_through(k, a)]];
        }
        ops->push_back(acc / static_cast<double>(d));
    }
    std::lock_guard lock(cache_mutex_);
    return cache_.emplace(net.ray_choices, std::move(ops)).first->second;
}

PhasePoint squeeze_point(const Field &field, PhasePoint a) {
    const Element w = field.generator();
    return {field.mul(w, a.q), field.div(a.p, w)};
}

std::vector<QuantumNet> squeezing_covariant_nets(const NetContext &ctx, const Matrix &u_s) {
    if (ctx.field().n() < 2) {
        throw DomainError("squeezing is trivial for prime d");
    }
    auto nets = ctx.all_nets(true);
    auto flags = kernels::flow_scan_omp(ctx, u_s, nets, tolerances().lookup());
    std::vector<QuantumNet> out;
    for (size_t i = 0; i < nets.size(); ++i) {
        if (flags[i]) {
            out.push_back(nets[i]);
        }
    }
    return out;
}

}  // namespace dwf
