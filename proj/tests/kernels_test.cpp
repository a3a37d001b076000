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

#include <gtest/gtest.h>

#include "dwf/clifford.hpp"
#include "dwf/errors.hpp"
#include "dwf/kernels.hpp"
#include "dwf/wigner.hpp"

using dwf::Field;
using dwf::NetContext;

namespace {

TEST(Kernels, MinOverNetsSerialMatchesParallel) {
    for (int d : {2, 3, 4}) {
        NetContext ctx(Field::for_dimension(d));
        std::mt19937_64 rng(31 + d);
        for (int trial = 0; trial < 5; ++trial) {
            auto probs = dwf::probabilities(dwf::random_pure_state(d, rng), ctx.mub()).p;
            for (bool fix : {false, true}) {
                auto a = dwf::kernels::min_over_nets_serial(ctx, probs, fix);
                auto b = dwf::kernels::min_over_nets_omp(ctx, probs, fix);
                EXPECT_EQ(a.value, b.value);
                EXPECT_EQ(a.net_index, b.net_index);
                EXPECT_EQ(a.point, b.point);
            }
        }
    }
}

TEST(Kernels, MinOverNetsAgreesWithWignerTables) {
    NetContext ctx(Field::for_dimension(3));
    std::mt19937_64 rng(4);
    auto state = dwf::random_pure_state(3, rng);
    auto probs = dwf::probabilities(state, ctx.mub());
    auto r = dwf::kernels::min_over_nets_serial(ctx, probs.p);
    auto w = dwf::wigner_function(ctx, probs, ctx.net_at(r.net_index, false));
    EXPECT_NEAR(w.values[r.point], r.value, 1e-14);
    double lowest = 1.0;
    ctx.enumerate(false, [&](const dwf::QuantumNet &net) {
        for (double v : dwf::wigner_function(ctx, probs, net).values) {
            lowest = std::min(lowest, v);
        }
    });
    EXPECT_NEAR(lowest, r.value, 1e-14);
}

TEST(Kernels, FlowScanSerialMatchesParallel) {
    NetContext ctx(Field::for_dimension(4));
    auto nets = ctx.all_nets(true);
    auto u_s = *dwf::squeezing_operator(ctx.field()).dense;
    auto a = dwf::kernels::flow_scan_serial(ctx, u_s, nets, 1e-8);
    auto b = dwf::kernels::flow_scan_omp(ctx, u_s, nets, 1e-8);
    EXPECT_EQ(a, b);
    std::mt19937_64 rng(8);
    auto h = dwf::random_unitary(4, rng);
    EXPECT_EQ(dwf::kernels::flow_scan_serial(ctx, h, nets, 1e-8), dwf::kernels::flow_scan_omp(ctx, h, nets, 1e-8));
}

TEST(Kernels, RefuseLargeDimension) {
    NetContext ctx(Field::for_dimension(7));
    std::vector<std::vector<double>> probs(8, std::vector<double>(7, 1.0 / 7));
    EXPECT_THROW(dwf::kernels::min_over_nets_omp(ctx, probs), dwf::DomainError);
}

}  // namespace
