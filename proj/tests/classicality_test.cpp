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

#include <cmath>
#include <numbers>

#include "dwf/classicality.hpp"
#include "dwf/errors.hpp"
#include "oracles.hpp"

using dwf::DensityState;
using dwf::Field;
using dwf::NetContext;

namespace {

// Brute force walks every net and point through the full Wigner tables.
TEST(Classicality, ClosedFormMatchesBruteForce) {
    for (int d : {2, 3, 4}) {
        NetContext ctx(Field::for_dimension(d));
        std::mt19937_64 rng(40 + d);
        const int trials = d == 4 ? 3 : 10;
        for (int t = 0; t < trials; ++t) {
            auto state = t % 2 ? dwf::random_mixed_state(d, rng) : dwf::random_pure_state(d, rng);
            auto report = dwf::min_wigner(ctx, state);
            EXPECT_NEAR(report.min_wigner, dwf::brute_force_min(ctx, state), 1e-12);
            EXPECT_NEAR(report.min_wigner, (report.sum_of_minima - 1.0) / d, 1e-15);
        }
    }
}

TEST(Classicality, BruteForceRefusesLargeDimension) {
    NetContext ctx(Field::for_dimension(5));
    EXPECT_THROW(dwf::brute_force_min(ctx, DensityState::maximally_mixed(5)), dwf::DomainError);
}

TEST(Classicality, MubVectorsSitOnTheBoundary) {
    for (int d : {2, 3, 4, 5}) {
        NetContext ctx(Field::for_dimension(d));
        for (int k = 0; k <= d; ++k) {
            auto report = dwf::min_wigner(ctx, DensityState::pure(ctx.mub().vector(k, d - 1)));
            EXPECT_NEAR(report.min_wigner, 0.0, 1e-12);
            EXPECT_TRUE(report.in_cd);
            EXPECT_FALSE(report.witness.has_value());
        }
    }
}

TEST(Classicality, QubitWitnessState) {
    // Bloch vector halfway between +X and +Z
    NetContext ctx(Field::for_dimension(2));
    oracle::Vector psi(2);
    psi << std::cos(std::numbers::pi / 8), std::sin(std::numbers::pi / 8);
    auto state = DensityState::pure(psi);
    auto report = dwf::min_wigner(ctx, state);
    EXPECT_NEAR(report.min_wigner, (1.0 - std::sqrt(2.0)) / 4.0, 1e-12);
    EXPECT_FALSE(report.in_cd);
    ASSERT_TRUE(report.witness.has_value());
    auto w = dwf::wigner_function(ctx, state, report.witness->net);
    EXPECT_NEAR(w.at(ctx.space(), report.witness->point), report.min_wigner, 1e-12);
    EXPECT_NEAR(report.witness->value, report.min_wigner, 1e-12);
}

TEST(Classicality, DecompositionReconstructsAnyState) {
    for (int d : {2, 3, 4, 5}) {
        NetContext ctx(Field::for_dimension(d));
        std::mt19937_64 rng(60 + d);
        for (int t = 0; t < 6; ++t) {
            auto state = t % 3 == 0 ? DensityState::maximally_mixed(d)
                                    : (t % 2 ? dwf::random_mixed_state(d, rng) : dwf::random_pure_state(d, rng));
            auto dec = dwf::convex_decomposition(ctx, state);
            auto report = dwf::min_wigner(ctx, state);
            EXPECT_LT(dwf::max_abs_diff(dwf::reconstruct_from_coefficients(ctx, dec.coefficients), state.rho), 1e-10);
            EXPECT_NEAR(dec.total(), 1.0, 1e-12);
            EXPECT_EQ(dec.certified_classical, report.in_cd);
            EXPECT_EQ(dec.min_coefficient() >= -1e-9, report.in_cd);
        }
    }
}

TEST(Classicality, MixturesOfProjectorsAreClassical) {
    NetContext ctx(Field::for_dimension(3));
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 10; ++t) {
        oracle::Matrix rho = oracle::Matrix::Zero(3, 3);
        double total = 0.0;
        for (int k = 0; k <= 3; ++k) {
            for (int j = 0; j < 3; ++j) {
                double w = u(rng);
                rho += w * ctx.projector(k, j);
                total += w;
            }
        }
        auto report = dwf::min_wigner(ctx, DensityState::mixed(rho / total));
        EXPECT_TRUE(report.in_cd);
        EXPECT_GE(report.min_wigner, -1e-12);
    }
}

TEST(Classicality, ClassifyListsMostNegativeFirst) {
    NetContext ctx(Field::for_dimension(3));
    std::mt19937_64 rng(12);
    for (int t = 0; t < 10; ++t) {
        auto state = dwf::random_pure_state(3, rng);
        auto full = dwf::classify(ctx, state, 4);
        if (full.summary.in_cd) {
            EXPECT_TRUE(full.witnesses.empty());
            continue;
        }
        ASSERT_FALSE(full.witnesses.empty());
        EXPECT_LE(full.witnesses.size(), 4u);
        EXPECT_NEAR(full.witnesses.front().value, full.summary.min_wigner, 1e-12);
        for (size_t i = 0; i < full.witnesses.size(); ++i) {
            const auto &wv = full.witnesses[i];
            EXPECT_LT(wv.value, 0.0);
            if (i > 0) {
                EXPECT_LE(full.witnesses[i - 1].value, wv.value + 1e-15);
            }
            auto table = dwf::wigner_function(ctx, state, wv.net);
            EXPECT_NEAR(table.at(ctx.space(), wv.point), wv.value, 1e-12);
        }
    }
}

}  // namespace
