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

#include <random>
#include <set>

#include "dwf/pauli.hpp"
#include "oracles.hpp"

using dwf::Field;
using dwf::PauliOperator;
using dwf::ZpVector;

namespace {

constexpr double kTol = 1e-12;

ZpVector random_vec(std::mt19937_64 &rng, int p, int n) {
    std::uniform_int_distribution<int> dist(0, p - 1);
    ZpVector v(n);
    for (auto &x : v) {
        x = dist(rng);
    }
    return v;
}

struct Shape {
    int p;
    int n;
};

const Shape kShapes[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}};

TEST(Pauli, DenseMatchesMatrixElementFormula) {
    std::mt19937_64 rng(7);
    for (auto [p, n] : kShapes) {
        const int m = dwf::phase_modulus(p);
        for (int trial = 0; trial < 20; ++trial) {
            ZpVector q = random_vec(rng, p, n), z = random_vec(rng, p, n);
            int phase = std::uniform_int_distribution<int>(0, m - 1)(rng);
            PauliOperator t(p, q, z, phase);
            ASSERT_LT(dwf::max_abs_diff(t.dense(), oracle::pauli(p, q, z, phase)), kTol) << t.to_string();
        }
    }
}

TEST(Pauli, GeneratorsAreShiftAndClock) {
    // X|j> = |j+1>, Z|j> = w^j |j>
    const int p = 3;
    auto x = PauliOperator::x_gen(p, 1, 0).dense();
    auto z = PauliOperator::z_gen(p, 1, 0).dense();
    for (int j = 0; j < p; ++j) {
        EXPECT_NEAR(std::abs(x((j + 1) % p, j) - 1.0), 0.0, kTol);
        EXPECT_NEAR(std::abs(z(j, j) - oracle::omega(j, p)), 0.0, kTol);
    }
    // register 0 is the most significant digit
    auto x0 = PauliOperator::x_gen(2, 2, 0).dense();
    EXPECT_NEAR(std::abs(x0(2, 0) - 1.0), 0.0, kTol);
}

TEST(Pauli, ProductMatchesDenseProduct) {
    std::mt19937_64 rng(11);
    for (auto [p, n] : kShapes) {
        for (int trial = 0; trial < 20; ++trial) {
            PauliOperator a(p, random_vec(rng, p, n), random_vec(rng, p, n), 1);
            PauliOperator b(p, random_vec(rng, p, n), random_vec(rng, p, n));
            ASSERT_LT(dwf::max_abs_diff((a * b).dense(), a.dense() * b.dense()), kTol);
            ASSERT_LT(dwf::max_abs_diff(a.pow(3).dense(), a.dense() * a.dense() * a.dense()), kTol);
        }
    }
}

TEST(Pauli, TranslationsHaveOrderP) {
    std::mt19937_64 rng(3);
    for (auto [p, n] : kShapes) {
        for (int trial = 0; trial < 10; ++trial) {
            auto t = dwf::translation_operator(p, random_vec(rng, p, n), random_vec(rng, p, n));
            EXPECT_TRUE(t.pow(p) == PauliOperator::identity(p, n)) << t.to_string();
            if (p == 2) {
                EXPECT_LT(dwf::max_abs_diff(t.dense(), t.dense().adjoint()), kTol);
            }
        }
    }
}

TEST(Pauli, CommutationPhaseIsSymplecticForm) {
    std::mt19937_64 rng(5);
    for (auto [p, n] : kShapes) {
        for (int trial = 0; trial < 20; ++trial) {
            PauliOperator a(p, random_vec(rng, p, n), random_vec(rng, p, n));
            PauliOperator b(p, random_vec(rng, p, n), random_vec(rng, p, n));
            const int s = dwf::symplectic_form(a, b);
            oracle::Matrix ab = a.dense() * b.dense();
            oracle::Matrix ba = b.dense() * a.dense();
            ASSERT_LT(dwf::max_abs_diff(ab, oracle::omega(-s, p) * ba), kTol);
            EXPECT_EQ(dwf::commutes(a, b), s == 0);
        }
    }
}

TEST(Pauli, StandardSetsPartitionNonIdentityLabels) {
    for (int d : {2, 3, 4, 5, 7, 8, 9}) {
        Field f = Field::for_dimension(d);
        auto sets = dwf::standard_sets(f);
        ASSERT_EQ(static_cast<int>(sets.size()), d + 1);
        std::set<ZpVector> seen;
        for (const auto &s : sets) {
            ASSERT_EQ(static_cast<int>(s.members.size()), d - 1);
            for (const auto &a : s.members) {
                EXPECT_FALSE(a.is_identity_up_to_phase());
                seen.insert(a.vec());
                for (const auto &b : s.members) {
                    EXPECT_TRUE(dwf::commutes(a, b));
                }
            }
            EXPECT_EQ(static_cast<int>(s.generators().size()), f.n());
        }
        EXPECT_EQ(static_cast<int>(seen.size()), d * d - 1) << "sets overlap at d=" << d;
    }
}

TEST(Pauli, StandardSetsAtD4) {
    Field f = Field::for_dimension(4);
    auto sets = dwf::standard_sets(f);
    // kappa_0 = Z-type, kappa_1 = X-type
    for (const auto &a : sets[0].members) {
        EXPECT_TRUE(dwf::is_zero(a.q()));
    }
    for (const auto &a : sets[1].members) {
        EXPECT_TRUE(dwf::is_zero(a.z()));
    }
    EXPECT_EQ(sets[2].a, (ZpVector{1, 0}));
    EXPECT_EQ(sets[2].b, (ZpVector{1, 0}));
}

TEST(Pauli, LabelingIsLinearBijection) {
    for (int d : {2, 3, 4, 5, 8, 9}) {
        dwf::PhaseSpace space(Field::for_dimension(d));
        dwf::PauliLabeling labeling(space);
        std::set<ZpVector> labels;
        auto pts = space.points();
        for (auto a : pts) {
            labels.insert(labeling.at(a).vec());
            for (auto b : pts) {
                auto [qa, za] = labeling.label(a);
                auto [qb, zb] = labeling.label(b);
                auto [qs, zs] = labeling.label(space.add(a, b));
                ASSERT_EQ(qs, dwf::add_mod(qa, qb, space.field().p()));
                ASSERT_EQ(zs, dwf::add_mod(za, zb, space.field().p()));
            }
        }
        EXPECT_EQ(static_cast<int>(labels.size()), d * d);
        auto origin = labeling.label({space.field().zero(), space.field().zero()});
        EXPECT_TRUE(dwf::is_zero(origin.first) && dwf::is_zero(origin.second));
    }
}

TEST(Pauli, RayPointsLandInTheirAbelianSet) {
    for (int d : {3, 4, 8, 9}) {
        dwf::PhaseSpace space(Field::for_dimension(d));
        dwf::PauliLabeling labeling(space);
        auto sets = dwf::standard_sets(space.field());
        for (const auto &s : space.striations()) {
            for (auto a : space.line_points(s.ray())) {
                if (a.q == space.field().zero() && a.p == space.field().zero()) {
                    continue;
                }
                EXPECT_TRUE(sets[s.index].contains(dwf::point_to_translation(a, labeling)))
                    << "d=" << d << " striation " << s.index;
            }
        }
    }
}

}  // namespace
