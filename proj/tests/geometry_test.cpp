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

#include <set>

#include "dwf/errors.hpp"
#include "dwf/geometry.hpp"

using dwf::Field;
using dwf::Line;
using dwf::PhasePoint;
using dwf::PhaseSpace;

namespace {

const int kDims[] = {2, 3, 4, 5, 7, 8, 9};

TEST(Geometry, StriationCountAndLineSize) {
    for (int d : kDims) {
        PhaseSpace space(Field::for_dimension(d));
        ASSERT_EQ(space.num_striations(), d + 1);
        for (const auto &s : space.striations()) {
            ASSERT_EQ(static_cast<int>(s.lines.size()), d);
            std::set<PhasePoint> covered;
            for (const auto &l : s.lines) {
                auto pts = space.line_points(l);
                ASSERT_EQ(static_cast<int>(pts.size()), d);
                for (auto a : pts) {
                    EXPECT_TRUE(space.contains(l, a));
                    covered.insert(a);
                }
            }
            EXPECT_EQ(static_cast<int>(covered.size()), d * d) << "striation " << s.index << " is not a partition";
        }
    }
}

TEST(Geometry, TwoPointsShareExactlyOneLine) {
    for (int d : {2, 3, 4, 5, 8, 9}) {
        PhaseSpace space(Field::for_dimension(d));
        auto pts = space.points();
        for (size_t i = 0; i < pts.size(); ++i) {
            for (size_t j = i + 1; j < pts.size(); ++j) {
                int shared = 0;
                for (const auto &s : space.striations()) {
                    for (const auto &l : s.lines) {
                        shared += (space.contains(l, pts[i]) && space.contains(l, pts[j])) ? 1 : 0;
                    }
                }
                ASSERT_EQ(shared, 1) << "d=" << d;
            }
        }
    }
}

TEST(Geometry, RaysPassThroughOrigin) {
    for (int d : kDims) {
        PhaseSpace space(Field::for_dimension(d));
        const Field &f = space.field();
        for (const auto &s : space.striations()) {
            EXPECT_TRUE(space.contains(s.ray(), {f.zero(), f.zero()}));
            EXPECT_TRUE(space.contains(s.ray(), s.direction));
            EXPECT_EQ(space.line_through(s.index, {f.zero(), f.zero()}), 0);
        }
    }
}

TEST(Geometry, FixedStriationOrder) {
    PhaseSpace space(Field::for_dimension(3));
    const Field &f = space.field();
    // vertical: q = c
    EXPECT_EQ(space.striation(0).ray().q_coef, f.one());
    EXPECT_EQ(space.striation(0).ray().p_coef, f.zero());
    // horizontal: p = c
    EXPECT_EQ(space.striation(1).ray().q_coef, f.zero());
    EXPECT_EQ(space.striation(1).ray().p_coef, f.one());
    // p = w^k q passes through (1, w^k)
    for (int k = 0; k < 2; ++k) {
        EXPECT_TRUE(space.contains(space.striation(2 + k).ray(), {f.one(), f.exp(k)}));
    }
}

TEST(Geometry, D3ObliqueLineExample) {
    PhaseSpace space(Field::for_dimension(3));
    const Field &f = space.field();
    // q + p = 1 in Z_3
    Line l = dwf::make_line(f, f.one(), f.one(), f.one());
    std::set<PhasePoint> expected{{f.element(0), f.element(1)}, {f.element(1), f.element(0)}, {f.element(2), f.element(2)}};
    auto pts = space.line_points(l);
    EXPECT_EQ(std::set<PhasePoint>(pts.begin(), pts.end()), expected);
}

TEST(Geometry, CanonicalFormAndLocate) {
    PhaseSpace space(Field::for_dimension(5));
    const Field &f = space.field();
    Line scaled = dwf::make_line(f, f.element(2), f.element(4), f.element(3));
    EXPECT_EQ(scaled.q_coef, f.one());
    auto [k, c] = space.locate(scaled);
    EXPECT_EQ(space.striation(k).lines[c], scaled);
    EXPECT_THROW(dwf::make_line(f, f.zero(), f.zero(), f.one()), dwf::DomainError);
}

TEST(Geometry, LinesThroughPointOnePerStriation) {
    for (int d : kDims) {
        PhaseSpace space(Field::for_dimension(d));
        for (auto a : space.points()) {
            auto lines = space.lines_through(a);
            ASSERT_EQ(static_cast<int>(lines.size()), d + 1);
            for (size_t k = 0; k < lines.size(); ++k) {
                EXPECT_TRUE(space.contains(lines[k], a));
                EXPECT_EQ(space.locate(lines[k]).first, static_cast<int>(k));
            }
        }
    }
}

TEST(Geometry, TranslationPreservesStriation) {
    PhaseSpace space(Field::for_dimension(4));
    for (auto shift : space.points()) {
        for (const auto &s : space.striations()) {
            for (const auto &l : s.lines) {
                Line moved = space.map_line(l, [&](PhasePoint x) { return space.add(x, shift); });
                EXPECT_EQ(space.locate(moved).first, s.index);
            }
        }
    }
}

}  // namespace
