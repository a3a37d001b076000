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
#include <string>
#include <vector>

#include "dwf/galois.hpp"

namespace dwf {

/// A point (q, p) of the d x d phase-space grid.
struct PhasePoint {
    Element q;
    Element p;

    auto operator<=>(const PhasePoint &) const = default;
};

/// The line q_coef * q + p_coef * p = c, kept in canonical form: the q
/// coefficient is 1 when nonzero, otherwise the p coefficient is 1.
struct Line {
    Element q_coef;
    Element p_coef;
    Element c;

    auto operator<=>(const Line &) const = default;
};

/// Canonicalizes q_coef * q + p_coef * p = c. Throws DomainError when both
/// coefficients vanish.
Line make_line(const Field &field, Element q_coef, Element p_coef, Element c);

/// A family of d parallel lines. `lines[k]` is the line with c = k (element
/// value), so `lines[0]` is the ray through the origin.
struct Striation {
    int index = 0;
    /// A nonzero point on the ray; every ray point is a field multiple of it.
    PhasePoint direction;
    std::vector<Line> lines;

    const Line &ray() const {
        return lines.front();
    }
};

/// Striations in the fixed order: vertical (q = c), horizontal (p = c), then
/// the oblique rays p = w^k q for k = 0..d-2.
std::vector<Striation> build_striations(const Field &field);

/// The discrete phase space over a field together with its striations.
class PhaseSpace {
   public:
    explicit PhaseSpace(Field field);

    const Field &field() const {
        return field_;
    }
    int d() const {
        return field_.d();
    }
    int num_striations() const {
        return d() + 1;
    }
    const std::vector<Striation> &striations() const {
        return striations_;
    }
    const Striation &striation(int k) const {
        return striations_.at(k);
    }

    /// All d^2 points in lexicographic (q, p) order.
    std::vector<PhasePoint> points() const;
    int point_index(PhasePoint a) const {
        return static_cast<int>(a.q.value) * d() + static_cast<int>(a.p.value);
    }
    PhasePoint point_at(int index) const;

    bool contains(const Line &line, PhasePoint a) const;
    /// All solutions of the line equation; exactly d of them.
    std::vector<PhasePoint> line_points(const Line &line) const;
    /// Index (value of c) of the striation-k line through a.
    int line_through(int striation, PhasePoint a) const;
    /// One line per striation, in striation order.
    std::vector<Line> lines_through(PhasePoint a) const;
    /// Striation index and line index of a canonical line.
    std::pair<int, int> locate(const Line &line) const;

    PhasePoint add(PhasePoint a, PhasePoint b) const;
    PhasePoint scale(Element s, PhasePoint a) const;

    /// Image of a line under a bijective point map that sends lines to lines.
    Line map_line(const Line &line, const std::function<PhasePoint(PhasePoint)> &f) const;

    std::string format(const Line &line) const;
    std::string format(PhasePoint a) const;

   private:
    Field field_;
    std::vector<Striation> striations_;
};

}  // namespace dwf
