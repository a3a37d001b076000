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

#include "dwf/geometry.hpp"

#include "dwf/errors.hpp"

namespace dwf {

Line make_line(const Field &field, Element q_coef, Element p_coef, Element c) {
    Element lead;
    if (q_coef != field.zero()) {
        lead = q_coef;
    } else if (p_coef != field.zero()) {
        lead = p_coef;
    } else {
        throw DomainError("line needs a nonzero coefficient");
    }
    Element s = field.inv(lead);
    return {field.mul(s, q_coef), field.mul(s, p_coef), field.mul(s, c)};
}

std::vector<Striation> build_striations(const Field &field) {
    const int d = field.d();
    // A line with direction (a, b) satisfies b q - a p = c.
    auto striation_for = [&](int index, PhasePoint dir) {
        Striation s;
        s.index = index;
        s.direction = dir;
        Line ray = make_line(field, dir.p, field.neg(dir.q), field.zero());
        for (int c = 0; c < d; ++c) {
            s.lines.push_back({ray.q_coef, ray.p_coef, Element{static_cast<std::uint32_t>(c)}});
        }
        return s;
    };
    std::vector<Striation> out;
    out.push_back(striation_for(0, {field.zero(), field.one()}));  // vertical, q = c
    out.push_back(striation_for(1, {field.one(), field.zero()}));  // horizontal, p = c
    for (int k = 0; k < d - 1; ++k) {
        out.push_back(striation_for(2 + k, {field.one(), field.exp(k)}));  // p = w^k q
    }
    return out;
}

PhaseSpace::PhaseSpace(Field field) : field_(std::move(field)), striations_(build_striations(field_)) {
}

std::vector<PhasePoint> PhaseSpace::points() const {
    std::vector<PhasePoint> out;
    out.reserve(static_cast<size_t>(d()) * d());
    for (int i = 0; i < d() * d(); ++i) {
        out.push_back(point_at(i));
    }
    return out;
}

PhasePoint PhaseSpace::point_at(int index) const {
    return {Element{static_cast<std::uint32_t>(index / d())}, Element{static_cast<std::uint32_t>(index % d())}};
}

bool PhaseSpace::contains(const Line &line, PhasePoint a) const {
    const Field &f = field_;
    return f.add(f.mul(line.q_coef, a.q), f.mul(line.p_coef, a.p)) == line.c;
}

std::vector<PhasePoint> PhaseSpace::line_points(const Line &line) const {
    const Field &f = field_;
    std::vector<PhasePoint> out;
    out.reserve(d());
    if (line.p_coef == f.zero()) {
        // q = c / q_coef, p free.
        Element q = f.div(line.c, line.q_coef);
        for (auto p : f.elements()) {
            out.push_back({q, p});
        }
    } else {
        for (auto q : f.elements()) {
            Element p = f.div(f.sub(line.c, f.mul(line.q_coef, q)), line.p_coef);
            out.push_back({q, p});
        }
    }
    return out;
}

int PhaseSpace::line_through(int striation, PhasePoint a) const {
    const Line &ray = striations_.at(striation).ray();
    const Field &f = field_;
    return static_cast<int>(f.add(f.mul(ray.q_coef, a.q), f.mul(ray.p_coef, a.p)).value);
}

std::vector<Line> PhaseSpace::lines_through(PhasePoint a) const {
    std::vector<Line> out;
    out.reserve(num_striations());
    for (int k = 0; k < num_striations(); ++k) {
        out.push_back(striations_[k].lines[line_through(k, a)]);
    }
    return out;
}

std::pair<int, int> PhaseSpace::locate(const Line &line) const {
    for (const auto &s : striations_) {
        if (s.ray().q_coef == line.q_coef && s.ray().p_coef == line.p_coef) {
            return {s.index, static_cast<int>(line.c.value)};
        }
    }
    throw InternalError("line " + format(line) + " is not canonical");
}

PhasePoint PhaseSpace::add(PhasePoint a, PhasePoint b) const {
    return {field_.add(a.q, b.q), field_.add(a.p, b.p)};
}

PhasePoint PhaseSpace::scale(Element s, PhasePoint a) const {
    return {field_.mul(s, a.q), field_.mul(s, a.p)};
}

Line PhaseSpace::map_line(const Line &line, const std::function<PhasePoint(PhasePoint)> &f) const {
    auto pts = line_points(line);
    PhasePoint a = f(pts[0]);
    PhasePoint b = f(pts[1]);
    for (const auto &candidate : lines_through(a)) {
        if (contains(candidate, b)) {
            return candidate;
        }
    }
    throw InternalError("point map does not send lines to lines");
}

std::string PhaseSpace::format(const Line &line) const {
    const Field &f = field_;
    std::string out;
    if (line.q_coef != f.zero()) {
        out += (line.q_coef == f.one() ? "" : f.format(line.q_coef) + "*") + "q";
    }
    if (line.p_coef != f.zero()) {
        out += (out.empty() ? "" : " + ") + (line.p_coef == f.one() ? "" : f.format(line.p_coef) + "*") + "p";
    }
    return out + " = " + f.format(line.c);
}

std::string PhaseSpace::format(PhasePoint a) const {
    return "(" + field_.format(a.q) + ", " + field_.format(a.p) + ")";
}

}  // namespace dwf
