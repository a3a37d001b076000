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

#include "dwf/galois.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dwf/errors.hpp"

namespace dwf {

namespace {

using Poly = std::vector<int>;

void trim(Poly &a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

Poly poly_mul(const Poly &a, const Poly &b, int p) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] = mod(out[i + j] + static_cast<long long>(a[i]) * b[j], p);
        }
    }
    trim(out);
    return out;
}

/// Remainder of a modulo m (m nonzero).
Poly poly_rem(Poly a, const Poly &m, int p) {
    trim(a);
    int lead_inv = inverse_mod(m.back(), p);
    while (a.size() >= m.size()) {
        int f = mod(static_cast<long long>(a.back()) * lead_inv, p);
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            a[shift + i] = mod(a[shift + i] - static_cast<long long>(f) * m[i], p);
        }
        trim(a);
    }
    return a;
}

Poly poly_from_value(std::uint32_t value, int p) {
    Poly out;
    while (value > 0) {
        out.push_back(static_cast<int>(value % p));
        value /= p;
    }
    return out;
}

std::uint32_t value_from_poly(const Poly &a, int p, int n) {
    std::uint32_t v = 0;
    for (int i = n - 1; i >= 0; --i) {
        v = v * p + (i < static_cast<int>(a.size()) ? a[i] : 0);
    }
    return v;
}

int int_pow(int base, int e) {
    int r = 1;
    while (e-- > 0) {
        r *= base;
    }
    return r;
}

bool is_prime(int p) {
    if (p < 2) {
        return false;
    }
    for (int f = 2; f * f <= p; ++f) {
        if (p % f == 0) {
            return false;
        }
    }
    return true;
}

struct TableEntry {
    int p;
    int n;
    std::vector<int> poly;
};

// Fixed convention table. x^2+1 is not primitive over GF(3), hence x^2+x+2 for GF(9).
const std::vector<TableEntry> &convention_table() {
    static const std::vector<TableEntry> table = {
        {2, 1, {1, 1}},        // x + 1, w = 1
        {3, 1, {1, 1}},        // x + 1, w = 2
        {5, 1, {3, 1}},        // x - 2, w = 2
        {7, 1, {4, 1}},        // x - 3, w = 3
        {2, 2, {1, 1, 1}},     // x^2 + x + 1
        {2, 3, {1, 1, 0, 1}},  // x^3 + x + 1
        {3, 2, {2, 1, 1}},     // x^2 + x + 2
    };
    return table;
}

}  // namespace

bool is_irreducible(std::span<const int> poly_span, int p) {
    Poly poly(poly_span.begin(), poly_span.end());
    trim(poly);
    int n = static_cast<int>(poly.size()) - 1;
    if (n < 1) {
        return false;
    }
    // Trial division by every monic polynomial of degree 1..n/2.
    for (int deg = 1; deg <= n / 2; ++deg) {
        int count = int_pow(p, deg);
        for (int low = 0; low < count; ++low) {
            Poly divisor = poly_from_value(static_cast<std::uint32_t>(low), p);
            divisor.resize(deg + 1, 0);
            divisor[deg] = 1;
            if (poly_rem(poly, divisor, p).empty()) {
                return false;
            }
        }
    }
    return true;
}

bool is_primitive(std::span<const int> poly_span, int p) {
    if (!is_irreducible(poly_span, p)) {
        return false;
    }
    Poly poly(poly_span.begin(), poly_span.end());
    trim(poly);
    int n = static_cast<int>(poly.size()) - 1;
    int order_target = int_pow(p, n) - 1;
    Poly x = poly_rem({0, 1}, poly, p);
    Poly acc = x;
    for (int k = 1; k < order_target; ++k) {
        if (acc == Poly{1}) {
            return false;
        }
        acc = poly_rem(poly_mul(acc, x, p), poly, p);
    }
    return acc == Poly{1};
}

Field Field::make(int p, int n) {
    if (!is_prime(p) || n < 1) {
        throw DomainError("GF(" + std::to_string(p) + "^" + std::to_string(n) + ") is not a field");
    }
    for (const auto &entry : convention_table()) {
        if (entry.p == p && entry.n == n) {
            return Field(p, n, entry.poly);
        }
    }
    long long order = 1;
    for (int i = 0; i < n && order <= 256; ++i) {
        order *= p;
    }
    if (order > 256) {
        throw DomainError("GF(" + std::to_string(p) + "^" + std::to_string(n) + ") is beyond the supported order 256");
    }
    const int d = static_cast<int>(order);
    for (int low = 0; low < d; ++low) {
        Poly poly = poly_from_value(static_cast<std::uint32_t>(low), p);
        poly.resize(n + 1, 0);
        poly[n] = 1;
        if (is_primitive(poly, p)) {
            return Field(p, n, poly);
        }
    }
    throw InternalError("no primitive polynomial found");
}

Field Field::for_dimension(int d) {
    for (int p = 2; p <= d; ++p) {
        if (!is_prime(p)) {
            continue;
        }
        int n = 0;
        int rest = d;
        while (rest % p == 0) {
            rest /= p;
            ++n;
        }
        if (rest == 1 && n > 0) {
            return make(p, n);
        }
        if (n > 0) {
            break;
        }
    }
    throw DomainError("dimension " + std::to_string(d) + " is not a prime power");
}

Field::Field(int p, int n, std::vector<int> primitive_poly)
    : p_(p), n_(n), d_(int_pow(p, n)), poly_(std::move(primitive_poly)) {
    if (!is_prime(p) || n < 1) {
        throw DomainError("GF(" + std::to_string(p) + "^" + std::to_string(n) + ") is not a field");
    }
    for (auto &c : poly_) {
        c = mod(c, p);
    }
    if (static_cast<int>(poly_.size()) != n + 1 || poly_.back() != 1) {
        throw DomainError("primitive polynomial must be monic of degree " + std::to_string(n));
    }
    if (!is_irreducible(poly_, p)) {
        throw DomainError("polynomial " + poly_string() + " is reducible over Z_" + std::to_string(p));
    }
    if (!is_primitive(poly_, p)) {
        throw DomainError("polynomial " + poly_string() + " is not primitive over Z_" + std::to_string(p));
    }

    auto d = static_cast<size_t>(d_);
    add_.resize(d * d);
    neg_.resize(d);
    mul_.resize(d * d);
    for (std::uint32_t a = 0; a < d; ++a) {
        Poly pa = poly_from_value(a, p);
        pa.resize(n, 0);
        Poly na(n);
        for (int i = 0; i < n; ++i) {
            na[i] = mod(-pa[i], p);
        }
        neg_[a] = value_from_poly(na, p, n);
        for (std::uint32_t b = 0; b < d; ++b) {
            Poly pb = poly_from_value(b, p);
            pb.resize(n, 0);
            Poly sum(n);
            for (int i = 0; i < n; ++i) {
                sum[i] = mod(pa[i] + pb[i], p);
            }
            add_[a * d + b] = value_from_poly(sum, p, n);
            Poly prod = poly_rem(poly_mul(poly_from_value(a, p), poly_from_value(b, p), p), poly_, p);
            mul_[a * d + b] = value_from_poly(prod, p, n);
        }
    }

    // Generator is the class of x modulo the primitive polynomial.
    Element w{value_from_poly(poly_rem({0, 1}, poly_, p), p, n)};
    exp_.assign(d - 1, Element{});
    log_.assign(d, -1);
    Element acc = one();
    for (int k = 0; k < d_ - 1; ++k) {
        if (log_[acc.value] != -1) {
            throw InternalError("generator does not span the multiplicative group");
        }
        exp_[k] = acc;
        log_[acc.value] = k;
        acc = Element{mul_[acc.value * d + w.value]};
    }
    if (acc != one()) {
        throw InternalError("generator order mismatch");
    }

    companion_ = ZpMatrix(n, n, p);
    for (int i = 0; i < n; ++i) {
        ZpVector basis(n, 0);
        basis[i] = 1;
        companion_.set_row(i, coords(mul(from_coords(basis), w)));
    }
}

std::string Field::poly_string() const {
    std::ostringstream out;
    bool first = true;
    for (int i = static_cast<int>(poly_.size()) - 1; i >= 0; --i) {
        int c = poly_[i];
        if (c == 0) {
            continue;
        }
        if (!first) {
            out << " + ";
        }
        first = false;
        if (i == 0 || c != 1) {
            out << c;
        }
        if (i >= 1) {
            out << "x";
        }
        if (i >= 2) {
            out << "^" << i;
        }
    }
    return out.str();
}

Element Field::element(std::uint32_t value) const {
    if (value >= static_cast<std::uint32_t>(d_)) {
        throw DomainError("element value " + std::to_string(value) + " out of range for GF(" +
                          std::to_string(d_) + ")");
    }
    return {value};
}

std::vector<Element> Field::elements() const {
    std::vector<Element> out(d_);
    for (int v = 0; v < d_; ++v) {
        out[v] = Element{static_cast<std::uint32_t>(v)};
    }
    return out;
}

ZpVector Field::coords(Element e) const {
    ZpVector out(n_);
    std::uint32_t v = e.value;
    for (int i = 0; i < n_; ++i) {
        out[i] = static_cast<int>(v % p_);
        v /= p_;
    }
    return out;
}

Element Field::from_coords(std::span<const int> c) const {
    if (static_cast<int>(c.size()) != n_) {
        throw DomainError("coordinate tuple has wrong length");
    }
    std::uint32_t v = 0;
    for (int i = n_ - 1; i >= 0; --i) {
        v = v * p_ + mod(c[i], p_);
    }
    return {v};
}

Element Field::mul(Element a, Element b) const {
    if (a.value == 0 || b.value == 0) {
        return zero();
    }
    return exp_[(log_[a.value] + log_[b.value]) % (d_ - 1)];
}

Element Field::inv(Element a) const {
    if (a.value == 0) {
        throw DomainError("inverse of zero in GF(" + std::to_string(d_) + ")");
    }
    return exp_[(d_ - 1 - log_[a.value]) % (d_ - 1)];
}

Element Field::pow(Element a, long long k) const {
    if (a.value == 0) {
        if (k < 0) {
            throw DomainError("negative power of zero");
        }
        return k == 0 ? one() : zero();
    }
    return exp(static_cast<long long>(log_[a.value]) * k);
}

Element Field::exp(long long k) const {
    long long m = d_ - 1;
    return exp_[static_cast<size_t>(((k % m) + m) % m)];
}

int Field::log(Element a) const {
    if (a.value == 0) {
        throw DomainError("log of zero");
    }
    return log_[a.value];
}

int Field::trace(Element a) const {
    Element acc = zero();
    Element term = a;
    for (int i = 0; i < n_; ++i) {
        acc = add(acc, term);
        term = pow(term, p_);
    }
    if (acc.value >= static_cast<std::uint32_t>(p_)) {
        throw InternalError("trace left the prime subfield");
    }
    return static_cast<int>(acc.value);
}

Element Field::apply(FieldOp op, Element a, Element b, long long k) const {
    switch (op) {
        case FieldOp::add:
            return add(a, b);
        case FieldOp::mul:
            return mul(a, b);
        case FieldOp::inv:
            return inv(a);
        case FieldOp::pow:
            return pow(a, k);
    }
    throw InternalError("unknown field op");
}

std::string Field::format(Element e) const {
    if (n_ == 1) {
        return std::to_string(e.value);
    }
    auto c = coords(e);
    std::string out = "(";
    for (int i = 0; i < n_; ++i) {
        out += (i ? "," : "") + std::to_string(c[i]);
    }
    return out + ")";
}

ZpMatrix companion_matrix(const Field &field) {
    return field.companion();
}

std::optional<ZpMatrix> self_dual_basis(const Field &field) {
    if (field.p() != 2) {
        throw DomainError("self-dual basis search is only supported in characteristic 2");
    }
    int n = field.n();
    int d = field.d();
    std::vector<std::uint32_t> chosen;
    // Depth-first over increasing element values; orthonormality is checked incrementally.
    auto search = [&](auto &&self, std::uint32_t start) -> bool {
        if (static_cast<int>(chosen.size()) == n) {
            ZpMatrix basis(n, n, 2);
            for (int i = 0; i < n; ++i) {
                basis.set_row(i, field.coords(Element{chosen[i]}));
            }
            return basis.inverse().has_value();
        }
        for (std::uint32_t v = start; v < static_cast<std::uint32_t>(d); ++v) {
            Element e{v};
            if (field.trace(field.mul(e, e)) != 1) {
                continue;
            }
            bool orthogonal = std::all_of(chosen.begin(), chosen.end(), [&](std::uint32_t u) {
                return field.trace(field.mul(e, Element{u})) == 0;
            });
            if (!orthogonal) {
                continue;
            }
            chosen.push_back(v);
            if (self(self, v + 1)) {
                return true;
            }
            chosen.pop_back();
        }
        return false;
    };
    if (!search(search, 1)) {
        return std::nullopt;
    }
    ZpMatrix basis(n, n, 2);
    for (int i = 0; i < n; ++i) {
        basis.set_row(i, field.coords(Element{chosen[i]}));
    }
    return basis;
}

}  // namespace dwf
