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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dwf/modular.hpp"

namespace dwf {

/// An element of GF(p^n), stored as its coordinate tuple in the polynomial
/// basis {1, x, ..., x^(n-1)} packed base-p: value = sum_i coords[i] * p^i.
///
/// Element values therefore run over [0, d) and their natural order is the
/// lexicographic field-coordinate order used for all tabular output.
struct Element {
    std::uint32_t value = 0;

    auto operator<=>(const Element &) const = default;
};

enum class FieldOp { add, mul, inv, pow };

/// GF(p^n) with a fixed primitive polynomial.
///
/// The primitive polynomial is monic, stored low-to-high (n+1 coefficients).
/// For n = 1 it is x - w with w a primitive root mod p, so the generator is w
/// and the companion matrix is the 1x1 matrix [w].
///
/// All tables are built at construction; the object is immutable afterwards.
class Field {
   public:
    /// Field from the fixed convention table (d in {2,3,4,5,7,8,9}); other
    /// prime powers fall back to the lexicographically first primitive polynomial.
    static Field make(int p, int n);
    static Field for_dimension(int d);

    /// Validates that `primitive_poly` is monic, irreducible and primitive.
    Field(int p, int n, std::vector<int> primitive_poly);

    int p() const {
        return p_;
    }
    int n() const {
        return n_;
    }
    int d() const {
        return d_;
    }
    std::span<const int> primitive_poly() const {
        return poly_;
    }
    std::string poly_string() const;

    Element zero() const {
        return {0};
    }
    Element one() const {
        return {1};
    }
    Element generator() const {
        return exp_[1 % exp_.size()];
    }
    Element element(std::uint32_t value) const;
    std::vector<Element> elements() const;

    ZpVector coords(Element e) const;
    Element from_coords(std::span<const int> coords) const;

    Element add(Element a, Element b) const {
        return {add_[a.value * d_ + b.value]};
    }
    Element sub(Element a, Element b) const {
        return add(a, neg(b));
    }
    Element neg(Element a) const {
        return {neg_[a.value]};
    }
    Element mul(Element a, Element b) const;
    /// Throws DomainError on zero.
    Element inv(Element a) const;
    Element div(Element a, Element b) const {
        return mul(a, inv(b));
    }
    /// a^k for any integer k (negative k requires a != 0).
    Element pow(Element a, long long k) const;

    /// Generator power w^k.
    Element exp(long long k) const;
    /// Discrete log base w of a nonzero element.
    int log(Element a) const;

    /// Absolute trace to GF(p): a + a^p + ... + a^(p^(n-1)).
    int trace(Element a) const;

    /// Row-vector companion matrix M: coords(w * x) = coords(x) * M.
    const ZpMatrix &companion() const {
        return companion_;
    }

    /// Dispatch used by the CLI; `k` is only read for FieldOp::pow.
    Element apply(FieldOp op, Element a, Element b, long long k = 0) const;

    std::string format(Element e) const;

   private:
    int p_;
    int n_;
    int d_;
    std::vector<int> poly_;
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint32_t> mul_;
    std::vector<Element> exp_;  // exp_[k] = w^k, k in [0, d-1)
    std::vector<int> log_;      // log_[value], -1 for zero
    ZpMatrix companion_;
};

/// Companion matrix of the field's primitive polynomial (row-vector convention).
ZpMatrix companion_matrix(const Field &field);

/// Exhaustive search for a basis {e_i} with trace(e_i e_j) = delta_ij.
/// Rows of the returned matrix are the coordinates of e_0..e_{n-1}.
/// Only characteristic 2 is supported (DomainError otherwise).
std::optional<ZpMatrix> self_dual_basis(const Field &field);

/// Polynomial helpers over Z_p, coefficients low-to-high.
bool is_irreducible(std::span<const int> poly, int p);
bool is_primitive(std::span<const int> poly, int p);

}  // namespace dwf
