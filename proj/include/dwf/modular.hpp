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

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dwf {

/// A tuple over Z_p. Entries are kept reduced into [0, p).
using ZpVector = std::vector<int>;

inline int mod(long long a, int p) {
    long long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

/// Multiplicative inverse in Z_p (p prime). Throws DomainError on zero.
int inverse_mod(int a, int p);

/// Dot product over Z_p.
int dot_mod(std::span<const int> a, std::span<const int> b, int p);

ZpVector add_mod(std::span<const int> a, std::span<const int> b, int p);
ZpVector scale_mod(std::span<const int> a, int s, int p);

bool is_zero(std::span<const int> v);

/// Dense matrix over Z_p, row-major. Vectors act from the left (row vectors),
/// matching the a M^j convention used for phase-space labels.
class ZpMatrix {
   public:
    ZpMatrix() = default;
    ZpMatrix(int rows, int cols, int modulus);

    static ZpMatrix identity(int size, int modulus);

    int rows() const {
        return rows_;
    }
    int cols() const {
        return cols_;
    }
    int modulus() const {
        return modulus_;
    }

    int operator()(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }
    void set(int r, int c, long long value) {
        data_[static_cast<size_t>(r) * cols_ + c] = mod(value, modulus_);
    }

    ZpVector row(int r) const;
    void set_row(int r, std::span<const int> values);

    ZpMatrix operator*(const ZpMatrix &other) const;
    bool operator==(const ZpMatrix &other) const = default;

    ZpMatrix transpose() const;
    ZpMatrix pow(long long k) const;

    /// Gauss-Jordan inverse; nullopt when singular.
    std::optional<ZpMatrix> inverse() const;
    bool is_identity() const;
    bool is_zero() const;

    std::string to_string() const;

   private:
    int rows_ = 0;
    int cols_ = 0;
    int modulus_ = 2;
    std::vector<int> data_;
};

/// Row vector times matrix: v M.
ZpVector row_times(std::span<const int> v, const ZpMatrix &m);

/// Matrix times column vector: M v.
ZpVector times_column(const ZpMatrix &m, std::span<const int> v);

}  // namespace dwf
