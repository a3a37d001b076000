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

#include "dwf/modular.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <tuple>
#include <utility>

#include "dwf/errors.hpp"

namespace dwf {

int inverse_mod(int a, int p) {
    a = mod(a, p);
    if (a == 0) {
        throw DomainError("inverse of zero modulo " + std::to_string(p));
    }
    // Extended Euclid.
    long long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long long q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1) {
        throw DomainError(std::to_string(a) + " has no inverse modulo " + std::to_string(p));
    }
    return mod(t, p);
}

int dot_mod(std::span<const int> a, std::span<const int> b, int p) {
    assert(a.size() == b.size());
    long long acc = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        acc += static_cast<long long>(a[i]) * b[i];
    }
    return mod(acc, p);
}

ZpVector add_mod(std::span<const int> a, std::span<const int> b, int p) {
    assert(a.size() == b.size());
    ZpVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out[i] = mod(a[i] + b[i], p);
    }
    return out;
}

ZpVector scale_mod(std::span<const int> a, int s, int p) {
    ZpVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out[i] = mod(static_cast<long long>(a[i]) * s, p);
    }
    return out;
}

bool is_zero(std::span<const int> v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

ZpMatrix::ZpMatrix(int rows, int cols, int modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(static_cast<size_t>(rows) * cols, 0) {
}

ZpMatrix ZpMatrix::identity(int size, int modulus) {
    ZpMatrix m(size, size, modulus);
    for (int i = 0; i < size; ++i) {
        m.set(i, i, 1);
    }
    return m;
}

ZpVector ZpMatrix::row(int r) const {
    auto begin = data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_;
    return ZpVector(begin, begin + cols_);
}

void ZpMatrix::set_row(int r, std::span<const int> values) {
    assert(static_cast<int>(values.size()) == cols_);
    for (int c = 0; c < cols_; ++c) {
        set(r, c, values[c]);
    }
}

ZpMatrix ZpMatrix::operator*(const ZpMatrix &other) const {
    assert(cols_ == other.rows_ && modulus_ == other.modulus_);
    ZpMatrix out(rows_, other.cols_, modulus_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < other.cols_; ++c) {
            long long acc = 0;
            for (int k = 0; k < cols_; ++k) {
                acc += static_cast<long long>((*this)(r, k)) * other(k, c);
            }
            out.set(r, c, acc);
        }
    }
    return out;
}

ZpMatrix ZpMatrix::transpose() const {
    ZpMatrix out(cols_, rows_, modulus_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            out.set(c, r, (*this)(r, c));
        }
    }
    return out;
}

ZpMatrix ZpMatrix::pow(long long k) const {
    assert(rows_ == cols_);
    if (k < 0) {
        auto inv = inverse();
        if (!inv) {
            throw DomainError("negative power of a singular matrix");
        }
        return inv->pow(-k);
    }
    ZpMatrix result = identity(rows_, modulus_);
    ZpMatrix base = *this;
    while (k > 0) {
        if (k & 1) {
            result = result * base;
        }
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::optional<ZpMatrix> ZpMatrix::inverse() const {
    assert(rows_ == cols_);
    int n = rows_;
    ZpMatrix a = *this;
    ZpMatrix inv = identity(n, modulus_);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (a(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            return std::nullopt;
        }
        if (pivot != col) {
            auto ra = a.row(pivot), rb = a.row(col);
            a.set_row(pivot, rb);
            a.set_row(col, ra);
            auto ia = inv.row(pivot), ib = inv.row(col);
            inv.set_row(pivot, ib);
            inv.set_row(col, ia);
        }
        int s = inverse_mod(a(col, col), modulus_);
        a.set_row(col, scale_mod(a.row(col), s, modulus_));
        inv.set_row(col, scale_mod(inv.row(col), s, modulus_));
        for (int r = 0; r < n; ++r) {
            int f = a(r, col);
            if (r == col || f == 0) {
                continue;
            }
            a.set_row(r, add_mod(a.row(r), scale_mod(a.row(col), modulus_ - f, modulus_), modulus_));
            inv.set_row(r, add_mod(inv.row(r), scale_mod(inv.row(col), modulus_ - f, modulus_), modulus_));
        }
    }
    return inv;
}

bool ZpMatrix::is_identity() const {
    return rows_ == cols_ && *this == identity(rows_, modulus_);
}

bool ZpMatrix::is_zero() const {
    return dwf::is_zero(data_);
}

std::string ZpMatrix::to_string() const {
    std::ostringstream out;
    for (int r = 0; r < rows_; ++r) {
        out << "[";
        for (int c = 0; c < cols_; ++c) {
            out << (c ? " " : "") << (*this)(r, c);
        }
        out << "]\n";
    }
    return out.str();
}

ZpVector row_times(std::span<const int> v, const ZpMatrix &m) {
    assert(static_cast<int>(v.size()) == m.rows());
    ZpVector out(m.cols(), 0);
    for (int c = 0; c < m.cols(); ++c) {
        long long acc = 0;
        for (int r = 0; r < m.rows(); ++r) {
            acc += static_cast<long long>(v[r]) * m(r, c);
        }
        out[c] = mod(acc, m.modulus());
    }
    return out;
}

ZpVector times_column(const ZpMatrix &m, std::span<const int> v) {
    assert(static_cast<int>(v.size()) == m.cols());
    ZpVector out(m.rows(), 0);
    for (int r = 0; r < m.rows(); ++r) {
        long long acc = 0;
        for (int c = 0; c < m.cols(); ++c) {
            acc += static_cast<long long>(m(r, c)) * v[c];
        }
        out[r] = mod(acc, m.modulus());
    }
    return out;
}

}  // namespace dwf
