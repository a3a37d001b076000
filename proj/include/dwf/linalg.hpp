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

#include <Eigen/Dense>
#include <complex>
#include <numbers>

namespace dwf {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest absolute entry of a - b.
inline double max_abs_diff(const Matrix &a, const Matrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

/// Rescales v by a unit phase so that its first entry with modulus above
/// `cutoff` is real and positive.
inline void fix_global_phase(Vector &v, double cutoff = 1e-9) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double mag = std::abs(v[i]);
        if (mag > cutoff) {
            v *= std::conj(v[i]) / mag;
            return;
        }
    }
}

/// e^{2 pi i k / m}
inline Complex root_of_unity(long long k, int m) {
    long long r = ((k % m) + m) % m;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / m;
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace dwf
