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

namespace dwf {

/// Three-level tolerance hierarchy shared by every numerical check.
///
/// All three levels are multiplied by one scale factor, read once from the
/// DWF_TOLERANCE_SCALE environment variable (default 1.0).
struct Tolerances {
    double scale = 1.0;

    /// Exact algebraic identities evaluated in floating point.
    double algebraic() const {
        return 1e-12 * scale;
    }
    /// Quantities that pass through an eigen-decomposition or projector build.
    double diagonalization() const {
        return 1e-10 * scale;
    }
    /// Matching a computed operator against a finite family (nets, Paulis, bases).
    double lookup() const {
        return 1e-8 * scale;
    }
};

const Tolerances &tolerances();

/// Tolerance used by the C_d membership predicate.
inline double membership_tolerance() {
    return 1e-9 * tolerances().scale;
}

}  // namespace dwf
