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

#include <cstdint>
#include <string>
#include <vector>

namespace dwf {

struct CheckResult {
    std::string group;
    std::string name;
    bool pass = false;
    /// Worst deviation or a short reason.
    std::string detail;
};

/// Every invariant group for one dimension: field, geometry, pauli, mub,
/// nets, wigner, classicality, clifford and (for d = 2^n) tableau.
/// Randomized checks draw from `seed`. Exceptions inside a check are reported
/// as failures of that check.
std::vector<CheckResult> run_invariant_suite(int d, std::uint64_t seed);

}  // namespace dwf
