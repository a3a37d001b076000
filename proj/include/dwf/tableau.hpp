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
#include <random>
#include <string>
#include <vector>

#include "dwf/linalg.hpp"
#include "dwf/pauli.hpp"

namespace dwf {

/// Qubit Clifford gates. S is diag(1, i).
struct Gate {
    enum class Kind { h, s, cnot };

    Kind kind = Kind::h;
    int target = 0;
    /// Control qubit for cnot, unused otherwise.
    int control = -1;

    std::string to_string() const;
};

/// Stabilizer state of n <= kMaxQubits qubits in the
/// destabilizer tableau layout: rows 0..n-1 destabilizers, n..2n-1 stabilizers,
/// each row (x, z, r) standing for (-1)^r prod_i T(x_i, z_i).
class StabilizerTableau {
   public:
    static constexpr int kMaxQubits = 8;

    /// |0...0>. Throws DomainError unless 1 <= n <= kMaxQubits.
    explicit StabilizerTableau(int n);

    int n() const {
        return n_;
    }
    /// Throws DomainError on bad qubit indices.
    void apply(const Gate &gate);

    /// Stabilizer generators with sign (phase 0 or 2).
    std::vector<PauliOperator> stabilizers() const;
    /// The state vector, first nonzero amplitude real positive. n <= 3.
    Vector dense_state() const;

   private:
    int n_;
    std::vector<std::vector<std::uint8_t>> x_;
    std::vector<std::vector<std::uint8_t>> z_;
    std::vector<std::uint8_t> r_;
};

/// Runs the circuit on a copy of `initial`.
StabilizerTableau tableau_apply(const std::vector<Gate> &circuit, StabilizerTableau initial);

/// Statevector simulation of the circuit from |0...0>, first nonzero
/// amplitude real positive. n <= 10.
Vector simulate_dense(const std::vector<Gate> &circuit, int n);

/// depth gates drawn uniformly from {H, S, CNOT} on random qubits.
std::vector<Gate> random_circuit(int n, int depth, std::mt19937_64 &rng);

}  // namespace dwf
