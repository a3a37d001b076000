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
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "dwf/galois.hpp"
#include "dwf/linalg.hpp"
#include "dwf/modular.hpp"
#include "dwf/mub.hpp"
#include "dwf/pauli.hpp"
#include "dwf/quantum_net.hpp"

namespace dwf {

/// Conjugation action of a Clifford unitary on the 2n generators, ordered
/// X_0..X_{n-1}, Z_0..Z_{n-1}.
///
/// Row g of `symplectic` is the exponent vector (q, z) of U G_g U^dag and
/// phases[g] its phase exponent, so U G_g U^dag = zeta^phases[g] T(row g).
struct SymplecticClifford {
    int p = 2;
    int n = 1;
    ZpMatrix symplectic;
    std::vector<int> phases;
    std::optional<Matrix> dense;

    /// Image of generator g as a Pauli operator.
    PauliOperator image(int g) const;
    /// S Omega S^T = Omega.
    bool preserves_form() const;
};

struct NotClifford {
    /// Generator index (X_i is i, Z_i is n + i) whose conjugate is not a Pauli.
    int generator = 0;
    std::string witness;
    /// 1 - (largest normalized Pauli overlap).
    double deficit = 0.0;
};

/// Throws DomainError if U is not a d x d unitary with d = p^n.
std::variant<SymplecticClifford, NotClifford> is_clifford(const Matrix &u, int p, int n);

/// The unitary with U X_i U^dag = x_images[i] and U Z_i U^dag = z_images[i],
/// including their phases. Column 0 has its first nonzero entry real
/// positive. Throws DomainError if the images do not obey the X/Z relations.
SymplecticClifford clifford_from_images(const std::vector<PauliOperator> &x_images,
                                        const std::vector<PauliOperator> &z_images);

/// Generators M_i of S and the partners N_i in T with <N_i, M_j> = delta_ij.
struct SyndromeData {
    std::vector<PauliOperator> m;
    std::vector<PauliOperator> n;
    /// syndrome of every element of T, identity first, then T's members.
    std::vector<ZpVector> syndromes;
};

/// Throws DomainError when S and T share a non-identity element, InternalError
/// when two elements of T share a syndrome.
SyndromeData syndrome_data(const AbelianSet &s, const AbelianSet &t);

/// A Clifford C with C M_i C^dag = Z_i and C N_i C^dag = X_i, so C maps the
/// group of S onto the Z group and the group of T onto the X group.
SymplecticClifford standardize_pair(const AbelianSet &s, const AbelianSet &t);

/// U|z> = e^{i((2 pi / p) c.z + d)} |A^-1 z - A^-1 b>, i.e. g^-1(z) = A z + b.
struct AffineData {
    ZpMatrix a;
    ZpVector b;
    ZpVector c;
    double global_phase = 0.0;
};

struct NotBasisPreserving {
    /// "Z", "X" or "affine"
    std::string basis;
    /// Offending basis index (column for Z, X-basis label for X).
    int state = 0;
    std::string reason;
};

std::variant<AffineData, NotBasisPreserving> affine_extraction(const Matrix &u, int p, int n);

/// Dense matrix certified by the data.
Matrix affine_unitary(const AffineData &data, int p, int n);

/// U_s T(q, z) U_s^dag = +- T(q M, z M~^-1). Requires n >= 2.
SymplecticClifford squeezing_operator(const Field &field);

/// Reflection (q, p) -> (p, q) of the phase space, lifted to a Clifford.
/// Qubit fields only; equals the tensor Hadamard when the polynomial basis is
/// self-dual.
SymplecticClifford fourier_operator(const Field &field);

/// Every U A(a) U^dag is a point operator of the net.
bool is_flow(const NetContext &ctx, const Matrix &u, const QuantumNet &net);

struct MubMapResult {
    bool ok = false;
    /// permutation[k] = basis of B2 that basis k of B1 maps onto; -1 if none.
    std::vector<int> permutation;
};

MubMapResult maps_mub_to_mub(const Matrix &u, const MubSet &b1, const MubSet &b2);

/// d^2 translation unitaries T(a), in point order.
std::vector<Matrix> translation_unitaries(const NetContext &ctx);

/// Haar-random unitary.
Matrix random_unitary(int dim, std::mt19937_64 &rng);

/// C_2 U C_1^dag, where C_1 standardizes bases 0 and 1 of the standard MUB and
/// C_2 standardizes their images under U. Requires maps_mub_to_mub(U) to hold.
std::variant<AffineData, NotBasisPreserving> composition_check(const Matrix &u, const NetContext &ctx);

}  // namespace dwf
