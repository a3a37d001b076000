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

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "dwf/geometry.hpp"
#include "dwf/linalg.hpp"
#include "dwf/modular.hpp"

namespace dwf {

/// Modulus of the phase exponent: 4 for qubits (powers of i), p for odd p
/// (powers of w_p = e^{2 pi i / p}).
inline int phase_modulus(int p) {
    return p == 2 ? 4 : p;
}

/// zeta^phase * T(q, z), with zeta = e^{2 pi i / phase_modulus(p)}.
///
/// T(q, z) is the tensor product over registers of c^{q_i z_i} X^{q_i} Z^{z_i}
/// where X|j> = |j+1>, Z|j> = w_p^j |j>, and c = i for qubits (making every
/// T Hermitian) or c = w_p^{1/2} (the inverse of 2 mod p) for odd p, which
/// gives T(v)^k = T(k v). Register 0 is the most significant tensor factor.
///
/// Values are immutable. The dense matrix is built on first use and shared
/// between copies.
class PauliOperator {
   public:
    PauliOperator(int p, ZpVector q, ZpVector z, int phase = 0);

    static PauliOperator identity(int p, int n);
    /// Single-register generators X_i and Z_i.
    static PauliOperator x_gen(int p, int n, int i);
    static PauliOperator z_gen(int p, int n, int i);

    int p() const {
        return p_;
    }
    int n() const {
        return static_cast<int>(q_.size());
    }
    int dim() const;
    const ZpVector &q() const {
        return q_;
    }
    const ZpVector &z() const {
        return z_;
    }
    int phase() const {
        return phase_;
    }
    /// (q, z) concatenated, length 2n.
    ZpVector vec() const;
    bool is_identity_up_to_phase() const {
        return is_zero(q_) && is_zero(z_);
    }
    Complex scalar() const {
        return root_of_unity(phase_, phase_modulus(p_));
    }

    PauliOperator operator*(const PauliOperator &other) const;
    PauliOperator pow(long long k) const;
    PauliOperator with_phase(int phase) const;
    /// Same (q, z) label; phases may differ.
    bool same_label(const PauliOperator &other) const {
        return q_ == other.q_ && z_ == other.z_;
    }
    bool operator==(const PauliOperator &other) const {
        return same_label(other) && phase_ == other.phase_;
    }

    const Matrix &dense() const;
    std::string to_string() const;

   private:
    struct DenseCache {
        std::once_flag once;
        Matrix matrix;
    };

    int p_;
    ZpVector q_;
    ZpVector z_;
    int phase_;
    std::shared_ptr<DenseCache> cache_;
};

/// q.z' - z.q' mod p. Zero iff the two operators commute.
int symplectic_form(const PauliOperator &a, const PauliOperator &b);
int symplectic_form(std::span<const int> a, std::span<const int> b, int p);
bool commutes(const PauliOperator &a, const PauliOperator &b);

/// T(q, z) with phase exponent 0.
PauliOperator translation_operator(int p, const ZpVector &q, const ZpVector &z);

/// S_(a,b) = { T(a M^j, b M~^j) : j = 0..d-2 }.
struct AbelianSet {
    ZpVector a;
    ZpVector b;
    std::vector<PauliOperator> members;

    int p() const {
        return members.front().p();
    }
    int n() const {
        return members.front().n();
    }
    /// members[0..n-1]; independent because 1, w, .., w^(n-1) are.
    std::vector<PauliOperator> generators() const;
    /// Membership by label, ignoring phase.
    bool contains(const PauliOperator &op) const;
};

/// Throws DomainError when (a, b) = (0, 0).
AbelianSet abelian_set(const ZpVector &a, const ZpVector &b, const Field &field);

/// The d+1 standard sets in striation order: (0,1) vertical, (1,0)
/// horizontal, (1, 1 M~^k) for the ray p = w^k q.
std::vector<AbelianSet> standard_sets(const Field &field);

/// Covariant point -> translation labeling.
///
/// Each striation's ray base point (a, b) is assigned the tuples listed in
/// standard_sets(); the point (a w^j, b w^j) then carries T(a M^j, b M~^j).
class PauliLabeling {
   public:
    explicit PauliLabeling(const PhaseSpace &space);

    /// (q, z) exponent tuples for a point; zero tuples at the origin.
    std::pair<ZpVector, ZpVector> label(PhasePoint a) const;
    PauliOperator at(PhasePoint a) const;

    const ZpVector &base_q(int striation) const {
        return base_q_.at(striation);
    }
    const ZpVector &base_z(int striation) const {
        return base_z_.at(striation);
    }

   private:
    const PhaseSpace *space_;
    std::vector<ZpVector> base_q_;
    std::vector<ZpVector> base_z_;
    std::vector<ZpMatrix> m_pow_;
    std::vector<ZpMatrix> mt_pow_;
};

PauliOperator point_to_translation(PhasePoint point, const PauliLabeling &labeling);

}  // namespace dwf
