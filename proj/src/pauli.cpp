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

#include "dwf/pauli.hpp"

#include <algorithm>
#include <cassert>

#include "dwf/errors.hpp"

namespace dwf {

namespace {

// Exponent of zeta in c^{qz}: 1 for qubits (c = i), inverse of 2 mod p otherwise.
int half_coef(int p) {
    return p == 2 ? 1 : (p + 1) / 2;
}

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

Matrix single_register(int p, int q, int z) {
    int m = phase_modulus(p);
    Matrix out = Matrix::Zero(p, p);
    Complex c = root_of_unity(static_cast<long long>(half_coef(p)) * q * z, m);
    // (X^q Z^z)|j> = w^{z j} |j + q>
    for (int j = 0; j < p; ++j) {
        out((j + q) % p, j) = c * root_of_unity(static_cast<long long>(z) * j * (m / p), m);
    }
    return out;
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

}  // namespace

PauliOperator::PauliOperator(int p, ZpVector q, ZpVector z, int phase)
    : p_(p), q_(std::move(q)), z_(std::move(z)), phase_(mod(phase, phase_modulus(p))),
      cache_(std::make_shared<DenseCache>()) {
    if (q_.size() != z_.size()) {
        throw DomainError("Pauli exponent tuples differ in length");
    }
    for (auto &v : q_) {
        v = mod(v, p_);
    }
    for (auto &v : z_) {
        v = mod(v, p_);
    }
}

PauliOperator PauliOperator::identity(int p, int n) {
    return PauliOperator(p, ZpVector(n, 0), ZpVector(n, 0));
}

PauliOperator PauliOperator::x_gen(int p, int n, int i) {
    ZpVector q(n, 0);
    q[i] = 1;
    return PauliOperator(p, q, ZpVector(n, 0));
}

PauliOperator PauliOperator::z_gen(int p, int n, int i) {
    ZpVector z(n, 0);
    z[i] = 1;
    return PauliOperator(p, ZpVector(n, 0), z);
}

int PauliOperator::dim() const {
    return ipow(p_, n());
}

ZpVector PauliOperator::vec() const {
    ZpVector out = q_;
    out.insert(out.end(), z_.begin(), z_.end());
    return out;
}

PauliOperator PauliOperator::operator*(const PauliOperator &other) const {
    assert(p_ == other.p_ && n() == other.n());
    const int m = phase_modulus(p_);
    const int h = half_coef(p_);
    const int full = m / p_;
    long long e = phase_ + other.phase_;
    ZpVector q(n()), z(n());
    for (int i = 0; i < n(); ++i) {
        int q1 = q_[i], z1 = z_[i], q2 = other.q_[i], z2 = other.z_[i];
        q[i] = (q1 + q2) % p_;
        z[i] = (z1 + z2) % p_;
        e += static_cast<long long>(h) * (q1 * z1 + q2 * z2 - q[i] * z[i]) + static_cast<long long>(full) * z1 * q2;
    }
    return PauliOperator(p_, std::move(q), std::move(z), mod(e, m));
}

PauliOperator PauliOperator::pow(long long k) const {
    // T(v)^p = 1 for the phase-free part; the scalar has order m, not p.
    const int m = phase_modulus(p_);
    const long long reduced = ((k % p_) + p_) % p_;
    PauliOperator base = with_phase(0);
    PauliOperator acc = identity(p_, n());
    for (long long i = 0; i < reduced; ++i) {
        acc = acc * base;
    }
    return acc.with_phase(mod(acc.phase_ + static_cast<long long>(phase_) * mod(k, m), m));
}

PauliOperator PauliOperator::with_phase(int phase) const {
    return PauliOperator(p_, q_, z_, phase);
}

const Matrix &PauliOperator::dense() const {
    std::call_once(cache_->once, [this] {
        Matrix acc = Matrix::Identity(1, 1);
        for (int i = 0; i < n(); ++i) {
            acc = kron(acc, single_register(p_, q_[i], z_[i]));
        }
        cache_->matrix = scalar() * acc;
    });
    return cache_->matrix;
}

std::string PauliOperator::to_string() const {
    std::string out;
    if (p_ == 2) {
        static const char *signs[] = {"+", "+i", "-", "-i"};
        out += signs[phase_];
        for (int i = 0; i < n(); ++i) {
            static const char names[2][2] = {{'I', 'Z'}, {'X', 'Y'}};
            out += names[q_[i]][z_[i]];
        }
        return out;
    }
    out = "w^" + std::to_string(phase_) + " T(";
    for (int i = 0; i < n(); ++i) {
        out += std::to_string(q_[i]);
    }
    out += "|";
    for (int i = 0; i < n(); ++i) {
        out += std::to_string(z_[i]);
    }
    return out + ")";
}

int symplectic_form(std::span<const int> a, std::span<const int> b, int p) {
    assert(a.size() == b.size() && a.size() % 2 == 0);
    size_t n = a.size() / 2;
    long long acc = 0;
    for (size_t i = 0; i < n; ++i) {
        acc += static_cast<long long>(a[i]) * b[n + i] - static_cast<long long>(a[n + i]) * b[i];
    }
    return mod(acc, p);
}

int symplectic_form(const PauliOperator &a, const PauliOperator &b) {
    return symplectic_form(a.vec(), b.vec(), a.p());
}

bool commutes(const PauliOperator &a, const PauliOperator &b) {
    return symplectic_form(a, b) == 0;
}

PauliOperator translation_operator(int p, const ZpVector &q, const ZpVector &z) {
    return PauliOperator(p, q, z, 0);
}

std::vector<PauliOperator> AbelianSet::generators() const {
    return {members.begin(), members.begin() + n()};
}

bool AbelianSet::contains(const PauliOperator &op) const {
    return std::any_of(members.begin(), members.end(), [&](const PauliOperator &m) { return m.same_label(op); });
}

AbelianSet abelian_set(const ZpVector &a, const ZpVector &b, const Field &field) {
    if (static_cast<int>(a.size()) != field.n() || static_cast<int>(b.size()) != field.n()) {
        throw DomainError("abelian_set tuples must have length n");
    }
    if (is_zero(a) && is_zero(b)) {
        throw DomainError("abelian_set needs (a, b) != (0, 0)");
    }
    const ZpMatrix &m = field.companion();
    const ZpMatrix mt = m.transpose();
    AbelianSet set{a, b, {}};
    ZpVector qa = a, zb = b;
    for (int j = 0; j < field.d() - 1; ++j) {
        set.members.push_back(translation_operator(field.p(), qa, zb));
        qa = row_times(qa, m);
        zb = row_times(zb, mt);
    }
    return set;
}

std::vector<AbelianSet> standard_sets(const Field &field) {
    const int n = field.n();
    ZpVector zero(n, 0), unit(n, 0);
    unit[0] = 1;
    const ZpMatrix mt = field.companion().transpose();
    std::vector<AbelianSet> out;
    out.push_back(abelian_set(zero, unit, field));
    out.push_back(abelian_set(unit, zero, field));
    ZpVector b = unit;
    for (int k = 0; k < field.d() - 1; ++k) {
        out.push_back(abelian_set(unit, b, field));
        b = row_times(b, mt);
    }
    return out;
}

PauliLabeling::PauliLabeling(const PhaseSpace &space) : space_(&space) {
    const Field &field = space.field();
    for (const auto &set : standard_sets(field)) {
        base_q_.push_back(set.a);
        base_z_.push_back(set.b);
    }
    const ZpMatrix &m = field.companion();
    const ZpMatrix mt = m.transpose();
    for (int j = 0; j < field.d() - 1; ++j) {
        m_pow_.push_back(m.pow(j));
        mt_pow_.push_back(mt.pow(j));
    }
}

std::pair<ZpVector, ZpVector> PauliLabeling::label(PhasePoint a) const {
    const Field &f = space_->field();
    const int n = f.n();
    if (a.q == f.zero() && a.p == f.zero()) {
        return {ZpVector(n, 0), ZpVector(n, 0)};
    }
    for (const auto &s : space_->striations()) {
        if (!space_->contains(s.ray(), a)) {
            continue;
        }
        // a = w^j * direction
        Element t = s.direction.q != f.zero() ? f.div(a.q, s.direction.q) : f.div(a.p, s.direction.p);
        int j = f.log(t);
        return {row_times(base_q_[s.index], m_pow_[j]), row_times(base_z_[s.index], mt_pow_[j])};
    }
    throw InternalError("point " + space_->format(a) + " lies on no ray");
}

PauliOperator PauliLabeling::at(PhasePoint a) const {
    auto [q, z] = label(a);
    return translation_operator(space_->field().p(), q, z);
}

PauliOperator point_to_translation(PhasePoint point, const PauliLabeling &labeling) {
    return labeling.at(point);
}

}  // namespace dwf
