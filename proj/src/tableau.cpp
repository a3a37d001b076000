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

#include "dwf/tableau.hpp"

#include <cmath>
#include <utility>

#include "dwf/errors.hpp"

namespace dwf {

std::string Gate::to_string() const {
    switch (kind) {
        case Kind::h:
            return "H " + std::to_string(target);
        case Kind::s:
            return "S " + std::to_string(target);
        case Kind::cnot:
            return "CNOT " + std::to_string(control) + " " + std::to_string(target);
    }
    return "?";
}

StabilizerTableau::StabilizerTableau(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits) {
        throw DomainError("tableau supports 1.." + std::to_string(kMaxQubits) + " qubits, got " + std::to_string(n));
    }
    x_.assign(2 * n, std::vector<std::uint8_t>(n, 0));
    z_.assign(2 * n, std::vector<std::uint8_t>(n, 0));
    r_.assign(2 * n, 0);
    for (int i = 0; i < n; ++i) {
        x_[i][i] = 1;
        z_[n + i][i] = 1;
    }
}

void StabilizerTableau::apply(const Gate &gate) {
    auto check = [&](int q) {
        if (q < 0 || q >= n_) {
            throw DomainError("gate " + gate.to_string() + " addresses qubit outside 0.." + std::to_string(n_ - 1));
        }
    };
    check(gate.target);
    const int a = gate.target;
    switch (gate.kind) {
        case Gate::Kind::h:
            for (int row = 0; row < 2 * n_; ++row) {
                r_[row] ^= x_[row][a] & z_[row][a];
                std::swap(x_[row][a], z_[row][a]);
            }
            break;
        case Gate::Kind::s:
            for (int row = 0; row < 2 * n_; ++row) {
                r_[row] ^= x_[row][a] & z_[row][a];
                z_[row][a] ^= x_[row][a];
            }
            break;
        case Gate::Kind::cnot: {
            check(gate.control);
            const int c = gate.control;
            if (c == a) {
                throw DomainError("CNOT control equals target");
            }
            for (int row = 0; row < 2 * n_; ++row) {
                r_[row] ^= x_[row][c] & z_[row][a] & (x_[row][a] ^ z_[row][c] ^ 1);
                x_[row][a] ^= x_[row][c];
                z_[row][c] ^= z_[row][a];
            }
            break;
        }
    }
}

std::vector<PauliOperator> StabilizerTableau::stabilizers() const {
    std::vector<PauliOperator> out;
    for (int row = n_; row < 2 * n_; ++row) {
        out.emplace_back(2, ZpVector(x_[row].begin(), x_[row].end()), ZpVector(z_[row].begin(), z_[row].end()),
                         2 * r_[row]);
    }
    return out;
}

Vector StabilizerTableau::dense_state() const {
    if (n_ > 3) {
        throw DomainError("dense reconstruction is limited to 3 qubits");
    }
    const int dim = 1 << n_;
    Matrix proj = Matrix::Identity(dim, dim);
    for (const auto &s : stabilizers()) {
        proj = proj * (Matrix::Identity(dim, dim) + s.dense()) / 2.0;
    }
    Eigen::Index col = 0;
    proj.colwise().norm().maxCoeff(&col);
    Vector v = proj.col(col).normalized();
    fix_global_phase(v);
    return v;
}

StabilizerTableau tableau_apply(const std::vector<Gate> &circuit, StabilizerTableau initial) {
    for (const auto &gate : circuit) {
        initial.apply(gate);
    }
    return initial;
}

Vector simulate_dense(const std::vector<Gate> &circuit, int n) {
    if (n < 1 || n > 10) {
        throw DomainError("dense simulation supports 1..10 qubits");
    }
    const int dim = 1 << n;
    Vector psi = Vector::Zero(dim);
    psi[0] = 1.0;
    const double r = 1.0 / std::sqrt(2.0);
    // qubit q is bit (n - 1 - q) of the basis index
    auto bit = [n](int q) { return 1 << (n - 1 - q); };
    for (const auto &g : circuit) {
        if (g.target < 0 || g.target >= n) {
            throw DomainError("gate " + g.to_string() + " addresses a missing qubit");
        }
        const int t = bit(g.target);
        Vector next = psi;
        switch (g.kind) {
            case Gate::Kind::h:
                for (int i = 0; i < dim; ++i) {
                    next[i] = (i & t) ? r * (psi[i ^ t] - psi[i]) : r * (psi[i] + psi[i ^ t]);
                }
                break;
            case Gate::Kind::s:
                for (int i = 0; i < dim; ++i) {
                    if (i & t) {
                        next[i] = Complex(0.0, 1.0) * psi[i];
                    }
                }
                break;
            case Gate::Kind::cnot: {
                if (g.control < 0 || g.control >= n || g.control == g.target) {
                    throw DomainError("gate " + g.to_string() + " has a bad control");
                }
                const int c = bit(g.control);
                for (int i = 0; i < dim; ++i) {
                    next[i] = (i & c) ? psi[i ^ t] : psi[i];
                }
                break;
            }
        }
        psi = std::move(next);
    }
    fix_global_phase(psi);
    return psi;
}

std::vector<Gate> random_circuit(int n, int depth, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> kind(0, n > 1 ? 2 : 1);
    std::uniform_int_distribution<int> qubit(0, n - 1);
    std::vector<Gate> out;
    for (int i = 0; i < depth; ++i) {
        Gate g;
        g.kind = static_cast<Gate::Kind>(kind(rng));
        g.target = qubit(rng);
        if (g.kind == Gate::Kind::cnot) {
            do {
                g.control = qubit(rng);
            } while (g.control == g.target);
        }
        out.push_back(g);
    }
    return out;
}

}  // namespace dwf
