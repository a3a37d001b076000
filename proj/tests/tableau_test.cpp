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

#include <gtest/gtest.h>

#include <set>

#include "dwf/errors.hpp"
#include "dwf/tableau.hpp"
#include "oracles.hpp"

using dwf::Gate;
using dwf::StabilizerTableau;

namespace {

// Dense reference built from the oracle gate matrices only.
oracle::Vector oracle_run(const std::vector<Gate> &circuit, int n) {
    oracle::Vector psi = oracle::Vector::Zero(1 << n);
    psi[0] = 1.0;
    for (const auto &g : circuit) {
        switch (g.kind) {
            case Gate::Kind::h:
                psi = oracle::on_qubit(oracle::hadamard(), g.target, n) * psi;
                break;
            case Gate::Kind::s:
                psi = oracle::on_qubit(oracle::phase_gate(), g.target, n) * psi;
                break;
            case Gate::Kind::cnot:
                psi = oracle::cnot(g.control, g.target, n) * psi;
                break;
        }
    }
    return psi;
}

TEST(Tableau, EmptyCircuitIsAllZero) {
    auto t = dwf::tableau_apply({}, StabilizerTableau(3));
    auto stabs = t.stabilizers();
    ASSERT_EQ(stabs.size(), 3u);
    for (int i = 0; i < 3; ++i) {
        EXPECT_TRUE(stabs[i] == dwf::PauliOperator::z_gen(2, 3, i));
    }
}

TEST(Tableau, HadamardGivesX) {
    auto t = dwf::tableau_apply({{Gate::Kind::h, 0}}, StabilizerTableau(1));
    ASSERT_EQ(t.stabilizers().size(), 1u);
    EXPECT_TRUE(t.stabilizers()[0] == dwf::PauliOperator::x_gen(2, 1, 0));
}

TEST(Tableau, BellCircuit) {
    std::vector<Gate> bell{{Gate::Kind::h, 0}, {Gate::Kind::cnot, 1, 0}};
    auto t = dwf::tableau_apply(bell, StabilizerTableau(2));
    oracle::Vector bell_state(4);
    bell_state << 1, 0, 0, 1;
    bell_state /= std::sqrt(2.0);
    // the stabilizer group <XX, ZZ> as a set of labels
    std::set<std::vector<int>> group;
    auto stabs = t.stabilizers();
    ASSERT_EQ(stabs.size(), 2u);
    for (int mask = 0; mask < 4; ++mask) {
        auto g = dwf::PauliOperator::identity(2, 2);
        for (int i = 0; i < 2; ++i) {
            if (mask >> i & 1) {
                g = g * stabs[i];
            }
        }
        // XX * ZZ = -YY, and the sign is what stabilizes the state
        EXPECT_LT((g.dense() * bell_state - bell_state).cwiseAbs().maxCoeff(), 1e-12);
        group.insert(g.vec());
    }
    std::set<std::vector<int>> expect{{0, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 1, 1}};
    EXPECT_EQ(group, expect);
    EXPECT_LT(oracle::projector_distance(t.dense_state(), bell_state), 1e-12);
}

TEST(Tableau, SignsTrackPhaseGates) {
    // S S X S S = -X on |+>: H then S twice gives |->
    auto t = dwf::tableau_apply({{Gate::Kind::h, 0}, {Gate::Kind::s, 0}, {Gate::Kind::s, 0}}, StabilizerTableau(1));
    EXPECT_TRUE(t.stabilizers()[0] == dwf::PauliOperator::x_gen(2, 1, 0).with_phase(2));
}

TEST(Tableau, RandomCircuitsMatchOracle) {
    std::mt19937_64 rng(1234);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            auto circuit = dwf::random_circuit(n, 1 + trial % 20, rng);
            auto t = dwf::tableau_apply(circuit, StabilizerTableau(n));
            oracle::Vector expect = oracle_run(circuit, n);
            ASSERT_LT(oracle::projector_distance(t.dense_state(), expect), 1e-10) << "n=" << n;
            ASSERT_LT(oracle::projector_distance(dwf::simulate_dense(circuit, n), expect), 1e-10);
            for (const auto &s : t.stabilizers()) {
                ASSERT_LT((s.dense() * expect - expect).cwiseAbs().maxCoeff(), 1e-10);
            }
        }
    }
}

TEST(Tableau, RejectsMalformedInput) {
    EXPECT_THROW(StabilizerTableau(0), dwf::DomainError);
    EXPECT_THROW(StabilizerTableau(9), dwf::DomainError);
    StabilizerTableau t(2);
    EXPECT_THROW(t.apply({Gate::Kind::h, 2}), dwf::DomainError);
    EXPECT_THROW(t.apply({Gate::Kind::cnot, 1, 1}), dwf::DomainError);
    EXPECT_THROW(t.apply({Gate::Kind::cnot, 0, -1}), dwf::DomainError);
}

}  // namespace
