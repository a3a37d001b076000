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

#include <Eigen/Eigenvalues>
#include <random>

#include "dwf/mub.hpp"
#include "oracles.hpp"

using dwf::Field;

namespace {

const int kDims[] = {2, 3, 4, 5, 7, 8, 9};

TEST(Mub, UnbiasedAndComplete) {
    for (int d : kDims) {
        auto mub = dwf::build_mub(Field::for_dimension(d));
        ASSERT_EQ(mub.num_bases(), d + 1);
        auto report = dwf::unbiasedness_report(mub);
        EXPECT_LT(report.max_deviation, 1e-10) << "d=" << d << " worst pair (" << report.basis_a << ","
                                               << report.vector_a << ") (" << report.basis_b << ","
                                               << report.vector_b << ")";
        EXPECT_LT(dwf::completeness_deviation(mub), 1e-10);
    }
}

// Each basis vector is an eigenvector of every generator with the eigenvalue
// its label records.
TEST(Mub, LabelsAreEigenvalues) {
    for (int d : kDims) {
        auto mub = dwf::build_mub(Field::for_dimension(d));
        const int p = Field::for_dimension(d).p();
        for (int k = 0; k < mub.num_bases(); ++k) {
            auto gens = mub.provenance[k].generators();
            for (int j = 0; j < d; ++j) {
                const auto &v = mub.vector(k, j);
                for (size_t i = 0; i < gens.size(); ++i) {
                    oracle::Vector expect = oracle::omega(mub.bases[k].labels[j][i], p) * v;
                    ASSERT_LT((gens[i].dense() * v - expect).cwiseAbs().maxCoeff(), 1e-10);
                }
            }
        }
    }
}

// Independent construction: the eigenvectors of a generic Hermitian element of
// the commutant algebra are the joint eigenvectors.
TEST(Mub, MatchesHermitianDiagonalizationOracle) {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> gauss;
    for (int d : {2, 3, 4, 5, 8, 9}) {
        Field f = Field::for_dimension(d);
        auto mub = dwf::build_mub(f);
        auto sets = dwf::standard_sets(f);
        for (int k = 0; k <= d; ++k) {
            oracle::Matrix h = oracle::Matrix::Zero(d, d);
            for (const auto &g : sets[k].members) {
                oracle::Complex c(gauss(rng), gauss(rng));
                h += c * g.dense() + std::conj(c) * g.dense().adjoint();
            }
            Eigen::SelfAdjointEigenSolver<oracle::Matrix> solver(h);
            for (int e = 0; e < d; ++e) {
                oracle::Vector ev = solver.eigenvectors().col(e);
                double best = 1e9;
                for (int j = 0; j < d; ++j) {
                    best = std::min(best, oracle::projector_distance(ev, mub.vector(k, j)));
                }
                EXPECT_LT(best, 1e-9) << "d=" << d << " basis " << k;
            }
        }
    }
}

TEST(Mub, QubitBasesAreZXY) {
    auto mub = dwf::build_mub(Field::for_dimension(2));
    const double r = 1.0 / std::sqrt(2.0);
    oracle::Vector zero(2), plus(2), plus_i(2);
    zero << 1, 0;
    plus << r, r;
    plus_i << r, oracle::Complex(0, r);
    EXPECT_LT(oracle::projector_distance(mub.vector(0, 0), zero), 1e-12);
    EXPECT_LT(oracle::projector_distance(mub.vector(1, 0), plus), 1e-12);
    // Y = i X Z has +1 eigenvector (|0> + i|1>)/sqrt2
    EXPECT_LT(oracle::projector_distance(mub.vector(2, 0), plus_i), 1e-12);
}

TEST(Mub, FirstNonzeroAmplitudeIsRealPositive) {
    for (int d : {3, 4, 8}) {
        auto mub = dwf::build_mub(Field::for_dimension(d));
        for (const auto &b : mub.bases) {
            for (const auto &v : b.vectors) {
                Eigen::Index i = 0;
                while (std::abs(v[i]) < 1e-9) {
                    ++i;
                }
                EXPECT_GT(v[i].real(), 0.0);
                EXPECT_NEAR(v[i].imag(), 0.0, 1e-12);
            }
        }
    }
}

TEST(Mub, LabelOrderIsLexicographic) {
    auto mub = dwf::build_mub(Field::for_dimension(4));
    for (const auto &b : mub.bases) {
        for (int j = 1; j < b.size(); ++j) {
            EXPECT_LT(b.labels[j - 1], b.labels[j]);
        }
    }
}

}  // namespace
