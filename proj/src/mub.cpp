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

#include "dwf/mub.hpp"

#include <cmath>

#include "dwf/errors.hpp"
#include "dwf/tolerance.hpp"

namespace dwf {

namespace {

// Projector onto the w^k eigenspace of g, assuming g^p = 1.
Matrix eigenprojector(const Matrix &g, int p, int k) {
    const Eigen::Index dim = g.rows();
    Matrix scaled = root_of_unity(-k, p) * g;
    Matrix acc = Matrix::Identity(dim, dim);
    Matrix power = Matrix::Identity(dim, dim);
    for (int m = 1; m < p; ++m) {
        power = power * scaled;
        acc += power;
    }
    return acc / static_cast<double>(p);
}

}  // namespace

Basis joint_eigenbasis(const AbelianSet &set) {
    const auto gens = set.generators();
    const int p = set.p();
    const int n = set.n();
    const int dim = gens.front().dim();
    const double tol = tolerances().diagonalization();

    // Per generator, the p eigenprojectors.
    std::vector<std::vector<Matrix>> projectors(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < p; ++k) {
            projectors[i].push_back(eigenprojector(gens[i].dense(), p, k));
        }
    }

    Basis basis;
    ZpVector label(n, 0);
    for (int index = 0; index < dim; ++index) {
        // label in lexicographic order, generator 0 most significant
        for (int i = n - 1, rest = index; i >= 0; --i, rest /= p) {
            label[i] = rest % p;
        }
        Matrix proj = Matrix::Identity(dim, dim);
        for (int i = 0; i < n; ++i) {
            proj = proj * projectors[i][label[i]];
        }
        double rank = proj.trace().real();
        if (std::abs(rank - 1.0) > tol) {
            throw InternalError("joint eigenspace has dimension " + std::to_string(rank) + "; set is not maximal");
        }
        Eigen::Index col = 0;
        proj.colwise().norm().maxCoeff(&col);
        Vector v = proj.col(col);
        v.normalize();
        fix_global_phase(v);
        for (int i = 0; i < n; ++i) {
            Vector image = gens[i].dense() * v;
            if ((image - root_of_unity(label[i], p) * v).cwiseAbs().maxCoeff() > tol) {
                throw InternalError("eigenvector fails generator " + gens[i].to_string());
            }
        }
        basis.vectors.push_back(std::move(v));
        basis.labels.push_back(label);
    }
    return basis;
}

Matrix MubSet::projector(int basis, int j) const {
    const Vector &v = vector(basis, j);
    return v * v.adjoint();
}

MubSet build_mub(const Field &field) {
    MubSet mub;
    mub.dim = field.d();
    mub.provenance = standard_sets(field);
    for (const auto &set : mub.provenance) {
        mub.bases.push_back(joint_eigenbasis(set));
    }
    return mub;
}

UnbiasednessReport unbiasedness_report(const MubSet &mub) {
    UnbiasednessReport report;
    const double inv_d = 1.0 / mub.dim;
    for (int a = 0; a < mub.num_bases(); ++a) {
        for (int b = 0; b < mub.num_bases(); ++b) {
            for (int i = 0; i < mub.bases[a].size(); ++i) {
                for (int j = 0; j < mub.bases[b].size(); ++j) {
                    double overlap = std::norm(mub.vector(a, i).dot(mub.vector(b, j)));
                    double expected = a == b ? (i == j ? 1.0 : 0.0) : inv_d;
                    double dev = std::abs(overlap - expected);
                    if (dev > report.max_deviation) {
                        report = {dev, a, i, b, j};
                    }
                }
            }
        }
    }
    return report;
}

double completeness_deviation(const MubSet &mub) {
    double worst = 0.0;
    for (int k = 0; k < mub.num_bases(); ++k) {
        Matrix sum = Matrix::Zero(mub.dim, mub.dim);
        for (int j = 0; j < mub.bases[k].size(); ++j) {
            sum += mub.projector(k, j);
        }
        worst = std::max(worst, max_abs_diff(sum, Matrix::Identity(mub.dim, mub.dim)));
    }
    return worst;
}

}  // namespace dwf
