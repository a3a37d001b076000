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

#include "dwf/clifford.hpp"

#include <cmath>
#include <numbers>

#include "dwf/errors.hpp"
#include "dwf/kernels.hpp"
#include "dwf/tolerance.hpp"

namespace dwf {

namespace {

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

// Register digits of a basis index; register 0 is the most significant.
ZpVector digits(int index, int p, int n) {
    ZpVector z(n);
    for (int i = n - 1; i >= 0; --i) {
        z[i] = index % p;
        index /= p;
    }
    return z;
}

int index_of(std::span<const int> z, int p) {
    int index = 0;
    for (int v : z) {
        index = index * p + v;
    }
    return index;
}

PauliOperator generator(int p, int n, int g) {
    return g < n ? PauliOperator::x_gen(p, n, g) : PauliOperator::z_gen(p, n, g - n);
}

void check_unitary(const Matrix &u, int p, int n) {
    const int dim = ipow(p, n);
    if (u.rows() != dim || u.cols() != dim) {
        throw DomainError("expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    }
    if (max_abs_diff(u * u.adjoint(), Matrix::Identity(dim, dim)) > tolerances().diagonalization()) {
        throw DomainError("matrix is not unitary");
    }
}

std::vector<PauliOperator> all_paulis(int p, int n) {
    std::vector<PauliOperator> out;
    const int count = ipow(p, 2 * n);
    for (int index = 0; index < count; ++index) {
        ZpVector v = digits(index, p, 2 * n);
        out.emplace_back(p, ZpVector(v.begin(), v.begin() + n), ZpVector(v.begin() + n, v.end()));
    }
    return out;
}

// Columns are the X-basis states sum_z w^{x.z} |z> / sqrt(d).
Matrix x_basis(int p, int n) {
    const int dim = ipow(p, n);
    Matrix f(dim, dim);
    for (int x = 0; x < dim; ++x) {
        ZpVector xd = digits(x, p, n);
        for (int z = 0; z < dim; ++z) {
            f(z, x) = root_of_unity(dot_mod(xd, digits(z, p, n), p), p) / std::sqrt(static_cast<double>(dim));
        }
    }
    return f;
}

// For each column, the row holding all of its weight, or -1.
std::vector<int> monomial_rows(const Matrix &u, double tol) {
    std::vector<int> rows(u.cols(), -1);
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
        Eigen::Index r = 0;
        double peak = u.col(c).cwiseAbs().maxCoeff(&r);
        if (std::abs(peak - 1.0) < tol) {
            rows[c] = static_cast<int>(r);
        }
    }
    return rows;
}

}  // namespace

PauliOperator SymplecticClifford::image(int g) const {
    ZpVector row = symplectic.row(g);
    return PauliOperator(p, ZpVector(row.begin(), row.begin() + n), ZpVector(row.begin() + n, row.end()), phases[g]);
}

bool SymplecticClifford::preserves_form() const {
    for (int a = 0; a < 2 * n; ++a) {
        for (int b = 0; b < 2 * n; ++b) {
            int expected = symplectic_form(generator(p, n, a).vec(), generator(p, n, b).vec(), p);
            if (symplectic_form(symplectic.row(a), symplectic.row(b), p) != expected) {
                return false;
            }
        }
    }
    return true;
}

std::variant<SymplecticClifford, NotClifford> is_clifford(const Matrix &u, int p, int n) {
    check_unitary(u, p, n);
    const double tol = tolerances().lookup();
    const int dim = ipow(p, n);
    const int m = phase_modulus(p);
    const auto paulis = all_paulis(p, n);

    SymplecticClifford out;
    out.p = p;
    out.n = n;
    out.symplectic = ZpMatrix(2 * n, 2 * n, p);
    out.dense = u;
    for (int g = 0; g < 2 * n; ++g) {
        PauliOperator gen = generator(p, n, g);
        Matrix conj = u * gen.dense() * u.adjoint();
        int best = 0;
        Complex best_coef = 0.0;
        for (size_t i = 0; i < paulis.size(); ++i) {
            Complex coef = (paulis[i].dense().adjoint() * conj).trace() / static_cast<double>(dim);
            if (std::abs(coef) > std::abs(best_coef)) {
                best_coef = coef;
                best = static_cast<int>(i);
            }
        }
        double deficit = 1.0 - std::abs(best_coef);
        if (deficit > tol) {
            return NotClifford{g, gen.to_string(), deficit};
        }
        int k = mod(std::llround(std::arg(best_coef) * m / (2.0 * std::numbers::pi)), m);
        double miss = std::abs(best_coef - root_of_unity(k, m));
        if (miss > tol) {
            return NotClifford{g, gen.to_string(), miss};
        }
        out.symplectic.set_row(g, paulis[best].vec());
        out.phases.push_back(k);
    }
    return out;
}

SymplecticClifford clifford_from_images(const std::vector<PauliOperator> &x_images,
                                        const std::vector<PauliOperator> &z_images) {
    const int n = static_cast<int>(x_images.size());
    if (n == 0 || static_cast<int>(z_images.size()) != n) {
        throw DomainError("need n X images and n Z images");
    }
    const int p = x_images.front().p();
    const int dim = ipow(p, n);
    std::vector<PauliOperator> images = x_images;
    images.insert(images.end(), z_images.begin(), z_images.end());
    for (int a = 0; a < 2 * n; ++a) {
        if (images[a].p() != p || images[a].n() != n) {
            throw DomainError("image " + std::to_string(a) + " has the wrong shape");
        }
        if (p == 2 && images[a].phase() % 2 != 0) {
            throw DomainError("qubit image " + images[a].to_string() + " is not Hermitian");
        }
        for (int b = 0; b < 2 * n; ++b) {
            int expected = symplectic_form(generator(p, n, a).vec(), generator(p, n, b).vec(), p);
            if (symplectic_form(images[a], images[b]) != expected) {
                throw DomainError("images " + images[a].to_string() + " and " + images[b].to_string() +
                                  " break the X/Z commutation relations");
            }
        }
    }

    // Joint +1 eigenvector of the Z images.
    Matrix proj = Matrix::Identity(dim, dim);
    for (const auto &z : z_images) {
        Matrix acc = Matrix::Identity(dim, dim);
        Matrix power = Matrix::Identity(dim, dim);
        for (int k = 1; k < p; ++k) {
            power = power * z.dense();
            acc += power;
        }
        proj = proj * (acc / static_cast<double>(p));
    }
    if (std::abs(proj.trace().real() - 1.0) > tolerances().diagonalization()) {
        throw InternalError("Z images do not fix a unique state");
    }
    Eigen::Index col = 0;
    proj.colwise().norm().maxCoeff(&col);
    Vector psi0 = proj.col(col).normalized();
    fix_global_phase(psi0);

    Matrix u(dim, dim);
    for (int index = 0; index < dim; ++index) {
        ZpVector x = digits(index, p, n);
        Vector v = psi0;
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < x[i]; ++k) {
                v = x_images[i].dense() * v;
            }
        }
        u.col(index) = v;
    }

    SymplecticClifford out;
    out.p = p;
    out.n = n;
    out.symplectic = ZpMatrix(2 * n, 2 * n, p);
    for (int g = 0; g < 2 * n; ++g) {
        out.symplectic.set_row(g, images[g].vec());
        out.phases.push_back(images[g].phase());
        Matrix conj = u * generator(p, n, g).dense() * u.adjoint();
        if (max_abs_diff(conj, images[g].dense()) > tolerances().lookup()) {
            throw InternalError("synthesized unitary misses image " + images[g].to_string());
        }
    }
    out.dense = std::move(u);
    return out;
}

SyndromeData syndrome_data(const AbelianSet &s, const AbelianSet &t) {
    for (const auto &member : t.members) {
        if (s.contains(member)) {
            throw DomainError("sets share " + member.to_string());
        }
    }
    const int p = s.p();
    const int n = s.n();
    SyndromeData out;
    out.m = s.generators();
    std::vector<PauliOperator> elements{PauliOperator::identity(p, n)};
    elements.insert(elements.end(), t.members.begin(), t.members.end());
    for (const auto &e : elements) {
        ZpVector sigma(n);
        for (int i = 0; i < n; ++i) {
            sigma[i] = symplectic_form(e, out.m[i]);
        }
        for (const auto &prior : out.syndromes) {
            if (prior == sigma) {
                throw InternalError("two elements of T share a syndrome");
            }
        }
        out.syndromes.push_back(std::move(sigma));
    }
    for (int i = 0; i < n; ++i) {
        ZpVector unit(n, 0);
        unit[i] = 1;
        for (size_t e = 0; e < elements.size(); ++e) {
            if (out.syndromes[e] == unit) {
                out.n.push_back(elements[e]);
                break;
            }
        }
    }
    return out;
}

SymplecticClifford standardize_pair(const AbelianSet &s, const AbelianSet &t) {
    SyndromeData data = syndrome_data(s, t);
    // W sends X_i -> N_i and Z_i -> M_i; C is its inverse.
    SymplecticClifford w = clifford_from_images(data.n, data.m);
    Matrix c = w.dense->adjoint();
    auto result = is_clifford(c, s.p(), s.n());
    if (auto *nc = std::get_if<NotClifford>(&result)) {
        throw InternalError("inverse of a synthesized Clifford fails on " + nc->witness);
    }
    return std::get<SymplecticClifford>(result);
}

std::variant<AffineData, NotBasisPreserving> affine_extraction(const Matrix &u, int p, int n) {
    const int dim = ipow(p, n);
    const double tol = tolerances().lookup();
    if (u.rows() != dim || u.cols() != dim) {
        throw DomainError("expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    }

    // U|z> = e^{i phi(z)} |g(z)>
    std::vector<int> g = monomial_rows(u, tol);
    std::vector<int> h(dim, -1);
    for (int z = 0; z < dim; ++z) {
        if (g[z] < 0) {
            return NotBasisPreserving{"Z", z, "image of |z> is not a Z-basis state"};
        }
        if (h[g[z]] >= 0) {
            return NotBasisPreserving{"Z", z, "two Z-basis states share an image"};
        }
        h[g[z]] = z;
    }
    Matrix fx = x_basis(p, n);
    std::vector<int> gx = monomial_rows(fx.adjoint() * u * fx, tol);
    for (int x = 0; x < dim; ++x) {
        if (gx[x] < 0) {
            return NotBasisPreserving{"X", x, "image of the X-basis state is not an X-basis state"};
        }
    }

    // g^-1(w) = A w + b
    AffineData data;
    data.b = digits(h[0], p, n);
    data.a = ZpMatrix(n, n, p);
    for (int k = 0; k < n; ++k) {
        ZpVector unit(n, 0);
        unit[k] = 1;
        ZpVector col = digits(h[index_of(unit, p)], p, n);
        for (int i = 0; i < n; ++i) {
            data.a.set(i, k, col[i] - data.b[i]);
        }
    }
    for (int w = 0; w < dim; ++w) {
        ZpVector fit = add_mod(times_column(data.a, digits(w, p, n)), data.b, p);
        if (index_of(fit, p) != h[w]) {
            return NotBasisPreserving{"affine", w, "inverse permutation is not affine"};
        }
    }
    if (!data.a.inverse()) {
        return NotBasisPreserving{"affine", 0, "linear part is singular"};
    }

    auto phase_at = [&](int z) { return std::arg(u(g[z], z)); };
    data.global_phase = phase_at(0);
    data.c.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        ZpVector unit(n, 0);
        unit[i] = 1;
        double rel = phase_at(index_of(unit, p)) - data.global_phase;
        data.c[i] = mod(std::llround(rel * p / (2.0 * std::numbers::pi)), p);
    }
    Matrix rebuilt = affine_unitary(data, p, n);
    if (max_abs_diff(rebuilt, u) > tol) {
        return NotBasisPreserving{"affine", 0, "phases are not affine in z"};
    }
    return data;
}

Matrix affine_unitary(const AffineData &data, int p, int n) {
    const int dim = ipow(p, n);
    auto a_inv = data.a.inverse();
    if (!a_inv) {
        throw DomainError("affine certificate has a singular A");
    }
    ZpVector shift = times_column(*a_inv, data.b);
    Matrix u = Matrix::Zero(dim, dim);
    for (int z = 0; z < dim; ++z) {
        ZpVector zd = digits(z, p, n);
        ZpVector target = add_mod(times_column(*a_inv, zd), scale_mod(shift, p - 1, p), p);
        double phase = 2.0 * std::numbers::pi * dot_mod(data.c, zd, p) / p + data.global_phase;
        u(index_of(target, p), z) = std::polar(1.0, phase);
    }
    return u;
}

SymplecticClifford squeezing_operator(const Field &field) {
    const int p = field.p();
    const int n = field.n();
    if (n < 2) {
        throw DomainError("squeezing is trivial for prime d");
    }
    const ZpMatrix &m = field.companion();
    auto mt_inv = m.transpose().inverse();
    if (!mt_inv) {
        throw InternalError("companion matrix is singular");
    }
    std::vector<PauliOperator> xs, zs;
    for (int i = 0; i < n; ++i) {
        xs.emplace_back(p, m.row(i), ZpVector(n, 0));
        zs.emplace_back(p, ZpVector(n, 0), mt_inv->row(i));
    }
    return clifford_from_images(xs, zs);
}

SymplecticClifford fourier_operator(const Field &field) {
    const int p = field.p();
    const int n = field.n();
    if (p != 2) {
        throw DomainError("fourier_operator needs characteristic 2");
    }
    // L[i][k] = first coordinate of w^(i+k); the z label of a point p is coords(p) L.
    ZpMatrix l(n, n, p);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            l.set(i, k, field.coords(field.exp(i + k))[0]);
        }
    }
    auto l_inv = l.inverse();
    if (!l_inv) {
        throw InternalError("trace form matrix is singular");
    }
    std::vector<PauliOperator> xs, zs;
    for (int i = 0; i < n; ++i) {
        xs.emplace_back(p, ZpVector(n, 0), l.row(i));
        zs.emplace_back(p, l_inv->row(i), ZpVector(n, 0));
    }
    return clifford_from_images(xs, zs);
}

bool is_flow(const NetContext &ctx, const Matrix &u, const QuantumNet &net) {
    if (u.rows() != ctx.d()) {
        throw DomainError("unitary dimension does not match the net");
    }
    return kernels::permutes_point_operators(ctx, u, net, tolerances().lookup());
}

MubMapResult maps_mub_to_mub(const Matrix &u, const MubSet &b1, const MubSet &b2) {
    if (u.rows() != b1.dim || b1.dim != b2.dim) {
        throw DomainError("dimension mismatch in maps_mub_to_mub");
    }
    const double tol = tolerances().lookup();
    MubMapResult out;
    out.ok = true;
    for (const auto &basis : b1.bases) {
        int target = -1;
        for (int k = 0; k < b2.num_bases() && target < 0; ++k) {
            bool all = true;
            for (const auto &v : basis.vectors) {
                Vector image = u * v;
                bool hit = false;
                for (const auto &w : b2.bases[k].vectors) {
                    if (std::abs(std::abs(w.dot(image)) - 1.0) < tol) {
                        hit = true;
                        break;
                    }
                }
                if (!hit) {
                    all = false;
                    break;
                }
            }
            if (all) {
                target = k;
            }
        }
        out.permutation.push_back(target);
        out.ok = out.ok && target >= 0;
    }
    return out;
}

std::vector<Matrix> translation_unitaries(const NetContext &ctx) {
    std::vector<Matrix> out;
    for (const auto &a : ctx.space().points()) {
        out.push_back(ctx.labeling().at(a).dense());
    }
    return out;
}

Matrix random_unitary(int dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            g(i, j) = Complex(gauss(rng), gauss(rng));
        }
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR();
    for (int i = 0; i < dim; ++i) {
        q.col(i) *= r(i, i) / std::abs(r(i, i));
    }
    return q;
}

std::variant<AffineData, NotBasisPreserving> composition_check(const Matrix &u, const NetContext &ctx) {
    const MubSet &mub = ctx.mub();
    MubMapResult map = maps_mub_to_mub(u, mub, mub);
    if (!map.ok) {
        throw DomainError("unitary does not map the MUB to itself");
    }
    const auto &prov = mub.provenance;
    SymplecticClifford c1 = standardize_pair(prov[0], prov[1]);
    SymplecticClifford c2 = standardize_pair(prov[map.permutation[0]], prov[map.permutation[1]]);
    Matrix composed = *c2.dense * u * c1.dense->adjoint();
    return affine_extraction(composed, ctx.field().p(), ctx.field().n());
}

}  // namespace dwf
