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

#include "dwf/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "dwf/classicality.hpp"
#include "dwf/clifford.hpp"
#include "dwf/errors.hpp"
#include "dwf/tableau.hpp"
#include "dwf/tolerance.hpp"

namespace dwf {

namespace {

using Outcome = std::pair<bool, std::string>;

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(3);
    s << x;
    return s.str();
}

Outcome within(double worst, double tol) {
    return {worst <= tol, "max dev " + fmt(worst)};
}

class Suite {
   public:
    void run(const std::string &group, const std::string &name, const std::function<Outcome()> &body) {
        CheckResult r{group, name, false, ""};
        try {
            auto [pass, detail] = body();
            r.pass = pass;
            r.detail = std::move(detail);
        } catch (const std::exception &e) {
            r.detail = std::string("threw: ") + e.what();
        }
        results.push_back(std::move(r));
    }

    std::vector<CheckResult> results;
};

void field_checks(Suite &suite, const Field &f) {
    suite.run("field", "axioms", [&] {
        auto els = f.elements();
        for (auto a : els) {
            if (a != f.zero() && f.mul(a, f.inv(a)) != f.one()) {
                return Outcome{false, "inverse of " + f.format(a)};
            }
            for (auto b : els) {
                if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) {
                    return Outcome{false, "commutativity"};
                }
                for (auto c : els) {
                    if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)) ||
                        f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)) ||
                        f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) {
                        return Outcome{false, "associativity/distributivity"};
                    }
                }
            }
        }
        return Outcome{true, "exhaustive over " + std::to_string(f.d()) + "^3 triples"};
    });
    suite.run("field", "generator_order", [&] {
        std::set<std::uint32_t> seen;
        for (int k = 0; k < f.d() - 1; ++k) {
            seen.insert(f.exp(k).value);
        }
        return Outcome{static_cast<int>(seen.size()) == f.d() - 1 && f.exp(f.d() - 1) == f.one(),
                       std::to_string(seen.size()) + " distinct powers"};
    });
    suite.run("field", "companion", [&] {
        for (auto x : f.elements()) {
            if (f.coords(f.mul(f.generator(), x)) != row_times(f.coords(x), f.companion())) {
                return Outcome{false, "mismatch at " + f.format(x)};
            }
        }
        return Outcome{true, "coords(w x) = coords(x) M"};
    });
}

void geometry_checks(Suite &suite, const PhaseSpace &space) {
    const int d = space.d();
    suite.run("geometry", "striations", [&] {
        if (space.num_striations() != d + 1) {
            return Outcome{false, "wrong striation count"};
        }
        for (const auto &s : space.striations()) {
            std::vector<int> cover(d * d, 0);
            for (const auto &l : s.lines) {
                auto pts = space.line_points(l);
                if (static_cast<int>(pts.size()) != d) {
                    return Outcome{false, "line " + space.format(l) + " has " + std::to_string(pts.size()) + " points"};
                }
                for (auto a : pts) {
                    ++cover[space.point_index(a)];
                }
            }
            if (std::any_of(cover.begin(), cover.end(), [](int c) { return c != 1; })) {
                return Outcome{false, "striation " + std::to_string(s.index) + " is not a partition"};
            }
        }
        return Outcome{true, std::to_string(d + 1) + " partitions"};
    });
    suite.run("geometry", "incidence", [&] {
        auto pts = space.points();
        for (size_t i = 0; i < pts.size(); ++i) {
            for (size_t j = i + 1; j < pts.size(); ++j) {
                int shared = 0;
                for (const auto &l : space.lines_through(pts[i])) {
                    shared += space.contains(l, pts[j]) ? 1 : 0;
                }
                if (shared != 1) {
                    return Outcome{false, space.format(pts[i]) + " and " + space.format(pts[j]) + " share " +
                                              std::to_string(shared) + " lines"};
                }
            }
        }
        return Outcome{true, "every pair on exactly one line"};
    });
}

void pauli_checks(Suite &suite, const NetContext &ctx, std::mt19937_64 &rng) {
    const Field &f = ctx.field();
    const PhaseSpace &space = ctx.space();
    auto pts = space.points();
    std::vector<PauliOperator> ops;
    for (auto a : pts) {
        ops.push_back(ctx.labeling().at(a));
    }
    // all pairs up to d = 5, a fixed-size sample beyond
    std::vector<std::pair<int, int>> pairs;
    const int np = static_cast<int>(pts.size());
    if (np <= 25) {
        for (int i = 0; i < np; ++i) {
            for (int j = 0; j < np; ++j) {
                pairs.emplace_back(i, j);
            }
        }
    } else {
        std::uniform_int_distribution<int> pick(0, np - 1);
        for (int k = 0; k < 1500; ++k) {
            pairs.emplace_back(pick(rng), pick(rng));
        }
    }
    suite.run("pauli", "product", [&] {
        double worst = 0.0;
        for (auto [i, j] : pairs) {
            worst = std::max(worst, max_abs_diff((ops[i] * ops[j]).dense(), ops[i].dense() * ops[j].dense()));
        }
        return within(worst, tolerances().algebraic() * 100);
    });
    suite.run("pauli", "commutation", [&] {
        for (auto [i, j] : pairs) {
            Matrix comm = ops[i].dense() * ops[j].dense() - ops[j].dense() * ops[i].dense();
            bool dense_commute = comm.cwiseAbs().maxCoeff() < tolerances().diagonalization();
            if (dense_commute != commutes(ops[i], ops[j])) {
                return Outcome{false, ops[i].to_string() + " vs " + ops[j].to_string()};
            }
        }
        return Outcome{true, std::to_string(pairs.size()) + " pairs"};
    });
    suite.run("pauli", "labeling_linear", [&] {
        for (auto [i, j] : pairs) {
            auto [q1, z1] = ctx.labeling().label(pts[i]);
            auto [q2, z2] = ctx.labeling().label(pts[j]);
            auto [q, z] = ctx.labeling().label(space.add(pts[i], pts[j]));
            if (q != add_mod(q1, q2, f.p()) || z != add_mod(z1, z2, f.p())) {
                return Outcome{false, "label(a + b) != label(a) + label(b) at " + space.format(pts[i])};
            }
        }
        return Outcome{true, "additive on " + std::to_string(pairs.size()) + " pairs"};
    });
    suite.run("pauli", "partition", [&] {
        std::set<ZpVector> seen;
        for (const auto &set : ctx.mub().provenance) {
            for (const auto &a : set.members) {
                for (const auto &b : set.members) {
                    if (!commutes(a, b)) {
                        return Outcome{false, "set with non-commuting members"};
                    }
                }
                seen.insert(a.vec());
            }
        }
        int expected = f.d() * f.d() - 1;
        return Outcome{static_cast<int>(seen.size()) == expected,
                       std::to_string(seen.size()) + " of " + std::to_string(expected) + " non-identity labels"};
    });
}

void mub_checks(Suite &suite, const NetContext &ctx) {
    const MubSet &mub = ctx.mub();
    suite.run("mub", "unbiasedness", [&] { return within(unbiasedness_report(mub).max_deviation, 1e-10); });
    suite.run("mub", "completeness", [&] { return within(completeness_deviation(mub), 1e-10); });
    suite.run("mub", "stabilizer", [&] {
        double worst = 0.0;
        for (int k = 0; k < mub.num_bases(); ++k) {
            for (const auto &member : mub.provenance[k].members) {
                for (const auto &v : mub.bases[k].vectors) {
                    worst = std::max(worst, 1.0 - std::abs(v.dot(member.dense() * v)));
                }
            }
        }
        return within(worst, 1e-10);
    });
}

std::vector<QuantumNet> sample_nets(const NetContext &ctx, int count, std::mt19937_64 &rng) {
    std::vector<QuantumNet> nets{ctx.complete(std::vector<int>(ctx.d() + 1, 0))};
    while (static_cast<int>(nets.size()) < count) {
        nets.push_back(ctx.sample(rng));
    }
    return nets;
}

void net_checks(Suite &suite, const NetContext &ctx, const std::vector<QuantumNet> &nets) {
    const PhaseSpace &space = ctx.space();
    const int d = ctx.d();
    suite.run("nets", "count", [&] {
        if (d > 3) {
            long long expected = 1;
            for (int i = 0; i <= d; ++i) {
                expected *= d;
            }
            return Outcome{ctx.net_count(false) == expected, std::to_string(ctx.net_count(false)) + " nets"};
        }
        std::set<std::vector<std::vector<int>>> distinct;
        ctx.enumerate(false, [&](const QuantumNet &net) { distinct.insert(net.assignment); });
        return Outcome{static_cast<long long>(distinct.size()) == ctx.net_count(false),
                       std::to_string(distinct.size()) + " distinct nets"};
    });
    suite.run("nets", "covariance", [&] {
        double worst = 0.0;
        for (const auto &net : nets) {
            for (auto a : space.points()) {
                const Matrix t = ctx.labeling().at(a).dense();
                for (const auto &s : space.striations()) {
                    for (const auto &line : s.lines) {
                        Line moved = space.map_line(line, [&](PhasePoint x) { return space.add(x, a); });
                        auto [k0, j0] = ctx.assigned(net, line);
                        auto [k1, j1] = ctx.assigned(net, moved);
                        if (k0 != k1) {
                            return Outcome{false, "translation changed striation"};
                        }
                        Matrix conj = t * ctx.projector(k0, j0) * t.adjoint();
                        worst = std::max(worst, max_abs_diff(conj, ctx.projector(k1, j1)));
                    }
                }
            }
        }
        return within(worst, tolerances().lookup());
    });
}

void wigner_checks(Suite &suite, const NetContext &ctx, const std::vector<QuantumNet> &nets,
                   std::mt19937_64 &rng) {
    const int d = ctx.d();
    suite.run("wigner", "point_operators", [&] {
        double worst = 0.0;
        for (const auto &net : nets) {
            auto ops = ctx.point_operators(net);
            for (size_t a = 0; a < ops->size(); ++a) {
                for (size_t b = 0; b < ops->size(); ++b) {
                    double expected = a == b ? 1.0 / d : 0.0;
                    worst = std::max(worst, std::abs(((*ops)[a] * (*ops)[b]).trace() - Complex(expected)));
                }
                worst = std::max(worst, std::abs((*ops)[a].trace() - Complex(1.0 / d)));
            }
        }
        return within(worst, 1e-10);
    });
    std::vector<DensityState> states;
    for (int i = 0; i < 5; ++i) {
        states.push_back(i % 2 ? random_mixed_state(d, rng) : random_pure_state(d, rng));
    }
    suite.run("wigner", "line_sums", [&] {
        double worst = 0.0;
        for (const auto &state : states) {
            auto probs = probabilities(state, ctx.mub());
            for (const auto &net : nets) {
                auto w = wigner_function(ctx, probs, net);
                for (const auto &s : ctx.space().striations()) {
                    for (const auto &line : s.lines) {
                        auto [k, j] = ctx.assigned(net, line);
                        worst = std::max(worst, std::abs(line_sum(ctx, w, line) - probs.p[k][j]));
                    }
                }
                worst = std::max(worst, std::abs(w.total() - 1.0));
            }
        }
        return within(worst, 1e-10);
    });
    suite.run("wigner", "two_paths", [&] {
        double worst = 0.0;
        for (const auto &state : states) {
            for (const auto &net : nets) {
                auto a = wigner_function(ctx, state, net);
                auto b = wigner_by_trace(ctx, state, net);
                for (size_t i = 0; i < a.values.size(); ++i) {
                    worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
                }
            }
        }
        return within(worst, tolerances().algebraic());
    });
    suite.run("wigner", "reconstruction", [&] {
        double worst = 0.0;
        for (const auto &state : states) {
            for (const auto &net : nets) {
                worst = std::max(worst, max_abs_diff(reconstruct_state(ctx, wigner_function(ctx, state, net)).rho,
                                                     state.rho));
            }
        }
        return within(worst, 1e-10);
    });
}

void classicality_checks(Suite &suite, const NetContext &ctx, std::mt19937_64 &rng) {
    const int d = ctx.d();
    if (d <= 4) {
        suite.run("classicality", "closed_form_vs_brute_force", [&] {
            double worst = 0.0;
            for (int i = 0; i < 5; ++i) {
                auto state = random_pure_state(d, rng);
                worst = std::max(worst, std::abs(brute_force_min(ctx, state) - min_wigner(ctx, state).min_wigner));
            }
            return within(worst, tolerances().algebraic());
        });
    }
    suite.run("classicality", "mub_projectors", [&] {
        double worst = 0.0;
        for (int k = 0; k < ctx.mub().num_bases(); ++k) {
            for (int j = 0; j < d; ++j) {
                worst = std::max(worst, std::abs(min_wigner(ctx, DensityState::pure(ctx.mub().vector(k, j))).min_wigner));
            }
        }
        return within(worst, tolerances().algebraic());
    });
    suite.run("classicality", "decomposition", [&] {
        std::gamma_distribution<double> gamma(1.0);
        double worst_recon = 0.0;
        double lowest = 1.0;
        for (int i = 0; i < 10; ++i) {
            Matrix rho = Matrix::Zero(d, d);
            double total = 0.0;
            for (int k = 0; k < d + 1; ++k) {
                for (int j = 0; j < d; ++j) {
                    double w = gamma(rng);
                    rho += w * ctx.projector(k, j);
                    total += w;
                }
            }
            auto state = DensityState::mixed(rho / total);
            auto dec = convex_decomposition(ctx, state);
            lowest = std::min(lowest, dec.min_coefficient());
            worst_recon = std::max(worst_recon, max_abs_diff(reconstruct_from_coefficients(ctx, dec.coefficients),
                                                             state.rho));
        }
        return Outcome{lowest >= -1e-10 && worst_recon < 1e-10,
                       "min coefficient " + fmt(lowest) + ", reconstruction " + fmt(worst_recon)};
    });
}

void clifford_checks(Suite &suite, const NetContext &ctx, const std::vector<QuantumNet> &nets,
                     std::mt19937_64 &rng) {
    const Field &f = ctx.field();
    const MubSet &mub = ctx.mub();
    auto in_uc = [&](const Matrix &u) {
        return maps_mub_to_mub(u, mub, mub).ok && std::holds_alternative<SymplecticClifford>(is_clifford(u, f.p(), f.n())) &&
               std::holds_alternative<AffineData>(composition_check(u, ctx));
    };
    suite.run("clifford", "translations", [&] {
        auto ts = translation_unitaries(ctx);
        for (size_t i = 0; i < ts.size(); ++i) {
            if (!in_uc(ts[i]) || !is_flow(ctx, ts[i], nets.front())) {
                return Outcome{false, "translation " + ctx.space().format(ctx.space().point_at(static_cast<int>(i)))};
            }
        }
        return Outcome{true, std::to_string(ts.size()) + " translations are Clifford flows"};
    });
    if (f.n() >= 2) {
        suite.run("clifford", "squeezing", [&] {
            auto us = squeezing_operator(f);
            if (!in_uc(*us.dense)) {
                return Outcome{false, "U_s outside U_c"};
            }
            auto perm = maps_mub_to_mub(*us.dense, mub, mub).permutation;
            if (perm[0] != 0 || perm[1] != 1) {
                return Outcome{false, "axes not preserved"};
            }
            // ray k goes to ray k - 2, so the obliques split into gcd(2, d - 1) cycles
            const int expected = (f.d() - 1) / std::gcd(2, f.d() - 1);
            int k = 2, steps = 0;
            do {
                k = perm[k];
                ++steps;
            } while (k != 2 && steps <= f.d());
            return Outcome{steps == expected, "oblique cycle length " + std::to_string(steps) + ", expected " +
                                                  std::to_string(expected)};
        });
    }
    if (f.p() == 2) {
        suite.run("clifford", "fourier_no_flow", [&] {
            auto fo = fourier_operator(f);
            if (!in_uc(*fo.dense)) {
                return Outcome{false, "F outside U_c"};
            }
            std::vector<QuantumNet> scan = f.d() <= 4 ? ctx.all_nets(f.d() > 2) : nets;
            for (const auto &net : scan) {
                if (is_flow(ctx, *fo.dense, net)) {
                    return Outcome{false, "F is a flow"};
                }
            }
            return Outcome{true, "no flow on " + std::to_string(scan.size()) + " nets"};
        });
    }
    suite.run("clifford", "haar_negative", [&] {
        for (int i = 0; i < 5; ++i) {
            if (maps_mub_to_mub(random_unitary(f.d(), rng), mub, mub).ok) {
                return Outcome{false, "Haar unitary preserved the MUB"};
            }
        }
        return Outcome{true, "5 Haar unitaries rejected"};
    });
}

void tableau_checks(Suite &suite, std::mt19937_64 &rng) {
    suite.run("tableau", "dense_agreement", [&] {
        double worst = 0.0;
        std::uniform_int_distribution<int> depth(0, 20);
        for (int i = 0; i < 20; ++i) {
            auto circuit = random_circuit(3, depth(rng), rng);
            auto t = tableau_apply(circuit, StabilizerTableau(3));
            worst = std::max(worst, (t.dense_state() - simulate_dense(circuit, 3)).cwiseAbs().maxCoeff());
        }
        return within(worst, 1e-10);
    });
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(int d, std::uint64_t seed) {
    Suite suite;
    std::mt19937_64 rng(seed);
    Field field = Field::for_dimension(d);
    NetContext ctx(field);
    field_checks(suite, field);
    geometry_checks(suite, ctx.space());
    pauli_checks(suite, ctx, rng);
    mub_checks(suite, ctx);
    auto nets = sample_nets(ctx, 3, rng);
    net_checks(suite, ctx, nets);
    wigner_checks(suite, ctx, nets, rng);
    classicality_checks(suite, ctx, rng);
    clifford_checks(suite, ctx, nets, rng);
    if (field.p() == 2) {
        tableau_checks(suite, rng);
    }
    return suite.results;
}

}  // namespace dwf
