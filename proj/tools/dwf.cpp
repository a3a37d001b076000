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

// dwf: discrete Wigner functions over finite fields.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dwf/classicality.hpp"
#include "dwf/clifford.hpp"
#include "dwf/io.hpp"
#include "dwf/tolerance.hpp"
#include "dwf/verify.hpp"

namespace {

using namespace dwf;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
    int d = 2;
    std::uint64_t seed = kDefaultSeed;
    std::string json_out;

    // field
    int p = 0;
    int n = 1;
    bool tables = false;
    // geometry
    bool striations = false;
    // pauli
    bool sets = false;
    // mub
    bool check = false;
    // nets
    bool fix_axes = false;
    bool count_only = false;
    int sample = 0;
    // wigner / classicality
    std::string state_path;
    std::string net_path;
    std::string csv_out;
    std::string decompose_out;
    bool brute_force = false;
    int witnesses = 5;
    // clifford
    std::string unitary_path;
    bool no_flow_scan = false;
    bool squeeze = false;
    bool fourier = false;
    std::string unitary_out;
};

void emit(const Options &opt, Json doc, const Field &field) {
    stamp(doc, metadata_for(field, opt.seed));
    if (opt.json_out.empty()) {
        return;
    }
    write_json_file(opt.json_out, doc);
}

std::string complex_str(Complex z) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << std::showpos << z.real() << z.imag() << "i";
    return s.str();
}

int cmd_field(const Options &opt) {
    Field f = opt.p != 0 ? Field::make(opt.p, opt.n) : Field::for_dimension(opt.d);
    std::cout << "GF(" << f.p() << "^" << f.n() << "), d = " << f.d() << "\n";
    std::cout << "primitive polynomial: " << f.poly_string() << "\n";
    std::cout << "generator w = " << f.format(f.generator()) << "\n";
    std::cout << "companion matrix M (coords(w x) = coords(x) M):\n" << f.companion().to_string() << "\n";
    std::cout << "element  coords  log  trace\n";
    for (auto e : f.elements()) {
        std::cout << std::setw(7) << f.format(e) << "  ";
        for (int c : f.coords(e)) {
            std::cout << c;
        }
        std::cout << "  " << std::setw(5) << (e == f.zero() ? std::string("-") : std::to_string(f.log(e))) << "  "
                  << f.trace(e) << "\n";
    }
    if (opt.tables) {
        for (const char *name : {"+", "*"}) {
            std::cout << "\n" << name << " table:\n";
            for (auto a : f.elements()) {
                for (auto b : f.elements()) {
                    auto r = name[0] == '+' ? f.add(a, b) : f.mul(a, b);
                    std::cout << std::setw(3) << r.value;
                }
                std::cout << "\n";
            }
        }
    }
    Json doc;
    doc["p"] = f.p();
    doc["n"] = f.n();
    doc["companion"] = Json::array();
    for (int r = 0; r < f.n(); ++r) {
        doc["companion"].push_back(f.companion().row(r));
    }
    emit(opt, doc, f);
    return kOk;
}

int cmd_geometry(const Options &opt) {
    PhaseSpace space(Field::for_dimension(opt.d));
    std::cout << space.num_striations() << " striations of " << space.d() << " lines\n";
    Json doc;
    doc["striations"] = Json::array();
    for (const auto &s : space.striations()) {
        std::cout << "striation " << s.index << " (direction " << space.format(s.direction) << "), ray "
                  << space.format(s.ray()) << "\n";
        Json lines = Json::array();
        for (const auto &l : s.lines) {
            if (opt.striations) {
                std::cout << "  " << space.format(l) << ":";
            }
            Json pts = Json::array();
            for (auto a : space.line_points(l)) {
                if (opt.striations) {
                    std::cout << " " << space.format(a);
                }
                pts.push_back({a.q.value, a.p.value});
            }
            if (opt.striations) {
                std::cout << "\n";
            }
            lines.push_back(std::move(pts));
        }
        doc["striations"].push_back(std::move(lines));
    }
    emit(opt, doc, space.field());
    return kOk;
}

int cmd_pauli(const Options &opt) {
    NetContext ctx(Field::for_dimension(opt.d));
    std::cout << "point -> translation operator\n";
    Json labels = Json::array();
    for (auto a : ctx.space().points()) {
        auto op = ctx.labeling().at(a);
        std::cout << "  " << ctx.space().format(a) << " -> " << op.to_string() << "\n";
        labels.push_back({{"point", {a.q.value, a.p.value}}, {"q", op.q()}, {"z", op.z()}});
    }
    Json sets = Json::array();
    if (opt.sets) {
        std::cout << "commuting sets (one per striation)\n";
    }
    for (size_t k = 0; k < ctx.mub().provenance.size(); ++k) {
        Json members = Json::array();
        if (opt.sets) {
            std::cout << "  S" << k << ":";
        }
        for (const auto &m : ctx.mub().provenance[k].members) {
            if (opt.sets) {
                std::cout << " " << m.to_string();
            }
            members.push_back({{"q", m.q()}, {"z", m.z()}, {"phase", m.phase()}});
        }
        if (opt.sets) {
            std::cout << "\n";
        }
        sets.push_back(std::move(members));
    }
    Json doc;
    doc["sets"] = std::move(sets);
    doc["labels"] = std::move(labels);
    emit(opt, doc, ctx.field());
    return kOk;
}

int cmd_mub(const Options &opt) {
    Field f = Field::for_dimension(opt.d);
    MubSet mub = build_mub(f);
    for (int k = 0; k < mub.num_bases(); ++k) {
        std::cout << "basis " << k << "\n";
        for (int j = 0; j < mub.bases[k].size(); ++j) {
            std::cout << "  " << j << ":";
            const Vector &v = mub.vector(k, j);
            for (Eigen::Index i = 0; i < v.size(); ++i) {
                std::cout << " " << complex_str(v[i]);
            }
            std::cout << "\n";
        }
    }
    auto report = unbiasedness_report(mub);
    std::cout << "max overlap deviation: " << report.max_deviation << " (basis " << report.basis_a << " vector "
              << report.vector_a << " vs basis " << report.basis_b << " vector " << report.vector_b << ")\n";
    double completeness = completeness_deviation(mub);
    std::cout << "completeness deviation: " << completeness << "\n";
    emit(opt, mub_to_json(mub), f);
    if (opt.check && (report.max_deviation > 1e-10 || completeness > 1e-10)) {
        std::cout << "CHECK FAILED\n";
        return kCheckFailed;
    }
    return kOk;
}

int cmd_nets(const Options &opt) {
    NetContext ctx(Field::for_dimension(opt.d));
    long long count = ctx.net_count(opt.fix_axes);
    std::cout << count << " nets" << (opt.fix_axes ? " with fixed axes" : "") << "\n";
    Json doc;
    doc["count"] = count;
    doc["fix_axes"] = opt.fix_axes;
    if (!opt.count_only) {
        std::vector<QuantumNet> nets;
        if (opt.sample > 0) {
            std::mt19937_64 rng(opt.seed);
            for (int i = 0; i < opt.sample; ++i) {
                nets.push_back(ctx.sample(rng, opt.fix_axes));
            }
        } else {
            nets = ctx.all_nets(opt.fix_axes);
        }
        Json list = Json::array();
        for (const auto &net : nets) {
            for (size_t i = 0; i < net.ray_choices.size(); ++i) {
                std::cout << (i ? " " : "") << net.ray_choices[i];
            }
            std::cout << "\n";
            list.push_back(net.ray_choices);
        }
        doc["ray_choices"] = std::move(list);
    }
    emit(opt, doc, ctx.field());
    return kOk;
}

int cmd_wigner(const Options &opt) {
    DensityState state = state_from_json(read_json_file(opt.state_path));
    NetContext ctx(Field::for_dimension(state.dim()));
    QuantumNet net = net_from_json(read_json_file(opt.net_path), ctx);
    WignerTable w = wigner_function(ctx, state, net);
    if (!opt.csv_out.empty()) {
        std::ofstream out(opt.csv_out);
        if (!out) {
            throw FormatError(opt.csv_out + ": cannot write");
        }
        write_wigner_csv(out, ctx, w);
    } else {
        write_wigner_csv(std::cout, ctx, w);
    }
    std::cout << "sum W = " << std::setprecision(17) << w.total() << "\n";
    Json doc;
    doc["net"] = net_to_json(net);
    doc["W"] = w.values;
    emit(opt, doc, ctx.field());
    return kOk;
}

int cmd_classicality(const Options &opt) {
    DensityState state = state_from_json(read_json_file(opt.state_path));
    NetContext ctx(Field::for_dimension(state.dim()));
    FullReport report = classify(ctx, state, opt.witnesses);
    const auto &s = report.summary;
    std::cout << std::setprecision(12);
    std::cout << "min_wigner: " << s.min_wigner << "\n";
    std::cout << "sum_of_minima: " << s.sum_of_minima << "\n";
    std::cout << "in_Cd: " << (s.in_cd ? "true" : "false") << "\n";
    if (!state.is_positive()) {
        std::cout << "note: input is not positive semidefinite\n";
    }
    if (s.witness) {
        std::cout << "witness net:";
        for (int c : s.witness->net.ray_choices) {
            std::cout << " " << c;
        }
        std::cout << " at " << ctx.space().format(s.witness->point) << "\n";
    }
    Json doc = report_to_json(report, ctx);
    int status = kOk;
    if (opt.brute_force) {
        double brute = brute_force_min(ctx, state);
        std::cout << "brute_force_min: " << brute << "\n";
        doc["brute_force_min"] = brute;
        if (std::abs(brute - s.min_wigner) > tolerances().algebraic()) {
            std::cout << "CHECK FAILED: closed form and brute force disagree\n";
            status = kCheckFailed;
        }
    }
    if (!opt.decompose_out.empty()) {
        Json dec = decomposition_to_json(report.decomposition);
        stamp(dec, metadata_for(ctx.field(), opt.seed));
        write_json_file(opt.decompose_out, dec);
    }
    emit(opt, doc, ctx.field());
    return status;
}

int cmd_clifford(const Options &opt) {
    if (!opt.unitary_path.empty()) {
        Matrix u = unitary_from_json(read_json_file(opt.unitary_path));
        Field f = Field::for_dimension(static_cast<int>(u.rows()));
        NetContext ctx(f);
        auto cl = is_clifford(u, f.p(), f.n());
        auto map = maps_mub_to_mub(u, ctx.mub(), ctx.mub());
        Json doc;
        if (auto *nc = std::get_if<NotClifford>(&cl)) {
            std::cout << "not Clifford: conjugate of " << nc->witness << " has Pauli deficit " << nc->deficit << "\n";
            doc["clifford"] = false;
        } else {
            const auto &sc = std::get<SymplecticClifford>(cl);
            std::cout << "Clifford; generator images:\n";
            for (int g = 0; g < 2 * f.n(); ++g) {
                std::cout << "  " << (g < f.n() ? "X" : "Z") << g % f.n() << " -> " << sc.image(g).to_string() << "\n";
            }
            doc["clifford"] = true;
        }
        std::cout << "maps MUB to MUB: " << (map.ok ? "yes" : "no") << "; permutation:";
        for (int k : map.permutation) {
            std::cout << " " << k;
        }
        std::cout << "\n";
        doc["maps_mub_to_mub"] = map.ok;
        doc["permutation"] = map.permutation;
        auto aff = affine_extraction(u, f.p(), f.n());
        if (auto *a = std::get_if<AffineData>(&aff)) {
            std::cout << "preserves Z and X bases: A =\n" << a->a.to_string() << "\n";
        } else {
            const auto &nb = std::get<NotBasisPreserving>(aff);
            std::cout << "not Z/X preserving (" << nb.basis << " state " << nb.state << "): " << nb.reason << "\n";
        }
        emit(opt, doc, f);
        return kOk;
    }
    Field f = Field::for_dimension(opt.d);
    NetContext ctx(f);
    if (opt.squeeze) {
        auto us = squeezing_operator(f);
        auto perm = maps_mub_to_mub(*us.dense, ctx.mub(), ctx.mub()).permutation;
        std::cout << "U_s basis permutation:";
        for (int k : perm) {
            std::cout << " " << k;
        }
        std::cout << "\n";
        auto nets = squeezing_covariant_nets(ctx, *us.dense);
        std::cout << nets.size() << " of " << ctx.net_count(true) << " fixed-axes nets are U_s-covariant\n";
        Json list = Json::array();
        for (const auto &net : nets) {
            for (size_t i = 0; i < net.ray_choices.size(); ++i) {
                std::cout << (i ? " " : "") << net.ray_choices[i];
            }
            std::cout << "\n";
            list.push_back(net.ray_choices);
        }
        if (!opt.unitary_out.empty()) {
            Json u = unitary_to_json(*us.dense);
            stamp(u, metadata_for(f, opt.seed));
            write_json_file(opt.unitary_out, u);
        }
        Json doc;
        doc["covariant_nets"] = std::move(list);
        doc["permutation"] = perm;
        emit(opt, doc, f);
        return static_cast<int>(nets.size()) == f.d() ? kOk : kCheckFailed;
    }
    if (opt.no_flow_scan || opt.fourier) {
        auto fo = fourier_operator(f);
        if (!opt.unitary_out.empty()) {
            Json u = unitary_to_json(*fo.dense);
            stamp(u, metadata_for(f, opt.seed));
            write_json_file(opt.unitary_out, u);
        }
        if (!opt.no_flow_scan) {
            std::cout << "F written\n";
            return kOk;
        }
        bool fix = f.d() > 2;
        auto nets = ctx.all_nets(fix);
        int flows = 0;
        for (const auto &net : nets) {
            flows += is_flow(ctx, *fo.dense, net) ? 1 : 0;
        }
        std::cout << "F is a flow on " << flows << " of " << nets.size() << (fix ? " fixed-axes" : "") << " nets\n";
        Json doc;
        doc["nets_scanned"] = nets.size();
        doc["flows"] = flows;
        emit(opt, doc, f);
        return flows == 0 ? kOk : kCheckFailed;
    }
    std::cerr << "clifford: pass one of --check, --squeeze, --fourier, --no-flow-scan\n";
    return kUsage;
}

int cmd_verify(const Options &opt) {
    auto results = run_invariant_suite(opt.d, opt.seed);
    int failures = 0;
    Json rows = Json::array();
    for (const auto &r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(14) << r.group << std::setw(30) << r.name
                  << r.detail << "\n";
        failures += r.pass ? 0 : 1;
        rows.push_back({{"group", r.group}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    std::cout << results.size() - failures << "/" << results.size() << " checks passed\n";
    Json doc;
    doc["checks"] = std::move(rows);
    emit(opt, doc, Field::for_dimension(opt.d));
    return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Discrete Wigner functions, quantum nets and Clifford checks over finite fields"};
    app.require_subcommand(1);
    Options opt;
    const std::vector<int> dims{2, 3, 4, 5, 7, 8, 9};
    auto add_common = [&](CLI::App *sub, bool needs_d) {
        if (needs_d) {
            sub->add_option("--d", opt.d, "Dimension (2, 3, 4, 5, 7, 8, 9)")->check(CLI::IsMember(dims));
        }
        sub->add_option("--seed", opt.seed, "Seed for randomized steps");
        sub->add_option("--json", opt.json_out, "Write a JSON result");
    };

    auto *field = app.add_subcommand("field", "Field tables and companion matrix");
    add_common(field, true);
    auto *p_opt = field->add_option("--p", opt.p, "Characteristic; any prime power p^n is accepted")
                      ->check(CLI::Range(2, 1 << 15))
                      ->excludes("--d");
    field->add_option("--n", opt.n, "Extension degree (with --p)")->check(CLI::Range(1, 16))->needs(p_opt);
    field->add_flag("--tables", opt.tables, "Print addition and multiplication tables");

    auto *geometry = app.add_subcommand("geometry", "Striations and their lines");
    add_common(geometry, true);
    geometry->add_flag("--striations", opt.striations, "Print every line with its points");

    auto *pauli = app.add_subcommand("pauli", "Point labeling and commuting sets");
    add_common(pauli, true);
    pauli->add_flag("--sets", opt.sets, "Print the commuting set of each striation");

    auto *mub = app.add_subcommand("mub", "Mutually unbiased bases");
    add_common(mub, true);
    mub->add_flag("--check", opt.check, "Exit 1 if unbiasedness fails");

    auto *nets = app.add_subcommand("nets", "Quantum net enumeration");
    add_common(nets, true);
    nets->add_flag("--fix-axes", opt.fix_axes, "Pin the vertical and horizontal rays");
    nets->add_flag("--count-only", opt.count_only, "Only print the count");
    nets->add_option("--sample", opt.sample, "Draw this many random nets instead of enumerating");

    auto *wigner = app.add_subcommand("wigner", "Wigner function of a state for one net");
    add_common(wigner, false);
    wigner->add_option("--state", opt.state_path, "State JSON")->required();
    wigner->add_option("--net", opt.net_path, "Net JSON")->required();
    wigner->add_option("--out", opt.csv_out, "CSV output (default stdout)");

    auto *classicality = app.add_subcommand("classicality", "Minimum Wigner value over all nets");
    add_common(classicality, false);
    classicality->add_option("--state", opt.state_path, "State JSON")->required();
    classicality->add_option("--decompose", opt.decompose_out, "Write the projector decomposition");
    classicality->add_flag("--brute-force", opt.brute_force, "Also minimize over every net (d <= 4)");
    classicality->add_option("--witnesses", opt.witnesses, "Number of negative witnesses to list");

    auto *clifford = app.add_subcommand("clifford", "Clifford and phase-space flow checks");
    add_common(clifford, true);
    clifford->add_option("--check", opt.unitary_path, "Unitary JSON to analyse");
    clifford->add_flag("--no-flow-scan", opt.no_flow_scan, "Check that F is a flow on no net");
    clifford->add_flag("--squeeze", opt.squeeze, "Squeezing operator and its covariant nets");
    clifford->add_flag("--fourier", opt.fourier, "Build F");
    clifford->add_option("--unitary-out", opt.unitary_out, "Write the generated unitary");

    auto *verify = app.add_subcommand("verify", "Run every invariant group for one dimension");
    add_common(verify, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*field) return cmd_field(opt);
        if (*geometry) return cmd_geometry(opt);
        if (*pauli) return cmd_pauli(opt);
        if (*mub) return cmd_mub(opt);
        if (*nets) return cmd_nets(opt);
        if (*wigner) return cmd_wigner(opt);
        if (*classicality) return cmd_classicality(opt);
        if (*clifford) return cmd_clifford(opt);
        if (*verify) return cmd_verify(opt);
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InternalError &e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kUsage;
}
