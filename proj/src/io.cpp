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

#include "dwf/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace dwf {

namespace {

const Json &require(const Json &j, const char *key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(where + ": missing field \"" + key + "\"");
    }
    return j.at(key);
}

int require_dim(const Json &j, const std::string &where) {
    const Json &dim = require(j, "dim", where);
    if (!dim.is_number_integer() || dim.get<int>() < 2) {
        throw FormatError(where + ": field \"dim\" must be an integer >= 2");
    }
    return dim.get<int>();
}

}  // namespace

RunMetadata metadata_for(const Field &field, std::uint64_t seed) {
    return {field.d(), field.poly_string(), seed};
}

void stamp(Json &doc, const RunMetadata &meta) {
    doc["dimension"] = meta.dimension;
    doc["primitive_poly"] = meta.primitive_poly;
    doc["seed"] = meta.seed;
    doc["tool_version"] = kToolVersion;
}

Json complex_to_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Complex complex_from_json(const Json &j, const std::string &where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw FormatError(where + ": expected [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json vector_to_json(const Vector &v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(complex_to_json(v[i]));
    }
    return out;
}

Vector vector_from_json(const Json &j, const std::string &where) {
    if (!j.is_array()) {
        throw FormatError(where + ": expected an array of [re, im]");
    }
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i], where + "[" + std::to_string(i) + "]");
    }
    return v;
}

Json matrix_to_json(const Matrix &m) {
    Json out = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out.push_back(vector_to_json(m.row(r).transpose()));
    }
    return out;
}

Matrix matrix_from_json(const Json &j, const std::string &where) {
    if (!j.is_array() || j.empty()) {
        throw FormatError(where + ": expected a non-empty array of rows");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    Matrix m(rows, rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        Vector row = vector_from_json(j[r], where + "[" + std::to_string(r) + "]");
        if (row.size() != rows) {
            throw FormatError(where + "[" + std::to_string(r) + "]: row length differs from row count");
        }
        m.row(r) = row.transpose();
    }
    return m;
}

Json state_to_json(const DensityState &state, const Vector *amplitudes) {
    Json out;
    out["dim"] = state.dim();
    if (amplitudes != nullptr) {
        out["kind"] = "pure";
        out["data"] = vector_to_json(*amplitudes);
    } else {
        out["kind"] = "density";
        out["data"] = matrix_to_json(state.rho);
    }
    return out;
}

DensityState state_from_json(const Json &j) {
    const int dim = require_dim(j, "state");
    const Json &kind = require(j, "kind", "state");
    const Json &data = require(j, "data", "state");
    if (kind == "pure") {
        Vector v = vector_from_json(data, "state.data");
        if (v.size() != dim) {
            throw FormatError("state.data: " + std::to_string(v.size()) + " amplitudes but state.dim is " +
                              std::to_string(dim));
        }
        try {
            return DensityState::pure(v);
        } catch (const DomainError &e) {
            throw FormatError(std::string("state.data: ") + e.what());
        }
    }
    if (kind == "density") {
        Matrix rho = matrix_from_json(data, "state.data");
        if (rho.rows() != dim) {
            throw FormatError("state.data: " + std::to_string(rho.rows()) + " rows but state.dim is " +
                              std::to_string(dim));
        }
        try {
            return DensityState::mixed(rho);
        } catch (const DomainError &e) {
            throw FormatError(std::string("state.data: ") + e.what());
        }
    }
    throw FormatError("state.kind: expected \"pure\" or \"density\"");
}

Json net_to_json(const QuantumNet &net) {
    Json out;
    out["dim"] = net.dim;
    out["ray_choices"] = net.ray_choices;
    return out;
}

QuantumNet net_from_json(const Json &j, const NetContext &ctx) {
    const int dim = require_dim(j, "net");
    if (dim != ctx.d()) {
        throw FormatError("net.dim: " + std::to_string(dim) + " does not match d=" + std::to_string(ctx.d()));
    }
    const Json &choices = require(j, "ray_choices", "net");
    if (!choices.is_array()) {
        throw FormatError("net.ray_choices: expected an array");
    }
    std::vector<int> rc;
    for (const auto &c : choices) {
        if (!c.is_number_integer()) {
            throw FormatError("net.ray_choices: entries must be integers");
        }
        rc.push_back(c.get<int>());
    }
    try {
        return ctx.complete(rc);
    } catch (const DomainError &e) {
        throw FormatError(std::string("net.ray_choices: ") + e.what());
    }
}

Json unitary_to_json(const Matrix &u) {
    Json out;
    out["dim"] = u.rows();
    out["matrix"] = matrix_to_json(u);
    return out;
}

Matrix unitary_from_json(const Json &j) {
    const int dim = require_dim(j, "unitary");
    Matrix m = matrix_from_json(require(j, "matrix", "unitary"), "unitary.matrix");
    if (m.rows() != dim) {
        throw FormatError("unitary.matrix: expected " + std::to_string(dim) + " rows");
    }
    return m;
}

Json mub_to_json(const MubSet &mub) {
    Json out;
    out["dim"] = mub.dim;
    Json bases = Json::array();
    for (const auto &basis : mub.bases) {
        Json vectors = Json::array();
        for (const auto &v : basis.vectors) {
            vectors.push_back(vector_to_json(v));
        }
        bases.push_back(std::move(vectors));
    }
    out["bases"] = std::move(bases);
    return out;
}

Json decomposition_to_json(const DecompositionResult &result) {
    Json out;
    out["x"] = result.x_total;
    out["coefficients"] = result.coefficients;
    out["certified_classical"] = result.certified_classical;
    return out;
}

Json report_to_json(const FullReport &report, const NetContext &ctx) {
    Json out;
    const auto &s = report.summary;
    out["min_wigner"] = s.min_wigner;
    out["sum_of_minima"] = s.sum_of_minima;
    out["in_Cd"] = s.in_cd;
    out["probabilities"] = s.probabilities.p;
    if (s.witness) {
        out["witness"] = {{"net", net_to_json(s.witness->net)},
                          {"point", {s.witness->point.q.value, s.witness->point.p.value}},
                          {"value", s.witness->value}};
    }
    Json witnesses = Json::array();
    for (const auto &w : report.witnesses) {
        witnesses.push_back({{"ray_choices", w.net.ray_choices},
                             {"point", {w.point.q.value, w.point.p.value}},
                             {"value", w.value}});
    }
    out["witnesses"] = std::move(witnesses);
    out["decomposition"] = decomposition_to_json(report.decomposition);
    out["dim"] = ctx.d();
    return out;
}

void write_wigner_csv(std::ostream &out, const NetContext &ctx, const WignerTable &w) {
    out << "q,p,W\n";
    out << std::setprecision(17);
    for (const auto &a : ctx.space().points()) {
        out << a.q.value << ',' << a.p.value << ',' << w.at(ctx.space(), a) << '\n';
    }
}

std::vector<double> read_wigner_csv(std::istream &in, const NetContext &ctx) {
    std::string line;
    if (!std::getline(in, line) || line != "q,p,W") {
        throw FormatError("wigner csv: header must be q,p,W");
    }
    std::vector<double> values;
    int row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::string q, p, w;
        if (!std::getline(fields, q, ',') || !std::getline(fields, p, ',') || !std::getline(fields, w)) {
            throw FormatError("wigner csv: row " + std::to_string(row + 1) + " needs three fields");
        }
        PhasePoint expected = ctx.space().point_at(row);
        unsigned long qv = 0, pv = 0;
        double value = 0.0;
        try {
            qv = std::stoul(q);
            pv = std::stoul(p);
            value = std::stod(w);
        } catch (const std::logic_error &) {
            throw FormatError("wigner csv: row " + std::to_string(row + 1) + " is not numeric");
        }
        if (qv != expected.q.value || pv != expected.p.value) {
            throw FormatError("wigner csv: row " + std::to_string(row + 1) + " is out of order");
        }
        values.push_back(value);
        ++row;
    }
    if (row != ctx.d() * ctx.d()) {
        throw FormatError("wigner csv: expected " + std::to_string(ctx.d() * ctx.d()) + " rows");
    }
    return values;
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError(path + ": cannot open");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_json_file(const std::string &path, const Json &doc) {
    std::ofstream out(path);
    if (!out) {
        throw FormatError(path + ": cannot write");
    }
    out << doc.dump(2) << '\n';
}

}  // namespace dwf
