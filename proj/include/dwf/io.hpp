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

// JSON and CSV formats. Complex numbers are [re, im] pairs everywhere.
// stamp() adds the run metadata (dimension, primitive_poly, seed,
// tool_version); the CLI stamps every document it writes.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "dwf/classicality.hpp"
#include "dwf/errors.hpp"
#include "dwf/mub.hpp"
#include "dwf/quantum_net.hpp"
#include "dwf/wigner.hpp"

namespace dwf {

inline constexpr const char *kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 20260101;

using Json = nlohmann::json;

/// Malformed or inconsistent input document. The message names the field.
class FormatError : public DomainError {
   public:
    explicit FormatError(const std::string &what) : DomainError(what) {
    }
};

struct RunMetadata {
    int dimension = 0;
    std::string primitive_poly;
    std::uint64_t seed = kDefaultSeed;
};

RunMetadata metadata_for(const Field &field, std::uint64_t seed);
/// Adds the metadata keys to an object.
void stamp(Json &doc, const RunMetadata &meta);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json &j, const std::string &where);
Json vector_to_json(const Vector &v);
Vector vector_from_json(const Json &j, const std::string &where);
Json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const Json &j, const std::string &where);

/// {"dim", "kind": "pure"|"density", "data"}
Json state_to_json(const DensityState &state, const Vector *amplitudes = nullptr);
DensityState state_from_json(const Json &j);

/// {"dim", "ray_choices"}
Json net_to_json(const QuantumNet &net);
/// Throws FormatError when the dimension differs from the context.
QuantumNet net_from_json(const Json &j, const NetContext &ctx);

/// {"dim", "matrix"}
Json unitary_to_json(const Matrix &u);
Matrix unitary_from_json(const Json &j);

/// {"dim", "bases": [basis][vector][amplitude] = [re, im]}
Json mub_to_json(const MubSet &mub);

/// {"x", "coefficients", "certified_classical"}
Json decomposition_to_json(const DecompositionResult &result);
Json report_to_json(const FullReport &report, const NetContext &ctx);

/// Header q,p,W; one row per point in (q, p) order; 17 significant digits.
void write_wigner_csv(std::ostream &out, const NetContext &ctx, const WignerTable &w);
/// Values in row order. Throws FormatError on a bad header or row.
std::vector<double> read_wigner_csv(std::istream &in, const NetContext &ctx);

Json read_json_file(const std::string &path);
void write_json_file(const std::string &path, const Json &doc);

}  // namespace dwf
