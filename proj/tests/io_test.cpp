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

#include <sstream>

#include "dwf/clifford.hpp"
#include "dwf/io.hpp"

using dwf::FormatError;
using dwf::Json;
using dwf::NetContext;

namespace {

template <class F>
std::string format_error_message(F &&f) {
    try {
        f();
    } catch (const FormatError &e) {
        return e.what();
    }
    return "<no FormatError>";
}

TEST(Io, StateRoundTrip) {
    std::mt19937_64 rng(5);
    auto mixed = dwf::random_mixed_state(3, rng);
    auto back = dwf::state_from_json(dwf::state_to_json(mixed));
    EXPECT_LT(dwf::max_abs_diff(back.rho, mixed.rho), 1e-15);

    dwf::Vector psi(2);
    psi << dwf::Complex(0.6, 0), dwf::Complex(0, 0.8);
    auto pure = dwf::DensityState::pure(psi);
    Json j = dwf::state_to_json(pure, &psi);
    EXPECT_EQ(j["kind"], "pure");
    EXPECT_LT(dwf::max_abs_diff(dwf::state_from_json(j).rho, pure.rho), 1e-15);
}

TEST(Io, StateErrorsNameTheField) {
    EXPECT_NE(format_error_message([] { dwf::state_from_json(Json{{"dim", 2}, {"kind", "pure"}}); }).find("data"),
              std::string::npos);
    EXPECT_NE(format_error_message([] {
                  dwf::state_from_json(Json::parse(R"({"dim": 2, "kind": "weird", "data": []})"));
              }).find("kind"),
              std::string::npos);
    EXPECT_NE(format_error_message([] {
                  dwf::state_from_json(Json::parse(R"({"dim": 3, "kind": "pure", "data": [[1,0],[0,0]]})"));
              }).find("dim"),
              std::string::npos);
    EXPECT_THROW(dwf::state_from_json(Json::parse(R"({"dim": 2, "kind": "pure", "data": [[1,0],["x",0]]})")),
                 FormatError);
}

TEST(Io, NetRoundTrip) {
    NetContext ctx(dwf::Field::for_dimension(3));
    std::mt19937_64 rng(2);
    auto net = ctx.sample(rng);
    EXPECT_TRUE(dwf::net_from_json(dwf::net_to_json(net), ctx) == net);
    NetContext other(dwf::Field::for_dimension(2));
    EXPECT_THROW(dwf::net_from_json(dwf::net_to_json(net), other), FormatError);
}

TEST(Io, UnitaryRoundTrip) {
    std::mt19937_64 rng(3);
    auto u = dwf::random_unitary(4, rng);
    EXPECT_LT(dwf::max_abs_diff(dwf::unitary_from_json(dwf::unitary_to_json(u)), u), 1e-15);
    EXPECT_THROW(dwf::unitary_from_json(Json{{"dim", 2}}), FormatError);
}

TEST(Io, WignerCsvRoundTrip) {
    NetContext ctx(dwf::Field::for_dimension(4));
    std::mt19937_64 rng(4);
    auto w = dwf::wigner_function(ctx, dwf::random_pure_state(4, rng), ctx.sample(rng));
    std::stringstream ss;
    dwf::write_wigner_csv(ss, ctx, w);
    EXPECT_EQ(ss.str().substr(0, 6), "q,p,W\n");
    auto values = dwf::read_wigner_csv(ss, ctx);
    ASSERT_EQ(values.size(), w.values.size());
    for (size_t i = 0; i < values.size(); ++i) {
        EXPECT_EQ(values[i], w.values[i]);
    }
}

TEST(Io, WignerCsvRejectsBadInput) {
    NetContext ctx(dwf::Field::for_dimension(2));
    std::stringstream bad_header("a,b,c\n");
    EXPECT_THROW(dwf::read_wigner_csv(bad_header, ctx), FormatError);
    std::stringstream out_of_order("q,p,W\n0,1,0.5\n0,0,0.5\n1,0,0\n1,1,0\n");
    EXPECT_THROW(dwf::read_wigner_csv(out_of_order, ctx), FormatError);
    std::stringstream short_file("q,p,W\n0,0,0.5\n");
    EXPECT_THROW(dwf::read_wigner_csv(short_file, ctx), FormatError);
    std::stringstream not_number("q,p,W\n0,0,abc\n0,1,0\n1,0,0\n1,1,0\n");
    EXPECT_THROW(dwf::read_wigner_csv(not_number, ctx), FormatError);
}

TEST(Io, StampAddsMetadata) {
    Json doc = Json::object();
    dwf::stamp(doc, dwf::metadata_for(dwf::Field::for_dimension(4), 7));
    EXPECT_EQ(doc["dimension"], 4);
    EXPECT_EQ(doc["seed"], 7);
    EXPECT_EQ(doc["tool_version"], dwf::kToolVersion);
    EXPECT_TRUE(doc["primitive_poly"].is_string());
}

TEST(Io, MubDocumentShape) {
    auto mub = dwf::build_mub(dwf::Field::for_dimension(3));
    Json j = dwf::mub_to_json(mub);
    EXPECT_EQ(j["dim"], 3);
    ASSERT_EQ(j["bases"].size(), 4u);
    EXPECT_EQ(j["bases"][0].size(), 3u);
    EXPECT_EQ(j["bases"][0][0].size(), 3u);
}

TEST(Io, ReadMissingFile) {
    EXPECT_THROW(dwf::read_json_file("/nonexistent/dwf.json"), dwf::DomainError);
}

}  // namespace
