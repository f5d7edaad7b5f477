// Copyright 2026 The pptcert Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pptcert/error.hpp"
#include "pptcert/io.hpp"

namespace {

using namespace pptcert;
using io::json;

std::string parse_message(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Parse);
        return e.what();
    }
    ADD_FAILURE() << "no parse error";
    return {};
}

TEST(Json, PureStateRoundTrip) {
    Rng rng = make_rng(1);
    const PureState psi = sample_haar_state(DimsSpec({2, 3}), rng);
    const PureState back = io::pure_from_json(json::parse(io::dump(io::to_json(psi))));
    EXPECT_EQ(back.dims, psi.dims);
    EXPECT_EQ(back.amplitudes, psi.amplitudes);  // shortest round-trip decimals
}

TEST(Json, DensityAndMixtureRoundTrip) {
    const MixtureSpec ex = example1_mixture();
    const MixtureSpec back = io::mixture_from_json(json::parse(io::dump(io::to_json(ex))));
    EXPECT_EQ(back.weights, ex.weights);
    ASSERT_EQ(back.k(), ex.k());
    EXPECT_EQ(mix(back).matrix, mix(ex).matrix);

    const DensityMatrix h = horodecki(4.5);
    const auto any = io::any_state_from_json(io::to_json(h));
    ASSERT_TRUE(std::holds_alternative<DensityMatrix>(any));
    EXPECT_EQ(std::get<DensityMatrix>(any).matrix, h.matrix);

    MixtureSpec mixed_head;
    mixed_head.weights = {0.5, 0.5};
    mixed_head.head = h;
    mixed_head.tail = {std::get<PureState>(ex.head)};
    const MixtureSpec mb = io::mixture_from_json(io::to_json(mixed_head));
    EXPECT_TRUE(std::holds_alternative<DensityMatrix>(mb.head));
}

TEST(Json, ReportAndCertificateShape) {
    const ClassificationReport rep = classify(horodecki(5.0), Bipartition::first_of(DimsSpec({3, 3})));
    const json j = io::to_json(rep);
    EXPECT_EQ(j.size(), 5u);
    EXPECT_EQ(j["partition"], json::array({0}));
    EXPECT_EQ(j["label"], "NPT");
    EXPECT_EQ(j["negative_count"], rep.negative_count);

    MixtureSpec bell;
    bell.weights = {1.0};
    bell.head = make_pure(CVector{1.0, 0.0, 0.0, 1.0}, DimsSpec({2, 2}));
    const json w = io::to_json(certify(bell, Bipartition::first_of(DimsSpec({2, 2}))));
    EXPECT_EQ(w["decided_by"], "witness");
    EXPECT_EQ(w["xi"].size(), 4u);
    EXPECT_NEAR(w["quad_value"].get<double>(), -0.5, 1e-14);
    for (const char* key : {"partition", "per_component", "tolerance"}) EXPECT_TRUE(w.contains(key)) << key;

    const json s = io::to_json(certify(example1_mixture(), Bipartition::first_of(DimsSpec({3, 3}))));
    EXPECT_EQ(s["decided_by"], "spectrum");
    EXPECT_EQ(s["label"], "PPT");
    EXPECT_TRUE(s["quad_value"].is_null());
}

TEST(Json, SummaryOmitsWallTime) {
    TrialSummary s;
    s.config.dims = DimsSpec({3, 3});
    s.wall_time_seconds = 12.5;
    const json j = io::to_json(s);
    EXPECT_FALSE(j.contains("wall_time_seconds"));
    EXPECT_EQ(j["theorem"], "T2");
}

TEST(Json, ParseErrorsNameThePathAndField) {
    EXPECT_NE(parse_message([] { io::pure_from_json(json::parse(R"({"amplitudes":[[1,0]]})"), "in.json"); })
                  .find("in.json: field 'dims'"),
              std::string::npos);
    EXPECT_NE(parse_message([] { io::pure_from_json(json::parse(R"({"dims":[2,2],"amplitudes":[[1,0]]})")); })
                  .find("'amplitudes'"),
              std::string::npos);
    EXPECT_NE(parse_message([] { io::pure_from_json(json::parse(R"({"dims":[2,2],"amplitudes":[1,0,0,0]})")); })
                  .find("[re, im]"),
              std::string::npos);
    EXPECT_NE(parse_message([] { io::pure_from_json(json::parse(R"({"dims":[1,2],"amplitudes":[[1,0]]})")); })
                  .find("'dims'"),
              std::string::npos);
    EXPECT_NE(parse_message([] {
                  io::density_from_json(json::parse(R"({"dims":[2,2],"matrix":[[[1,0]]]})"));
              }).find("'matrix'"),
              std::string::npos);
    EXPECT_NE(parse_message([] {
                  io::mixture_from_json(json::parse(
                      R"({"weights":[0.5,0.4],"components":[{"dims":[2,2],"amplitudes":[[1,0],[0,0],[0,0],[0,0]]},{"dims":[2,2],"amplitudes":[[0,0],[0,0],[0,0],[1,0]]}]})"));
              }).find("'weights'"),
              std::string::npos);
    EXPECT_NE(parse_message([] {
                  io::mixture_from_json(json::parse(R"({"weights":[1.0],"components":[{"dims":[2,2]}]})"));
              }).find("components[0]"),
              std::string::npos);
    parse_message([] { io::read_json_file("/nonexistent/file.json"); });
}

TEST(Files, AtomicWriteAndMalformedRead) {
    const auto dir = std::filesystem::temp_directory_path() / "pptcert_io_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "out.json").string();
    io::write_file_atomic(path, "{\"a\": 1}\n");
    EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
    EXPECT_EQ(io::read_json_file(path)["a"], 1);
    io::write_file_atomic(path, "{not json");
    const std::string msg = parse_message([&] { io::read_json_file(path); });
    EXPECT_NE(msg.find(path), std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST(Csv, SweepFormat) {
    HorodeckiSweep s;
    s.rows = {{2.0, 0.1, PptLabel::PPT}, {4.5, -0.0125, PptLabel::NPT}};
    EXPECT_EQ(io::sweep_csv(s), "alpha,min_eig,label\n2,0.1,PPT\n4.5,-0.0125,NPT\n");
    EXPECT_EQ(io::format_double(0.1), "0.1");
    EXPECT_EQ(std::stod(io::format_double(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
