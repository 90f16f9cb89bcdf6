// Copyright 2026 The atqc Authors
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

#include <functional>
#include <set>
#include <sstream>

#include "atqc/error.h"
#include "atqc/surface_complex.h"
#include "atqc/torus_builder.h"
#include "json.hpp"

namespace {

using atqc::HexScaling;
using atqc::HexTorusSpec;
using atqc::SurfaceComplex;

std::vector<int> degrees(const SurfaceComplex &c) {
    std::vector<int> deg(static_cast<size_t>(c.num_vertices()), 0);
    for (const auto &e : c.edges()) {
        deg[static_cast<size_t>(e.a)]++;
        deg[static_cast<size_t>(e.b)]++;
    }
    return deg;
}

void expect_regular(const SurfaceComplex &c, size_t face_size, int degree) {
    for (int f = 0; f < c.num_faces(); f++) {
        EXPECT_EQ(c.face(f).size(), face_size) << c.label() << " face " << f;
    }
    for (int d : degrees(c)) {
        EXPECT_EQ(d, degree) << c.label();
    }
    EXPECT_EQ(static_cast<size_t>(c.num_faces()) * face_size, 2u * static_cast<size_t>(c.num_edges()));
    EXPECT_EQ(c.num_vertices() * degree, 2 * c.num_edges());
}

TEST(SquareTorus, Counts) {
    for (int l = 2; l <= 6; l++) {
        SurfaceComplex c = atqc::build_square_torus({l});
        EXPECT_EQ(c.num_vertices(), l * l);
        EXPECT_EQ(c.num_edges(), 2 * l * l);
        EXPECT_EQ(c.num_faces(), l * l);
        EXPECT_EQ(c.euler_characteristic(), 0);
        EXPECT_EQ(c.genus(), 1);
        expect_regular(c, 4, 4);
    }
    EXPECT_THROW(atqc::build_square_torus({1}), atqc::Error);
}

TEST(HexTorus, ApothemCounts) {
    for (int xi = 2; xi <= 6; xi++) {
        SurfaceComplex c = atqc::build_hex_torus({HexScaling::kApothem, xi});
        EXPECT_EQ(c.num_faces(), xi * xi);
        EXPECT_EQ(c.num_edges(), 3 * xi * xi);
        EXPECT_EQ(c.num_vertices(), 2 * xi * xi);
        EXPECT_FALSE(c.is_degenerate());
        expect_regular(c, 6, 3);
    }
}

TEST(HexTorus, EdgeCounts) {
    for (int lambda : {3, 6, 9}) {
        SurfaceComplex c = atqc::build_hex_torus({HexScaling::kEdge, lambda});
        EXPECT_EQ(c.num_faces(), lambda * lambda / 3);
        EXPECT_EQ(c.num_edges(), lambda * lambda);
        EXPECT_EQ(c.num_vertices(), 2 * lambda * lambda / 3);
        expect_regular(c, 6, 3);
    }
}

TEST(HexTorus, EdgeScalingNeedsThreeToDivideLambda) {
    for (int lambda : {1, 2, 4, 5, 7}) {
        try {
            atqc::build_hex_torus({HexScaling::kEdge, lambda});
            ADD_FAILURE() << "lambda " << lambda << " accepted";
        } catch (const atqc::Error &e) {
            EXPECT_EQ(e.kind(), atqc::ErrorKind::kInvalidInput);
            EXPECT_NE(std::string(e.what()).find("only if 3 divides lambda"), std::string::npos);
        }
    }
}

TEST(HexTorus, XiOneIsDegenerate) {
    SurfaceComplex c = atqc::build_hex_torus({HexScaling::kApothem, 1});
    EXPECT_EQ(c.num_faces(), 1);
    EXPECT_EQ(c.num_edges(), 3);
    EXPECT_TRUE(c.is_degenerate());
    std::set<int> distinct(c.face(0).begin(), c.face(0).end());
    EXPECT_EQ(distinct.size(), 3u);
}

TEST(HexTorus, CensusCheck) {
    for (int s = 1; s <= 8; s++) {
        auto r = atqc::hex_census_check({HexScaling::kApothem, s});
        EXPECT_TRUE(r.ok) << r.message;
        EXPECT_NEAR(r.predicted_faces, s * s, 1e-9);
    }
    for (int s = 3; s <= 8; s += 3) {
        auto r = atqc::hex_census_check({HexScaling::kEdge, s});
        EXPECT_TRUE(r.ok) << r.message;
    }
    EXPECT_NEAR(atqc::hex_census_check({HexScaling::kEdge, 6}).predicted_faces, 12, 1e-9);
    EXPECT_NEAR(atqc::hex_census_check({HexScaling::kEdge, 3}).predicted_dual_faces, 6, 1e-9);
    auto bad = atqc::hex_census_check({HexScaling::kEdge, 4});
    EXPECT_FALSE(bad.integral);
    EXPECT_FALSE(bad.ok);
}

TEST(Dual, SwapsRolesAndIsAnInvolution) {
    SurfaceComplex hex = atqc::build_hex_torus({HexScaling::kApothem, 2});
    SurfaceComplex d = atqc::dual_complex(hex);
    EXPECT_EQ(d.num_faces(), 8);
    EXPECT_EQ(d.num_vertices(), 4);
    EXPECT_EQ(d.num_edges(), 12);
    expect_regular(d, 3, 6);

    SurfaceComplex sq = atqc::dual_complex(atqc::build_square_torus({3}));
    EXPECT_EQ(sq.num_vertices(), 9);
    EXPECT_EQ(sq.num_edges(), 18);
    EXPECT_EQ(sq.num_faces(), 9);

    for (const SurfaceComplex &c :
         {atqc::build_square_torus({2}), atqc::build_square_torus({4}), hex,
          atqc::build_hex_torus({HexScaling::kEdge, 3}), atqc::build_hex_torus({HexScaling::kApothem, 1})}) {
        SurfaceComplex dd = atqc::dual_complex(atqc::dual_complex(c));
        EXPECT_EQ(dd.num_edges(), c.num_edges());
        EXPECT_EQ(dd.genus(), c.genus());
        EXPECT_TRUE(dd.same_structure(c)) << c.label();
        EXPECT_EQ(dd.label(), c.label());
    }
}

TEST(Dual, EdgesJoinTheFacesTheyBorder) {
    SurfaceComplex c = atqc::build_hex_torus({HexScaling::kApothem, 3});
    SurfaceComplex d = atqc::dual_complex(c);
    for (int e = 0; e < c.num_edges(); e++) {
        auto [f1, f2] = c.edge_faces(e);
        auto ends = d.edge(e);
        EXPECT_EQ(std::minmax(ends.a, ends.b), std::minmax(f1, f2));
    }
}

TEST(ComplexIo, RoundTrip) {
    for (const SurfaceComplex &c :
         {atqc::build_square_torus({3}), atqc::build_hex_torus({HexScaling::kApothem, 2}),
          atqc::dual_complex(atqc::build_hex_torus({HexScaling::kEdge, 6}))}) {
        std::string text = atqc::save_complex_string(c);
        SurfaceComplex back = atqc::load_complex_string(text);
        EXPECT_TRUE(back.same_structure(c)) << c.label();
        EXPECT_EQ(back.label(), c.label());
        EXPECT_EQ(atqc::save_complex_string(back), text);
    }
}

TEST(ComplexIo, SparseIdsAreRelabelled) {
    const char *text = R"({"genus": 1, "label": "t", "vertices": [10],
        "edges": [{"id": 7, "ends": [10, 10]}, {"id": 3, "ends": [10, 10]}],
        "faces": [{"id": 5, "edge_cycle": [7, 3, 7, 3]}]})";
    SurfaceComplex c = atqc::load_complex_string(text);
    EXPECT_EQ(c.num_vertices(), 1);
    EXPECT_EQ(c.num_edges(), 2);
    EXPECT_EQ(c.euler_characteristic(), 0);
}

std::string square_json_with(const std::function<void(nlohmann::json &)> &mutate) {
    nlohmann::json j = nlohmann::json::parse(atqc::save_complex_string(atqc::build_square_torus({3})));
    mutate(j);
    return j.dump();
}

atqc::ErrorKind load_error(const std::string &text, std::string *message = nullptr) {
    try {
        atqc::load_complex_string(text);
    } catch (const atqc::Error &e) {
        if (message) {
            *message = e.what();
        }
        return e.kind();
    }
    ADD_FAILURE() << "load succeeded";
    return atqc::ErrorKind::kIo;
}

TEST(ComplexIo, RejectsBrokenInput) {
    std::string msg;
    EXPECT_EQ(load_error("{not json"), atqc::ErrorKind::kInvalidInput);
    EXPECT_EQ(load_error(square_json_with([](auto &j) { j["extra"] = 1; })), atqc::ErrorKind::kInvalidInput);
    EXPECT_EQ(load_error(square_json_with([](auto &j) { j.erase("label"); })), atqc::ErrorKind::kInvalidInput);
    EXPECT_EQ(load_error(square_json_with([](auto &j) { j["edges"][0]["ends"][0] = 99; })),
              atqc::ErrorKind::kIntegrity);
    EXPECT_EQ(load_error(square_json_with([](auto &j) { j["faces"][0]["edge_cycle"][0] = 99; })),
              atqc::ErrorKind::kIntegrity);
    EXPECT_EQ(load_error(square_json_with([](auto &j) { j["genus"] = 2; }), &msg), atqc::ErrorKind::kIntegrity);
    EXPECT_NE(msg.find("Euler characteristic"), std::string::npos);

    // Dropping one slot from a face leaves that edge with a single face slot.
    EXPECT_EQ(load_error(square_json_with([](auto &j) { j["faces"][0]["edge_cycle"].erase(0); }), &msg),
              atqc::ErrorKind::kIntegrity);
    EXPECT_NE(msg.find("exactly two face slots"), std::string::npos);
}

TEST(ComplexIo, IngestedGenusTwo) {
    SurfaceComplex c = atqc::load_complex_file(ATQC_DATA_DIR "/tessellation_8_3_genus2.json");
    EXPECT_EQ(c.num_vertices(), 16);
    EXPECT_EQ(c.num_edges(), 24);
    EXPECT_EQ(c.num_faces(), 6);
    EXPECT_EQ(c.euler_characteristic(), -2);
    EXPECT_EQ(c.genus(), 2);
    expect_regular(c, 8, 3);
    EXPECT_THROW(atqc::load_complex_file("/nonexistent/complex.json"), atqc::Error);
}

}  // namespace
