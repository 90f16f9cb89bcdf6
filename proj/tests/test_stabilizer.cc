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

#include <sstream>

#include "atqc/error.h"
#include "atqc/homology.h"
#include "atqc/stabilizer.h"
#include "atqc/torus_builder.h"
#include "json.hpp"

namespace {

using atqc::BinaryMatrix;
using atqc::CssCode;
using atqc::HexScaling;
using atqc::SurfaceComplex;

std::vector<SurfaceComplex> corpus() {
    std::vector<SurfaceComplex> out;
    for (int l = 2; l <= 5; l++) {
        out.push_back(atqc::build_square_torus({l}));
    }
    for (int xi = 2; xi <= 4; xi++) {
        out.push_back(atqc::build_hex_torus({HexScaling::kApothem, xi}));
    }
    out.push_back(atqc::build_hex_torus({HexScaling::kEdge, 3}));
    out.push_back(atqc::build_hex_torus({HexScaling::kEdge, 6}));
    out.push_back(atqc::load_complex_file(ATQC_DATA_DIR "/tessellation_8_3_genus2.json"));
    return out;
}

TEST(BuildCss, Parameters) {
    CssCode sq = atqc::build_css(atqc::build_square_torus({3}));
    EXPECT_EQ(sq.n, 18);
    EXPECT_EQ(sq.k, 2);
    CssCode hex = atqc::build_css(atqc::build_hex_torus({HexScaling::kApothem, 2}));
    EXPECT_EQ(hex.n, 12);
    EXPECT_EQ(hex.k, 2);
    CssCode h83 = atqc::build_css(atqc::load_complex_file(ATQC_DATA_DIR "/tessellation_8_3_genus2.json"));
    EXPECT_EQ(h83.n, 24);
    EXPECT_EQ(h83.k, 4);
    EXPECT_TRUE(sq.warnings.empty());
}

TEST(BuildCss, RolesFollowFacesAndVertices) {
    SurfaceComplex c = atqc::build_square_torus({2});
    CssCode code = atqc::build_css(c);
    auto chain = atqc::boundary_matrices(c);
    EXPECT_EQ(code.hx, chain.d2.transposed());
    EXPECT_EQ(code.hz, chain.d1);
    EXPECT_EQ(code.hx.rows(), 4u);
    EXPECT_EQ(code.hz.rows(), 4u);
}

TEST(BuildCss, DegenerateFacesAreAnnotated) {
    CssCode code = atqc::build_css(atqc::build_hex_torus({HexScaling::kApothem, 1}));
    EXPECT_EQ(code.k, 2);
    EXPECT_EQ(code.hx.rows(), 1u);
    EXPECT_TRUE(code.hx.is_zero());
    ASSERT_EQ(code.warnings.size(), 1u);
}

TEST(Verify, CorpusPasses) {
    for (const auto &c : corpus()) {
        CssCode code = atqc::build_css(c);
        auto report = atqc::verify_stabilizers(code);
        EXPECT_EQ(report.independent_generators, static_cast<size_t>(c.num_vertices() + c.num_faces() - 2));
        EXPECT_EQ(report.k, 2 * c.genus());
        EXPECT_TRUE((code.hx * code.hz.transposed()).is_zero());
        for (size_t e = 0; e < static_cast<size_t>(code.n); e++) {
            EXPECT_EQ(code.hx.column_weight(e), 2u);
            EXPECT_EQ(code.hz.column_weight(e) % 2, 0u);
        }
    }
}

TEST(Verify, SmallCounts) {
    auto report = atqc::verify_stabilizers(atqc::build_css(atqc::build_square_torus({2})));
    EXPECT_EQ(report.independent_generators, 6u);
    EXPECT_EQ(report.k, 2);
    report = atqc::verify_stabilizers(atqc::build_css(atqc::build_hex_torus({HexScaling::kApothem, 2})));
    EXPECT_EQ(report.independent_generators, 10u);
    EXPECT_EQ(report.k, 2);
}

TEST(Verify, DeletedFaceSlotBreaksCommutation) {
    CssCode code = atqc::build_css(atqc::build_square_torus({3}));
    // Drop one edge from face 0's operator, as if that face slot were deleted.
    int e = code.hx.row(0).indices().front();
    code.hx.flip(0, static_cast<size_t>(e));
    try {
        atqc::verify_stabilizers(code);
        FAIL() << "verification passed";
    } catch (const atqc::Error &err) {
        EXPECT_EQ(err.kind(), atqc::ErrorKind::kIntegrity);
        EXPECT_NE(std::string(err.what()).find("face row 0"), std::string::npos) << err.what();
    }
}

TEST(Logicals, PairingIsIdentity) {
    for (const auto &c : corpus()) {
        CssCode code = atqc::build_css(c);
        ASSERT_EQ(code.logical_x.size(), static_cast<size_t>(code.k));
        ASSERT_EQ(code.logical_z.size(), static_cast<size_t>(code.k));
        EXPECT_EQ(atqc::pairing_matrix(code.logical_x, code.logical_z), BinaryMatrix::identity(code.k)) << c.label();
        auto basis = atqc::cocycle_basis(c);
        for (const auto &x : code.logical_x) {
            EXPECT_TRUE(code.hz.apply(x).none());
            EXPECT_FALSE(code.hx.in_row_space(x));
            EXPECT_TRUE(atqc::homology_signature(c, x, basis).any());
        }
        for (const auto &z : code.logical_z) {
            EXPECT_TRUE(code.hx.apply(z).none());
            EXPECT_FALSE(code.hz.in_row_space(z));
        }
        // Each set is independent modulo the stabilizers.
        std::vector<atqc::BitVector> rows = code.hx.row_vectors();
        rows.insert(rows.end(), code.logical_x.begin(), code.logical_x.end());
        EXPECT_EQ(BinaryMatrix::from_rows(code.hx.cols(), rows).rank(), code.hx.rank() + code.k);
    }
}

TEST(Logicals, SquareTorusHasWeightThreeLoop) {
    CssCode code = atqc::build_css(atqc::build_square_torus({3}));
    bool found = false;
    for (const auto &x : code.logical_x) {
        found = found || x.weight() == 3;
    }
    EXPECT_TRUE(found);
}

TEST(DualCovariance, ChecksSwap) {
    for (const auto &c : corpus()) {
        CssCode a = atqc::build_css(c);
        CssCode b = atqc::build_css(atqc::dual_complex(c));
        EXPECT_EQ(a.hx, b.hz) << c.label();
        EXPECT_EQ(a.hz, b.hx) << c.label();
    }
}

TEST(Export, AlistLayout) {
    CssCode code = atqc::build_css(atqc::build_square_torus({2}));
    std::ostringstream out;
    atqc::export_checks(code, atqc::CheckFormat::kAlist, atqc::CheckMatrix::kHx, out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "8 4");
    std::getline(in, line);
    EXPECT_EQ(line, "2 4");
    std::getline(in, line);
    EXPECT_EQ(line, "2 2 2 2 2 2 2 2");
    std::getline(in, line);
    EXPECT_EQ(line, "4 4 4 4");
    std::istringstream again(out.str());
    EXPECT_EQ(atqc::read_alist(again), code.hx);
}

TEST(Export, AlistPadsRaggedRows) {
    BinaryMatrix m(2, 3);
    m.set(0, 0);
    m.set(0, 2);
    m.set(1, 1);
    std::ostringstream out;
    atqc::write_alist(m, out);
    EXPECT_EQ(out.str(), "3 2\n1 2\n1 1 1\n2 1\n1\n2\n1\n1 3\n2 0\n");
    std::istringstream in(out.str());
    EXPECT_EQ(atqc::read_alist(in), m);
}

TEST(Export, DenseTextRoundTrip) {
    CssCode code = atqc::build_css(atqc::build_hex_torus({HexScaling::kApothem, 3}));
    std::ostringstream out;
    atqc::export_checks(code, atqc::CheckFormat::kDenseText, atqc::CheckMatrix::kHz, out);
    std::istringstream in(out.str());
    EXPECT_EQ(atqc::read_dense_text(in), code.hz);
}

TEST(Export, JsonCarriesMetadata) {
    CssCode code = atqc::build_css(atqc::build_square_torus({3}));
    std::ostringstream out;
    atqc::export_checks(code, atqc::CheckFormat::kJson, atqc::CheckMatrix::kHz, out);
    auto j = nlohmann::json::parse(out.str());
    EXPECT_EQ(j["n"], 18);
    EXPECT_EQ(j["k"], 2);
    EXPECT_EQ(j["genus"], 1);
    EXPECT_EQ(j["label"], "square torus l=3");
    std::istringstream in(out.str());
    CssCode back = atqc::read_code_json(in);
    EXPECT_EQ(back.hx, code.hx);
    EXPECT_EQ(back.hz, code.hz);
    EXPECT_EQ(back.k, 2);
}

TEST(Export, MalformedAlistIsRejected) {
    std::istringstream truncated("3 2\n1 2\n1 1 1\n");
    EXPECT_THROW(atqc::read_alist(truncated), atqc::Error);
    std::istringstream inconsistent("3 2\n1 2\n1 1 1\n2 1\n1\n2\n1\n1 2\n2 0\n");
    EXPECT_THROW(atqc::read_alist(inconsistent), atqc::Error);
}

}  // namespace
