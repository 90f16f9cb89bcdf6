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

#include <bit>

#include "atqc/error.h"
#include "atqc/homology.h"
#include "atqc/torus_builder.h"
#include "oracles.h"

namespace {

using atqc::BitVector;
using atqc::HexScaling;
using atqc::SurfaceComplex;

std::vector<SurfaceComplex> corpus() {
    std::vector<SurfaceComplex> out;
    for (int l = 2; l <= 5; l++) {
        out.push_back(atqc::build_square_torus({l}));
    }
    for (int xi = 1; xi <= 4; xi++) {
        out.push_back(atqc::build_hex_torus({HexScaling::kApothem, xi}));
    }
    out.push_back(atqc::build_hex_torus({HexScaling::kEdge, 3}));
    out.push_back(atqc::build_hex_torus({HexScaling::kEdge, 6}));
    out.push_back(atqc::load_complex_file(ATQC_DATA_DIR "/tessellation_8_3_genus2.json"));
    size_t primal = out.size();
    for (size_t i = 0; i < primal; i++) {
        out.push_back(atqc::dual_complex(out[i]));
    }
    return out;
}

BitVector from_mask(uint64_t mask, int n) {
    BitVector v(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) {
        if ((mask >> i) & 1) {
            v.set(static_cast<size_t>(i));
        }
    }
    return v;
}

TEST(BoundaryMatrices, ComposeToZero) {
    for (const auto &c : corpus()) {
        auto chain = atqc::boundary_matrices(c);
        EXPECT_TRUE((chain.d1 * chain.d2).is_zero()) << c.label();
    }
}

TEST(BoundaryMatrices, SquareTorusColumnWeights) {
    auto chain = atqc::boundary_matrices(atqc::build_square_torus({3}));
    for (size_t f = 0; f < chain.d2.cols(); f++) {
        EXPECT_EQ(chain.d2.column_weight(f), 4u);
    }
    for (size_t e = 0; e < chain.d1.cols(); e++) {
        EXPECT_EQ(chain.d1.column_weight(e), 2u);
    }
}

TEST(BoundaryMatrices, DegenerateHexHasZeroD2) {
    auto chain = atqc::boundary_matrices(atqc::build_hex_torus({HexScaling::kApothem, 1}));
    EXPECT_TRUE(chain.d2.is_zero());
}

TEST(Rank, SquareTorusD2MatchesSubsetEnumeration) {
    SurfaceComplex c = atqc::build_square_torus({2});
    auto span = atqc::oracle::span_of(atqc::oracle::masks_of(c).faces);
    EXPECT_EQ(span.size(), 8u);  // 2^rank with one dependency among 4 faces
    auto chain = atqc::boundary_matrices(c);
    EXPECT_EQ(chain.d2.rank(), 3u);
    EXPECT_TRUE(chain.d2.transposed().in_row_space(chain.d2.column(2)));
}

TEST(Rank, GlobalDependencies) {
    for (const auto &c : corpus()) {
        if (c.is_degenerate()) {
            continue;
        }
        auto chain = atqc::boundary_matrices(c);
        EXPECT_EQ(chain.d2.rank(), static_cast<size_t>(c.num_faces() - 1)) << c.label();
        EXPECT_EQ(chain.d1.rank(), static_cast<size_t>(c.num_vertices() - 1)) << c.label();
    }
}

TEST(Betti1, EqualsTwiceGenus) {
    for (const auto &c : corpus()) {
        EXPECT_EQ(atqc::betti1(c), 2 * c.genus()) << c.label();
    }
    EXPECT_EQ(atqc::betti1(atqc::load_complex_file(ATQC_DATA_DIR "/tessellation_8_3_genus2.json")), 4);
}

TEST(CocycleBasis, EvenOnFacesAndInvertiblePairing) {
    for (const auto &c : corpus()) {
        auto basis = atqc::cocycle_basis(c);
        ASSERT_EQ(basis.cocycles.size(), static_cast<size_t>(2 * c.genus()));
        auto d2t = atqc::boundary_matrices(c).d2.transposed();
        for (const auto &z : basis.cocycles) {
            EXPECT_TRUE(d2t.apply(z).none()) << c.label();
        }
        auto pairing = atqc::pairing_matrix(basis.cycles, basis.cocycles);
        EXPECT_EQ(pairing.rank(), basis.cocycles.size()) << c.label();
    }
}

TEST(CocycleBasis, SquareTorusCutsAreParallelTriples) {
    auto basis = atqc::cocycle_basis(atqc::build_square_torus({3}));
    ASSERT_EQ(basis.cocycles.size(), 2u);
    for (const auto &z : basis.cocycles) {
        EXPECT_EQ(z.weight(), 3u);
    }
}

TEST(Signature, FaceBoundariesAreTrivial) {
    for (const auto &c : corpus()) {
        auto basis = atqc::cocycle_basis(c);
        auto d2 = atqc::boundary_matrices(c).d2;
        for (int f = 0; f < c.num_faces(); f++) {
            EXPECT_TRUE(atqc::homology_signature(c, d2.column(static_cast<size_t>(f)), basis).none());
        }
    }
}

TEST(Signature, HorizontalRowIsNontrivial) {
    SurfaceComplex c = atqc::build_square_torus({3});
    BitVector row(18);
    for (int x = 0; x < 3; x++) {
        row.set(static_cast<size_t>(x));  // horizontal edges of row y = 0
    }
    auto basis = atqc::cocycle_basis(c);
    BitVector sig = atqc::homology_signature(c, row, basis);
    EXPECT_TRUE(sig.any());
    BitVector shifted(18);
    for (int x = 0; x < 3; x++) {
        shifted.set(static_cast<size_t>(3 + x));
    }
    EXPECT_TRUE(atqc::homology_signature(c, row ^ shifted, basis).none());
}

TEST(Signature, RejectsNonCycles) {
    SurfaceComplex c = atqc::build_square_torus({3});
    auto basis = atqc::cocycle_basis(c);
    BitVector one(18);
    one.set(0);
    EXPECT_THROW(atqc::homology_signature(c, one, basis), atqc::Error);
}

// Exhaustive over all edge subsets: the signature vanishes exactly on sums of face boundaries.
TEST(Signature, ZeroIffBoundaryExhaustive) {
    int checked = 0;
    for (const auto &c : corpus()) {
        if (c.num_edges() > 14) {
            continue;
        }
        auto masks = atqc::oracle::masks_of(c);
        auto boundaries = atqc::oracle::span_of(masks.faces);
        auto basis = atqc::cocycle_basis(c);
        for (uint64_t v = 0; v < (uint64_t{1} << c.num_edges()); v++) {
            if (!atqc::oracle::even_against_all(v, masks.stars)) {
                continue;
            }
            bool trivial = atqc::homology_signature(c, from_mask(v, c.num_edges()), basis).none();
            EXPECT_EQ(trivial, boundaries.contains(v)) << c.label() << " mask " << v;
            checked++;
        }
    }
    EXPECT_GT(checked, 0);
}

}  // namespace
