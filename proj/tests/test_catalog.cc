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

#include <cmath>
#include <optional>
#include <sstream>

#include "atqc/catalog.h"
#include "atqc/error.h"
#include "atqc/geometry.h"
#include "oracles.h"

namespace {

using atqc::CodeParams;
using atqc::Rational;
using atqc::SchlafliPair;

TEST(FamilyParams, PrintedInstances) {
    CodeParams p = atqc::family_params({7, 3}, 2);
    EXPECT_EQ(p.n, 42);
    EXPECT_EQ(p.k, 4);
    EXPECT_EQ(p.d_z, 3);
    EXPECT_EQ(p.d_x, 6);
    EXPECT_EQ(p.exactness, atqc::Exactness::kBound);
    p = atqc::family_params({5, 4}, 4);
    EXPECT_EQ(p.n, 60);
    EXPECT_EQ(p.k, 8);
    EXPECT_EQ(p.d_x, 5);
    EXPECT_EQ(p.d_z, 4);
    p = atqc::family_params({8, 4}, 16);
    EXPECT_EQ(p.n, 120);
    EXPECT_EQ(p.k, 32);
    EXPECT_EQ(p.d_x, 5);
    EXPECT_EQ(p.d_z, 4);
    EXPECT_EQ(atqc::family_params({10, 5}, 3).n, 10);
    p = atqc::family_params({8, 3}, 2);
    EXPECT_EQ(p.n, 24);
    EXPECT_EQ(p.rate, Rational(1, 6));
}

TEST(FamilyParams, Rejections) {
    EXPECT_THROW(atqc::family_params({6, 3}, 2), atqc::Error);
    EXPECT_THROW(atqc::family_params({7, 3}, 1), atqc::Error);
    try {
        atqc::family_params({7, 4}, 2);
        FAIL();
    } catch (const atqc::Error &e) {
        EXPECT_NE(std::string(e.what()).find("n_f = 8/3"), std::string::npos) << e.what();
    }
}

TEST(SwapDual, ExchangesDistancesAndIsInvolution) {
    CodeParams p = atqc::family_params({7, 3}, 2);
    CodeParams s = atqc::swap_dual(p);
    EXPECT_EQ(s.pair, (SchlafliPair{3, 7}));
    EXPECT_EQ(s.d_x, 3);
    EXPECT_EQ(s.d_z, 6);
    EXPECT_GT(s.d_z, s.d_x);
    EXPECT_EQ(s.n, p.n);
    EXPECT_EQ(s.k, p.k);
    EXPECT_EQ(s.n_f, p.n_f_star);
    CodeParams back = atqc::swap_dual(s);
    EXPECT_EQ(back.pair, p.pair);
    EXPECT_EQ(back.d_x, p.d_x);
    EXPECT_EQ(back.d_z, p.d_z);
    EXPECT_EQ(back.n_f, p.n_f);
}

TEST(Families, FamilyFormulasMatchEulerOracle) {
    for (const auto &row : atqc::table1_families()) {
        for (int p = 3; p <= 40; p++) {
            if ((p - 2) * (row.q - 2) <= 4) {
                continue;
            }
            for (int g = 2; g <= 10; g++) {
                Rational faces = atqc::oracle::faces_from_euler(p, row.q, g);
                EXPECT_EQ(row.faces(p, g), faces) << row.name() << " p=" << p << " g=" << g;
                EXPECT_EQ(row.dual_faces(p, g), faces * Rational(p, row.q));
                EXPECT_EQ(row.length(p, g), faces * Rational(p, 2));
            }
        }
    }
}

TEST(Families, AsymptoticRates) {
    const Rational expected[] = {Rational(1, 3), Rational(1, 2), Rational(3, 5), Rational(2, 3)};
    auto rows = atqc::table1_families();
    ASSERT_EQ(rows.size(), 4u);
    for (size_t i = 0; i < rows.size(); i++) {
        EXPECT_EQ(atqc::asymptotic_rate(rows[i]), expected[i]);
    }
}

TEST(Families, FixedPairRowsAndRates) {
    const Rational expected[] = {Rational(1, 21), Rational(1, 12), Rational(1, 9), Rational(2, 15), Rational(1, 6),
                                 Rational(1, 10), Rational(1, 6),  Rational(1, 4), Rational(2, 5)};
    auto rows = atqc::table2_rows();
    ASSERT_EQ(rows.size(), 9u);
    for (size_t i = 0; i < rows.size(); i++) {
        const auto &row = rows[i];
        int p = *row.fixed_p;
        EXPECT_EQ(atqc::asymptotic_rate(row), expected[i]) << row.name();
        for (int g = 2; g <= 10; g++) {
            auto params = atqc::family_params({p, row.q}, g);
            EXPECT_EQ(Rational(params.n), row.length(p, g));
            EXPECT_EQ(params.n_f, row.faces(p, g));
            EXPECT_EQ(params.n_f_star, row.dual_faces(p, g));
            EXPECT_EQ(params.k, 2 * g);
        }
        // k/n decreases towards 2/c.
        Rational r2 = atqc::family_params({p, row.q}, 2).rate;
        Rational r10 = atqc::family_params({p, row.q}, 10).rate;
        Rational r100 = atqc::family_params({p, row.q}, 100).rate;
        EXPECT_GT(r2, r10);
        EXPECT_GT(r10, r100);
        EXPECT_GT(r100, expected[i]);
    }
}

TEST(GenusReaching, MatchesOracleScan) {
    for (int p : {7, 8, 9, 10, 12}) {
        std::optional<int> expected;
        for (int g = 2; g <= 64 && !expected; g++) {
            double dh = atqc::oracle::fundamental_diameter(g);
            int dx = static_cast<int>(std::ceil(dh / atqc::oracle::edge_length(p, 3) - 1e-9));
            int dz = static_cast<int>(std::ceil(dh / atqc::oracle::edge_length(3, p) - 1e-9));
            if (dx >= 6 && dz >= 3) {
                expected = g;
            }
        }
        EXPECT_EQ(atqc::genus_reaching({p, 3}, 6, 3), expected) << p;
    }
}

TEST(GenusReaching, CaseStudyGenera) {
    // {p,3} at g = 2, 3, 4, 5 for p = 7, 8, 9, 10 gives exactly (6, 3).
    const int genus[] = {2, 3, 4, 5};
    const int ps[] = {7, 8, 9, 10};
    for (int i = 0; i < 4; i++) {
        auto params = atqc::family_params({ps[i], 3}, genus[i]);
        EXPECT_EQ(params.d_x, 6) << ps[i];
        EXPECT_EQ(params.d_z, 3) << ps[i];
    }
    // {12,3} at g = 5 falls short in d_z: d_h / l(3,12) = 1.981.
    auto twelve = atqc::family_params({12, 3}, 5);
    EXPECT_EQ(twelve.d_x, 6);
    EXPECT_EQ(twelve.d_z, 2);
}

TEST(Csv, Quoting) {
    EXPECT_EQ(atqc::csv_field("plain"), "plain");
    EXPECT_EQ(atqc::csv_field("{7,3}"), "\"{7,3}\"");
    EXPECT_EQ(atqc::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Csv, TablesHaveHeaderAndThirteenRows) {
    std::ostringstream out;
    atqc::emit_tables(out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "table,pair,n_f,n_f_star,n,k,d_z_bound,d_x_bound,rate,l_pq,l_qp\r");
    int rows = 0;
    while (std::getline(in, line)) {
        rows++;
    }
    EXPECT_EQ(rows, 13);
    EXPECT_NE(out.str().find("1,\"{p,5}\",20(g-1)/(3p-10),4p(g-1)/(3p-10),10p(g-1)/(3p-10),2g,,,3/5,,"),
              std::string::npos);
    EXPECT_NE(out.str().find("2,\"{10,5}\",(g-1),2(g-1),5(g-1),2g,"), std::string::npos);
}

TEST(Curves, RowsAndRange) {
    auto pts = atqc::curve_points({{7, 3}, {5, 4}}, 2, 10);
    ASSERT_EQ(pts.size(), 18u);
    EXPECT_EQ(pts[0].pair, (SchlafliPair{7, 3}));
    EXPECT_EQ(pts[0].d_x, 6);
    EXPECT_EQ(pts[0].d_z, 3);
    EXPECT_NEAR(pts[0].raw_x, atqc::oracle::fundamental_diameter(2) / atqc::oracle::edge_length(7, 3), 1e-12);
    EXPECT_THROW(atqc::curve_points({{7, 3}}, 1, 10), atqc::Error);
    EXPECT_THROW(atqc::curve_points({{7, 3}}, 2, 65), atqc::Error);
}

}  // namespace
