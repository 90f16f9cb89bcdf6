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

#include "atqc/catalog.h"

#include <cstdio>
#include <ostream>

#include "atqc/error.h"

namespace atqc {

namespace {

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

std::string raw(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string linear_text(const LinearInP &f) {
    std::string out;
    if (f.a != 0) {
        out = (f.a == 1 ? "" : std::to_string(f.a)) + "p";
    }
    if (f.b != 0 || f.a == 0) {
        if (!out.empty()) {
            out += f.b < 0 ? "-" : "+";
            out += std::to_string(f.b < 0 ? -f.b : f.b);
        } else {
            out = std::to_string(f.b);
        }
    }
    return out;
}

std::string formula_text(const LinearInP &numerator, const LinearInP &denominator) {
    std::string out;
    if (numerator.a != 0 && numerator.b != 0) {
        out = "(" + linear_text(numerator) + ")";
    } else if (!(numerator.a == 0 && numerator.b == 1)) {
        out = linear_text(numerator);
    }
    out += "(g-1)";
    if (!(denominator.a == 0 && denominator.b == 1)) {
        out += "/(" + linear_text(denominator) + ")";
    }
    return out;
}

FamilyRow fixed_row(int p, int q, int64_t faces, int64_t dual_faces, int64_t length) {
    FamilyRow row;
    row.q = q;
    row.fixed_p = p;
    row.n_f = {0, faces};
    row.n_f_star = {0, dual_faces};
    row.n = {0, length};
    return row;
}

FamilyRow family_row(int q, LinearInP faces, LinearInP dual_faces, LinearInP length, LinearInP denominator) {
    return FamilyRow{q, std::nullopt, faces, dual_faces, length, denominator};
}

}  // namespace

std::string_view exactness_name(Exactness e) {
    return e == Exactness::kExact ? "exact" : "bound";
}

CodeParams family_params(const SchlafliPair &pair, int g) {
    if (g < 2) {
        throw_invalid("genus " + std::to_string(g) + " is below 2; hyperbolic parameters need g >= 2");
    }
    TessellationCensus c = census(pair, g);
    if (!c.feasible) {
        std::string failing = !c.faces.is_integer()        ? "n_f = " + c.faces.str()
                              : !c.dual_faces.is_integer() ? "n_f* = " + c.dual_faces.str()
                                                           : "n = " + c.edges.str();
        throw_invalid(pair.str() + " at g = " + std::to_string(g) + " is not realizable: " + failing +
                      " is not a positive integer");
    }
    DistanceBounds bounds = distance_bounds(pair, g);
    CodeParams out;
    out.pair = pair;
    out.g = g;
    out.n = static_cast<int>(c.edges.num());
    out.k = 2 * g;
    out.d_x = bounds.d_x;
    out.d_z = bounds.d_z;
    out.exactness = Exactness::kBound;
    out.rate = Rational(out.k, out.n);
    out.n_f = c.faces;
    out.n_f_star = c.dual_faces;
    return out;
}

CodeParams swap_dual(const CodeParams &params) {
    CodeParams out = params;
    out.pair = params.pair.dual();
    out.d_x = params.d_z;
    out.d_z = params.d_x;
    out.n_f = params.n_f_star;
    out.n_f_star = params.n_f;
    return out;
}

std::string FamilyRow::name() const {
    return "{" + (fixed_p ? std::to_string(*fixed_p) : std::string("p")) + "," + std::to_string(q) + "}";
}

Rational FamilyRow::faces(int p, int g) const {
    return n_f.at(p) * Rational(g - 1) / denominator.at(p);
}

Rational FamilyRow::dual_faces(int p, int g) const {
    return n_f_star.at(p) * Rational(g - 1) / denominator.at(p);
}

Rational FamilyRow::length(int p, int g) const {
    return n.at(p) * Rational(g - 1) / denominator.at(p);
}

std::vector<FamilyRow> table1_families() {
    return {
        family_row(3, {0, 12}, {4, 0}, {6, 0}, {1, -6}),
        family_row(4, {0, 8}, {2, 0}, {4, 0}, {1, -4}),
        family_row(5, {0, 20}, {4, 0}, {10, 0}, {3, -10}),
        family_row(6, {0, 6}, {1, 0}, {3, 0}, {1, -3}),
    };
}

std::vector<FamilyRow> table2_rows() {
    return {
        fixed_row(7, 3, 12, 28, 42), fixed_row(8, 3, 6, 16, 24), fixed_row(9, 3, 4, 12, 18),
        fixed_row(10, 3, 3, 10, 15), fixed_row(12, 3, 2, 8, 12), fixed_row(5, 4, 8, 10, 20),
        fixed_row(6, 4, 4, 6, 12),   fixed_row(8, 4, 2, 4, 8),   fixed_row(10, 5, 1, 2, 5),
    };
}

Rational asymptotic_rate(const FamilyRow &row) {
    // k / n = 2g * den(p) / (n(p) * (g - 1)) -> 2 den(p) / n(p) as g grows.
    if (row.fixed_p) {
        return Rational(2) * row.denominator.at(*row.fixed_p) / row.n.at(*row.fixed_p);
    }
    // Both are linear in p, so the p -> infinity limit is the ratio of leading terms.
    if (row.n.a == 0) {
        throw_invalid("family " + row.name() + " has no p-dependence in n");
    }
    return Rational(2 * row.denominator.a, row.n.a);
}

std::optional<int> genus_reaching(const SchlafliPair &pair, int d_x, int d_z, int g_max) {
    for (int g = 2; g <= g_max; g++) {
        DistanceBounds b = distance_bounds(pair, g);
        if (b.d_x >= d_x && b.d_z >= d_z) {
            return g;
        }
    }
    return std::nullopt;
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

void emit_tables(std::ostream &out) {
    auto line = [&out](std::initializer_list<std::string> fields) {
        bool first = true;
        for (const auto &f : fields) {
            out << (first ? "" : ",") << csv_field(f);
            first = false;
        }
        out << "\r\n";
    };
    line({"table", "pair", "n_f", "n_f_star", "n", "k", "d_z_bound", "d_x_bound", "rate", "l_pq", "l_qp"});
    for (const auto &row : table1_families()) {
        line({"1", row.name(), formula_text(row.n_f, row.denominator), formula_text(row.n_f_star, row.denominator),
              formula_text(row.n, row.denominator), "2g", "", "", asymptotic_rate(row).str(), "", ""});
    }
    for (const auto &row : table2_rows()) {
        SchlafliPair pair{*row.fixed_p, row.q};
        std::string l_pq = fixed(edge_length(pair), 4);
        std::string l_qp = fixed(edge_length(pair.dual()), 4);
        line({"2", row.name(), formula_text(row.n_f, row.denominator), formula_text(row.n_f_star, row.denominator),
              formula_text(row.n, row.denominator), "2g", "ceil(d_h/" + l_qp + ")", "ceil(d_h/" + l_pq + ")",
              asymptotic_rate(row).str(), l_pq, l_qp});
    }
    if (!out) {
        throw_io("failed writing table CSV");
    }
}

std::vector<CurvePoint> curve_points(const std::vector<SchlafliPair> &pairs, int g_min, int g_max) {
    if (g_min < 2 || g_max > 64 || g_min > g_max) {
        throw_invalid("genus range [" + std::to_string(g_min) + ", " + std::to_string(g_max) +
                      "] must lie within [2, 64]");
    }
    std::vector<CurvePoint> out;
    for (const auto &pair : pairs) {
        for (int g = g_min; g <= g_max; g++) {
            CodeParams params = family_params(pair, g);
            DistanceBounds bounds = distance_bounds(pair, g);
            out.push_back({pair, g, params.n, params.k, fundamental_diameter(g), bounds.raw_x, bounds.raw_z,
                           bounds.d_x, bounds.d_z, params.rate});
        }
    }
    return out;
}

void emit_curves(const std::vector<SchlafliPair> &pairs, int g_min, int g_max, std::ostream &out) {
    std::vector<CurvePoint> points = curve_points(pairs, g_min, g_max);
    out << "pair,g,n,k,d_h,raw_x,raw_z,raw_diff,d_x,d_z,diff,rate,rate_value\r\n";
    for (const auto &pt : points) {
        out << csv_field(pt.pair.str()) << ',' << pt.g << ',' << pt.n << ',' << pt.k << ',' << raw(pt.d_h) << ','
            << raw(pt.raw_x) << ',' << raw(pt.raw_z) << ',' << raw(pt.raw_x - pt.raw_z) << ',' << pt.d_x << ','
            << pt.d_z << ',' << (pt.d_x - pt.d_z) << ',' << pt.rate.str() << ',' << raw(pt.rate.to_double())
            << "\r\n";
    }
    if (!out) {
        throw_io("failed writing curve CSV");
    }
}

}  // namespace atqc
