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

#include "atqc/torus_builder.h"

#include <cmath>
#include <numbers>
#include <utility>

#include "atqc/error.h"

namespace atqc {

namespace {

int floor_div(int x, int y) {
    int q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) {
        q--;
    }
    return q;
}

int floor_mod(int x, int y) {
    return x - floor_div(x, y) * y;
}

// Quotient of the triangular lattice Z a1 + Z a2 (|a1| = |a2|, 60 degrees apart)
// by the sublattice spanned by two integer vectors, kept in Hermite normal form
// {(a, b), (0, d)} so that every coset has a unique representative.
class LatticeQuotient {
   public:
    LatticeQuotient(std::pair<int, int> u, std::pair<int, int> v) {
        while (v.first != 0) {
            int q = u.first / v.first;
            u = {u.first - q * v.first, u.second - q * v.second};
            std::swap(u, v);
        }
        if (u.first < 0) {
            u = {-u.first, -u.second};
        }
        if (v.second < 0) {
            v = {0, -v.second};
        }
        a_ = u.first;
        b_ = u.second;
        d_ = v.second;
        if (a_ == 0 || d_ == 0) {
            throw_invalid("degenerate torus lattice");
        }
    }

    int size() const {
        return a_ * d_;
    }

    int index(int m, int n) const {
        int k = floor_div(m, a_);
        m -= k * a_;
        n -= k * b_;
        return m * d_ + floor_mod(n, d_);
    }

   private:
    int a_;
    int b_;
    int d_;
};

// Honeycomb on the quotient. Each lattice point c is a hexagon centre and owns
// two vertices: T(c) at the top of hexagon c and B(c) at its bottom. T(c) has
// three neighbours B(c+a2), B(c+a2-a1), B(c+2a2-a1), giving edges 3c+0..3c+2.
SurfaceComplex build_honeycomb(const LatticeQuotient &quotient, const std::string &label) {
    const int cells = quotient.size();
    auto top = [&](int m, int n) { return 2 * quotient.index(m, n); };
    auto bottom = [&](int m, int n) { return 2 * quotient.index(m, n) + 1; };
    auto edge = [&](int m, int n, int type) { return 3 * quotient.index(m, n) + type; };

    std::vector<EdgeEnds> edges(static_cast<size_t>(3 * cells));
    std::vector<std::vector<int>> faces(static_cast<size_t>(cells));
    std::vector<bool> seen(static_cast<size_t>(cells), false);
    // Enumerate representatives by scanning a box large enough to hit every coset.
    for (int m = 0; m < cells; m++) {
        for (int n = 0; n < cells; n++) {
            int c = quotient.index(m, n);
            if (seen[static_cast<size_t>(c)]) {
                continue;
            }
            seen[static_cast<size_t>(c)] = true;
            edges[static_cast<size_t>(3 * c + 0)] = {top(m, n), bottom(m, n + 1)};
            edges[static_cast<size_t>(3 * c + 1)] = {top(m, n), bottom(m - 1, n + 1)};
            edges[static_cast<size_t>(3 * c + 2)] = {top(m, n), bottom(m - 1, n + 2)};
            // Boundary of hexagon c, counter-clockwise from its upper-right vertex.
            faces[static_cast<size_t>(c)] = {
                edge(m, n, 0),          // B(c+a2)    - T(c)
                edge(m, n, 1),          // T(c)       - B(c+a2-a1)
                edge(m, n - 1, 2),      // B(c+a2-a1) - T(c-a2)
                edge(m, n - 1, 0),      // T(c-a2)    - B(c)
                edge(m + 1, n - 1, 1),  // B(c)       - T(c+a1-a2)
                edge(m + 1, n - 1, 2),  // T(c+a1-a2) - B(c+a2)
            };
        }
    }
    return SurfaceComplex(1, label, 2 * cells, std::move(edges), std::move(faces));
}

LatticeQuotient hex_lattice(const HexTorusSpec &spec) {
    if (spec.variant == HexScaling::kApothem) {
        if (spec.scale < 1) {
            throw_invalid("apothem-scaled hexagonal torus needs xi >= 1, got " + std::to_string(spec.scale));
        }
        // Side 2*xi*a = xi hexagon-centre spacings along a1 and a2.
        return LatticeQuotient({spec.scale, 0}, {0, spec.scale});
    }
    if (spec.scale < 1) {
        throw_invalid("edge-scaled hexagonal torus needs lambda >= 1, got " + std::to_string(spec.scale));
    }
    if (spec.scale % 3 != 0) {
        throw_invalid(
            "edge-scaled hexagonal torus with lambda = " + std::to_string(spec.scale) +
            ": n_f = lambda^2/3 and n_f* = 2 lambda^2/3 are integers only if 3 divides lambda");
    }
    // Side lambda*l runs along a1 + a2 (length 3l per step); the second side is
    // that direction rotated by 60 degrees, 2a2 - a1.
    int m = spec.scale / 3;
    return LatticeQuotient({m, m}, {-m, 2 * m});
}

}  // namespace

std::string describe(const HexTorusSpec &spec) {
    return spec.variant == HexScaling::kApothem ? "hex-apothem xi=" + std::to_string(spec.scale)
                                                : "hex-edge lambda=" + std::to_string(spec.scale);
}

SurfaceComplex build_square_torus(const SquareTorusSpec &spec) {
    const int l = spec.side;
    if (l < 2) {
        throw_invalid("square torus needs side l >= 2, got " + std::to_string(l));
    }
    auto vertex = [l](int x, int y) { return ((y + l) % l) * l + (x + l) % l; };
    auto horizontal = [&](int x, int y) { return vertex(x, y); };
    auto vertical = [&](int x, int y) { return l * l + vertex(x, y); };

    std::vector<EdgeEnds> edges(static_cast<size_t>(2 * l * l));
    std::vector<std::vector<int>> faces;
    faces.reserve(static_cast<size_t>(l * l));
    for (int y = 0; y < l; y++) {
        for (int x = 0; x < l; x++) {
            edges[static_cast<size_t>(horizontal(x, y))] = {vertex(x, y), vertex(x + 1, y)};
            edges[static_cast<size_t>(vertical(x, y))] = {vertex(x, y), vertex(x, y + 1)};
            faces.push_back({horizontal(x, y), vertical(x + 1, y), horizontal(x, y + 1), vertical(x, y)});
        }
    }
    return SurfaceComplex(1, "square torus l=" + std::to_string(l), l * l, std::move(edges), std::move(faces));
}

SurfaceComplex build_hex_torus(const HexTorusSpec &spec) {
    return build_honeycomb(hex_lattice(spec), describe(spec));
}

HexCensusReport hex_census_check(const HexTorusSpec &spec) {
    const double sqrt3 = std::sqrt(3.0);
    const double l = 1.0;
    const double apothem = l * sqrt3 / 2;
    const double beta = std::numbers::pi / 3;

    HexCensusReport report;
    double side = spec.variant == HexScaling::kApothem ? 2 * spec.scale * apothem : spec.scale * l;
    report.height = side * std::sin(beta);
    report.area_region = side * report.height;
    report.area_hexagon = 3 * l * l * sqrt3 / 2;
    report.area_triangle = sqrt3 / 4 * (2 * apothem) * (2 * apothem);
    report.predicted_faces = report.area_region / report.area_hexagon;
    report.predicted_dual_faces = report.area_region / report.area_triangle;

    auto near_integer = [](double x) { return std::abs(x - std::round(x)) < 1e-9; };
    report.integral = spec.scale >= 1 && near_integer(report.predicted_faces) &&
                      near_integer(report.predicted_dual_faces);
    if (!report.integral) {
        report.message = describe(spec) + ": area ratios " + std::to_string(report.predicted_faces) + " and " +
                         std::to_string(report.predicted_dual_faces) + " are not both integers";
        return report;
    }

    SurfaceComplex c = build_hex_torus(spec);
    report.built_faces = c.num_faces();
    report.built_vertices = c.num_vertices();
    report.built_edges = c.num_edges();
    long predicted_faces = std::lround(report.predicted_faces);
    long predicted_dual = std::lround(report.predicted_dual_faces);
    report.ok = predicted_faces == report.built_faces && predicted_dual == report.built_vertices &&
                3 * predicted_faces == report.built_edges;
    report.message = report.ok ? describe(spec) + ": area ratios match the built complex"
                               : describe(spec) + ": construction bug, area ratios predict " +
                                     std::to_string(predicted_faces) + " faces / " + std::to_string(predicted_dual) +
                                     " vertices but the complex has " + std::to_string(report.built_faces) + " / " +
                                     std::to_string(report.built_vertices);
    return report;
}

}  // namespace atqc
