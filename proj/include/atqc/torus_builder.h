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

#ifndef ATQC_TORUS_BUILDER_H
#define ATQC_TORUS_BUILDER_H

#include <string>

#include "atqc/surface_complex.h"

// Explicit Euclidean torus cellulations: the l x l square lattice and the two
// rhombic hexagonal families.
namespace atqc {

struct SquareTorusSpec {
    int side = 0;  // l >= 2
};

enum class HexScaling {
    kApothem,  // rhombus side L = 2*xi*a (a = apothem); any xi >= 1
    kEdge,     // rhombus side L = lambda*l (l = hexagon edge); needs 3 | lambda
};

struct HexTorusSpec {
    HexScaling variant = HexScaling::kApothem;
    int scale = 0;  // xi or lambda
};

std::string describe(const HexTorusSpec &spec);

/// V = l^2, E = 2 l^2, F = l^2, all faces squares and all vertices of degree 4.
SurfaceComplex build_square_torus(const SquareTorusSpec &spec);

/// {6,3} torus. Apothem scaling gives xi^2 hexagons; edge scaling gives
/// lambda^2/3 hexagons. Throws kInvalidInput for lambda not divisible by 3.
/// xi = 1 builds a degenerate complex (its single face repeats every edge).
SurfaceComplex build_hex_torus(const HexTorusSpec &spec);

/// Area bookkeeping for a hexagonal torus (unit hexagon edge) against the
/// combinatorial counts of the built complex.
struct HexCensusReport {
    double height = 0;            // h of the rhombic fundamental region
    double area_region = 0;       // A_{P'}
    double area_hexagon = 0;      // A_P
    double area_triangle = 0;     // A_{P*}, triangle of edge 2a
    double predicted_faces = 0;   // A_{P'} / A_P
    double predicted_dual_faces = 0;  // A_{P'} / A_{P*}
    int built_faces = -1;
    int built_vertices = -1;
    int built_edges = -1;
    bool integral = false;  // both predictions are integers
    bool ok = false;        // integral and equal to the built counts
    std::string message;
};

HexCensusReport hex_census_check(const HexTorusSpec &spec);

}  // namespace atqc

#endif
