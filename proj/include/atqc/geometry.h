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

#ifndef ATQC_GEOMETRY_H
#define ATQC_GEOMETRY_H

#include <string>
#include <string_view>

#include "atqc/rational.h"

// Closed-form metric and counting formulas for regular {p,q} tessellations of
// compact orientable surfaces.
namespace atqc {

enum class GeometryClass { kSpherical, kEuclidean, kHyperbolic };

std::string_view geometry_class_name(GeometryClass c);

/// {p,q}: p-gonal faces, q faces around each vertex. Both must be >= 3.
struct SchlafliPair {
    int p = 0;
    int q = 0;

    SchlafliPair dual() const {
        return {q, p};
    }
    /// (p-2)(q-2): > 4 hyperbolic, == 4 Euclidean, < 4 spherical.
    int classification_key() const {
        return (p - 2) * (q - 2);
    }
    std::string str() const {
        return "{" + std::to_string(p) + "," + std::to_string(q) + "}";
    }
    bool operator==(const SchlafliPair &) const = default;
};

/// Throws ErrorKind::kInvalidInput unless p >= 3 and q >= 3.
void validate_pair(const SchlafliPair &pair);

GeometryClass classify(const SchlafliPair &pair);

/// Hyperbolic edge length of the {p,q} tessellation with curvature -1.
double edge_length(const SchlafliPair &pair);

/// Hyperbolic distance between opposite sides of the regular 4g-gon
/// fundamental region of the genus-g surface (g >= 2).
double fundamental_diameter(int genus);

struct TessellationCensus {
    Rational faces;       // n_f
    Rational dual_faces;  // n_f^* (= vertex count)
    Rational edges;
    bool feasible = false;  // all three are positive integers
};

/// Exact face, vertex, and edge counts of {p,q} on the genus-g surface.
TessellationCensus census(const SchlafliPair &pair, int genus);

struct DistanceBounds {
    int d_x = 0;  // ceil(d_h / l(p,q)), primal tessellation
    int d_z = 0;  // ceil(d_h / l(q,p)), dual tessellation
    double raw_x = 0;
    double raw_z = 0;
};

DistanceBounds distance_bounds(const SchlafliPair &pair, int genus);

/// Ceiling that first snaps values within 1e-9 of an integer onto it.
int guarded_ceil(double value);

}  // namespace atqc

#endif
