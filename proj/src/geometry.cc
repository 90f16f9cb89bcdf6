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

#include "atqc/geometry.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "atqc/error.h"

namespace atqc {

namespace {

constexpr double kSnapTolerance = 1e-9;

void require_hyperbolic(const SchlafliPair &pair) {
    GeometryClass c = classify(pair);
    if (c != GeometryClass::kHyperbolic) {
        throw_invalid(pair.str() + " is not hyperbolic ((p-2)(q-2) = " +
                      std::to_string(pair.classification_key()) + ", " + std::string(geometry_class_name(c)) + ")");
    }
}

void require_hyperbolic_genus(int genus) {
    if (genus < 2) {
        throw_invalid("genus " + std::to_string(genus) + " is outside the hyperbolic range (g >= 2)");
    }
}

}  // namespace

std::string_view geometry_class_name(GeometryClass c) {
    switch (c) {
        case GeometryClass::kSpherical:
            return "spherical";
        case GeometryClass::kEuclidean:
            return "euclidean";
        case GeometryClass::kHyperbolic:
            return "hyperbolic";
    }
    return "unknown";
}

void validate_pair(const SchlafliPair &pair) {
    if (pair.p < 3 || pair.q < 3) {
        throw_invalid("malformed Schlafli pair " + pair.str() + ": p and q must both be >= 3");
    }
}

GeometryClass classify(const SchlafliPair &pair) {
    validate_pair(pair);
    int key = pair.classification_key();
    if (key > 4) {
        return GeometryClass::kHyperbolic;
    }
    return key == 4 ? GeometryClass::kEuclidean : GeometryClass::kSpherical;
}

double edge_length(const SchlafliPair &pair) {
    require_hyperbolic(pair);
    using std::numbers::pi;
    double c = std::cos(pi / pair.q);
    double s = std::sin(pi / pair.q);
    return std::acosh((c * c + std::cos(2 * pi / pair.p)) / (s * s));
}

double fundamental_diameter(int genus) {
    require_hyperbolic_genus(genus);
    double angle = std::numbers::pi / (4.0 * genus);
    return 2 * std::acosh(std::cos(angle) / std::sin(angle));
}

TessellationCensus census(const SchlafliPair &pair, int genus) {
    require_hyperbolic(pair);
    require_hyperbolic_genus(genus);
    int64_t p = pair.p;
    int64_t q = pair.q;
    TessellationCensus out;
    out.faces = Rational(4 * q * (genus - 1), p * q - 2 * p - 2 * q);
    out.dual_faces = out.faces * Rational(p, q);
    out.edges = out.faces * Rational(p, 2);
    auto positive_integer = [](Rational r) { return r.is_integer() && r.num() > 0; };
    out.feasible = positive_integer(out.faces) && positive_integer(out.dual_faces) && positive_integer(out.edges);
    return out;
}

int guarded_ceil(double value) {
    double nearest = std::round(value);
    if (std::abs(value - nearest) < kSnapTolerance) {
        return static_cast<int>(nearest);
    }
    return static_cast<int>(std::ceil(value));
}

DistanceBounds distance_bounds(const SchlafliPair &pair, int genus) {
    require_hyperbolic(pair);
    double diameter = fundamental_diameter(genus);
    DistanceBounds out;
    out.raw_x = diameter / edge_length(pair);
    out.raw_z = diameter / edge_length(pair.dual());
    out.d_x = std::max(1, guarded_ceil(out.raw_x));
    out.d_z = std::max(1, guarded_ceil(out.raw_z));
    return out;
}

}  // namespace atqc
