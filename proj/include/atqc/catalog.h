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

#ifndef ATQC_CATALOG_H
#define ATQC_CATALOG_H

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atqc/geometry.h"
#include "atqc/rational.h"

// Parameter tables, family formulas and genus curves for hyperbolic codes.
namespace atqc {

enum class Exactness { kBound, kExact };

std::string_view exactness_name(Exactness e);

/// [[n, k]] with named distances; d_x and d_z are never reported positionally.
struct CodeParams {
    SchlafliPair pair;
    int g = 0;
    int n = 0;
    int k = 0;
    int d_x = 0;
    int d_z = 0;
    Exactness exactness = Exactness::kBound;
    Rational rate;  // k / n
    Rational n_f;
    Rational n_f_star;
};

/// Census counts plus distance_bounds. Throws kInvalidInput for
/// non-hyperbolic pairs, g < 2, or a census that is not integral.
CodeParams family_params(const SchlafliPair &pair, int g);

/// Exchanges the tessellation with its dual: pair, d_x/d_z and n_f/n_f* swap.
CodeParams swap_dual(const CodeParams &params);

/// a * p + b.
struct LinearInP {
    int64_t a = 0;
    int64_t b = 0;

    Rational at(int p) const {
        return Rational(a * p + b);
    }
};

/// n_f, n_f* and n as (numerator(p) * (g - 1)) / denominator(p). A fixed pair
/// is the special case with constant numerators and denominator 1.
struct FamilyRow {
    int q = 0;
    std::optional<int> fixed_p;  // set for a single {p,q}; empty for the whole {p,q} family
    LinearInP n_f;
    LinearInP n_f_star;
    LinearInP n;
    LinearInP denominator{0, 1};

    std::string name() const;
    Rational faces(int p, int g) const;
    Rational dual_faces(int p, int g) const;
    Rational length(int p, int g) const;
};

/// The {p,3}, {p,4}, {p,5}, {p,6} families.
std::vector<FamilyRow> table1_families();

/// The nine fixed pairs {7,3} ... {10,5}.
std::vector<FamilyRow> table2_rows();

/// Limit of k/n. For a family row: g -> infinity, then p -> infinity.
/// For a fixed pair with n = c (g - 1): 2 / c.
Rational asymptotic_rate(const FamilyRow &row);

/// Smallest g in [2, g_max] where both bounds reach the targets, if any.
std::optional<int> genus_reaching(const SchlafliPair &pair, int d_x, int d_z, int g_max = 64);

/// CSV with header
///   table,pair,n_f,n_f_star,n,k,d_z_bound,d_x_bound,rate,l_pq,l_qp
/// covering both tables; formulas are written as text in g (and p).
void emit_tables(std::ostream &out);

struct CurvePoint {
    SchlafliPair pair;
    int g = 0;
    int n = 0;
    int k = 0;
    double d_h = 0;
    double raw_x = 0;
    double raw_z = 0;
    int d_x = 0;
    int d_z = 0;
    Rational rate;
};

/// One point per (pair, g), pairs outermost. Throws kInvalidInput outside g in [2, 64].
std::vector<CurvePoint> curve_points(const std::vector<SchlafliPair> &pairs, int g_min, int g_max);

/// CSV with header
///   pair,g,n,k,d_h,raw_x,raw_z,raw_diff,d_x,d_z,diff,rate,rate_value
void emit_curves(const std::vector<SchlafliPair> &pairs, int g_min, int g_max, std::ostream &out);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view text);

}  // namespace atqc

#endif
