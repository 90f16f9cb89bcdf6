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

#ifndef ATQC_DISTANCE_H
#define ATQC_DISTANCE_H

#include <string_view>

#include "atqc/binary_matrix.h"
#include "atqc/stabilizer.h"
#include "atqc/surface_complex.h"

// Exact X and Z distances: d_x is the shortest homologically nontrivial cycle
// of the primal graph, d_z the same in the dual graph.
namespace atqc {

enum class DistanceMethod { kSearch, kOracle, kBothAgree };

std::string_view distance_method_name(DistanceMethod m);

struct CycleWitness {
    int weight = 0;
    BitVector edges;  // edge-set over the complex's edge ids
};

struct DistanceResult {
    int d_x = 0;
    int d_z = 0;
    BitVector witness_x;  // primal cycle
    BitVector witness_z;  // dual cycle, over the same edge ids
    DistanceMethod method = DistanceMethod::kSearch;
};

/// Largest 2g handled by the signature search (state space is V * 2^(2g)).
inline constexpr int kMaxSearchBetti = 24;

/// Breadth-first search over (vertex, homology signature) pairs from every
/// start vertex; the shortest closed walk returning to its start with a
/// nonzero signature is a minimum nontrivial cycle. Ties go to the lowest
/// start vertex, then to the lexicographically smallest sorted edge list.
/// Throws kInvalidInput if the complex has trivial H1 or 2g > kMaxSearchBetti.
CycleWitness shortest_nontrivial_cycle(const SurfaceComplex &c);

/// d_x on c and d_z on dual_complex(c). Both witnesses are re-validated
/// against homology signatures; failures throw kIntegrity.
DistanceResult code_distances(const SurfaceComplex &c);

inline constexpr int kDefaultOracleCeiling = 30;

/// Ceiling from ATQC_ORACLE_CEILING when set to a positive integer, else the default.
int oracle_ceiling_from_env();

/// Exhaustive reference: min weight over ker(hz) outside rowspace(hx), and
/// symmetrically for d_z. Enumerates each kernel in Gray-code order.
/// Throws kInvalidInput when n exceeds `ceiling`.
DistanceResult oracle_distances(const CssCode &code, int ceiling = kDefaultOracleCeiling);

/// Search distances, cross-checked by the oracle when n <= ceiling. A
/// disagreement throws kDiscrepancy; otherwise the method is kBothAgree
/// (or kSearch when the oracle was skipped).
DistanceResult certified_distances(const SurfaceComplex &c, int ceiling);

}  // namespace atqc

#endif
