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

#ifndef ATQC_HOMOLOGY_H
#define ATQC_HOMOLOGY_H

#include <vector>

#include "atqc/binary_matrix.h"
#include "atqc/surface_complex.h"

// Z2 chain complex C2 -> C1 -> C0 of a surface cellulation.
namespace atqc {

struct ChainComplexZ2 {
    BinaryMatrix d2;  // |E| x |F|; column f is the mod-2 boundary of face f
    BinaryMatrix d1;  // |V| x |E|; column e marks the endpoints of e (zero for a loop)
};

ChainComplexZ2 boundary_matrices(const SurfaceComplex &c);

/// dim ker(d1) - rank(d2). Throws kIntegrity when it differs from 2 * genus.
int betti1(const SurfaceComplex &c);

/// A homology basis of 2g primal cycles together with 2g cocycles (dual-graph
/// cycles) whose intersection-parity pairing with it is the identity.
struct CocycleBasis {
    std::vector<BitVector> cycles;    // representatives of a basis of H1
    std::vector<BitVector> cocycles;  // each meets every face boundary evenly
    std::vector<int> leftover_edges;  // edges outside both the tree and the co-tree
};

/// Tree/co-tree construction: a BFS spanning tree of the primal graph, a BFS
/// spanning tree of the dual graph on the remaining edges, and the 2g edges
/// left over. Each leftover edge closes one tree cycle and one co-tree cycle.
/// Throws kIntegrity if the resulting cocycles fail the even-intersection or
/// invertible-pairing checks.
CocycleBasis cocycle_basis(const SurfaceComplex &c);

/// Bit i is the parity of |cycle ∩ cocycles[i]|; zero iff the cycle is a boundary.
/// Throws kInvalidInput if `cycle` is not in ker(d1).
BitVector homology_signature(const SurfaceComplex &c, const BitVector &cycle, const CocycleBasis &basis);

/// Intersection-parity matrix: entry (i, j) = |cycles[i] ∩ cocycles[j]| mod 2.
BinaryMatrix pairing_matrix(const std::vector<BitVector> &cycles, const std::vector<BitVector> &cocycles);

}  // namespace atqc

#endif
