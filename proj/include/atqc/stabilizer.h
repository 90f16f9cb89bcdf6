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

#ifndef ATQC_STABILIZER_H
#define ATQC_STABILIZER_H

#include <iosfwd>
#include <string>
#include <vector>

#include "atqc/binary_matrix.h"
#include "atqc/surface_complex.h"

// CSS codes of surface cellulations: a qubit per edge, an X check per face and
// a Z check per vertex. Note the role assignment: X on faces, Z on vertices.
namespace atqc {

struct CssCode {
    int n = 0;         // qubits = edges
    BinaryMatrix hx;   // |F| x n, row f = support of the face operator X_f
    BinaryMatrix hz;   // |V| x n, row v = support of the vertex operator Z_v
    int k = 0;         // n - rank(hx) - rank(hz)
    int genus = 0;
    std::vector<BitVector> logical_x;  // primal cycles, basis of ker(hz)/rowspace(hx)
    std::vector<BitVector> logical_z;  // dual cycles, basis of ker(hx)/rowspace(hz)
    std::string source_label;
    std::vector<std::string> warnings;
};

/// Builds the code of a valid complex, verifies k == 2g and extracts logical bases.
CssCode build_css(const SurfaceComplex &c);

/// Wraps raw check matrices (k computed by rank, no logical bases).
CssCode css_from_matrices(BinaryMatrix hx, BinaryMatrix hz, int genus, std::string label);

struct StabilizerReport {
    size_t independent_generators = 0;  // rank(hx) + rank(hz)
    size_t expected_generators = 0;     // |V| + |F| - 2
    int k = 0;
};

/// Checks hx * hz^T == 0, that the rows of hx and of hz each sum to zero, and
/// that rank(hx) + rank(hz) == |V| + |F| - 2. Throws kIntegrity naming the
/// first witness (a non-commuting row pair, or the failing product).
StabilizerReport verify_stabilizers(const CssCode &code);

struct LogicalBasis {
    std::vector<BitVector> x;
    std::vector<BitVector> z;
};

/// Logical operator bases with identity intersection pairing: x[i]·z[j] = δ_ij.
/// X representatives are chosen greedily by weight among fundamental cycles of
/// the graph read off hz; Z representatives likewise from hx, then recombined
/// to normalize the pairing. Throws kIntegrity if a quotient has the wrong dimension.
LogicalBasis logical_basis(const CssCode &code);

enum class CheckFormat { kAlist, kDenseText, kJson };
enum class CheckMatrix { kHx, kHz };

/// alist and dense-text carry one matrix (`which`); json carries the whole code.
void export_checks(const CssCode &code, CheckFormat format, CheckMatrix which, std::ostream &out);

void write_alist(const BinaryMatrix &m, std::ostream &out);
BinaryMatrix read_alist(std::istream &in);
void write_dense_text(const BinaryMatrix &m, std::ostream &out);
BinaryMatrix read_dense_text(std::istream &in);
void write_code_json(const CssCode &code, std::ostream &out);
CssCode read_code_json(std::istream &in);

}  // namespace atqc

#endif
