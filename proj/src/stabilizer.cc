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

#include "atqc/stabilizer.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "atqc/error.h"
#include "atqc/homology.h"
#include "json.hpp"

namespace atqc {

namespace {

// Whether every column has weight 0 or 2, i.e. the matrix is the incidence
// matrix of a multigraph on its rows (weight-0 columns are loops).
bool is_graph_incidence(const BinaryMatrix &h) {
    for (size_t c = 0; c < h.cols(); c++) {
        size_t w = h.column_weight(c);
        if (w != 0 && w != 2) {
            return false;
        }
    }
    return true;
}

// Short elements of ker(h): fundamental cycles of BFS trees rooted at every
// node of the graph whose incidence matrix is h.
std::vector<BitVector> short_cycles(const BinaryMatrix &h) {
    const size_t nodes = h.rows();
    const size_t cols = h.cols();
    std::vector<std::pair<int, int>> ends(cols, {-1, -1});
    std::vector<std::vector<std::pair<int, int>>> adjacency(nodes);
    std::vector<BitVector> out;
    for (size_t r = 0; r < nodes; r++) {
        for (int c : h.row(r).indices()) {
            auto &slot = ends[static_cast<size_t>(c)];
            (slot.first < 0 ? slot.first : slot.second) = static_cast<int>(r);
        }
    }
    for (size_t c = 0; c < cols; c++) {
        auto [a, b] = ends[c];
        if (a < 0) {
            BitVector loop(cols);
            loop.set(c);
            out.push_back(std::move(loop));
            continue;
        }
        adjacency[static_cast<size_t>(a)].emplace_back(b, static_cast<int>(c));
        adjacency[static_cast<size_t>(b)].emplace_back(a, static_cast<int>(c));
    }
    for (size_t root = 0; root < nodes; root++) {
        std::vector<int> parent_edge(nodes, -1);
        std::vector<int> parent(nodes, -1);
        std::vector<bool> reached(nodes, false);
        std::vector<bool> tree_edge(cols, false);
        std::queue<int> frontier;
        frontier.push(static_cast<int>(root));
        reached[root] = true;
        while (!frontier.empty()) {
            int u = frontier.front();
            frontier.pop();
            for (auto [w, e] : adjacency[static_cast<size_t>(u)]) {
                if (!reached[static_cast<size_t>(w)]) {
                    reached[static_cast<size_t>(w)] = true;
                    parent[static_cast<size_t>(w)] = u;
                    parent_edge[static_cast<size_t>(w)] = e;
                    tree_edge[static_cast<size_t>(e)] = true;
                    frontier.push(w);
                }
            }
        }
        for (size_t c = 0; c < cols; c++) {
            auto [a, b] = ends[c];
            if (a < 0 || tree_edge[c] || !reached[static_cast<size_t>(a)]) {
                continue;
            }
            BitVector cycle(cols);
            cycle.flip(c);
            for (int node : {a, b}) {
                while (parent_edge[static_cast<size_t>(node)] != -1) {
                    cycle.flip(static_cast<size_t>(parent_edge[static_cast<size_t>(node)]));
                    node = parent[static_cast<size_t>(node)];
                }
            }
            out.push_back(std::move(cycle));
        }
    }
    return out;
}

// Basis of ker(h) modulo rowspace(stabilizers), `count` vectors, lowest weight first.
std::vector<BitVector> quotient_basis(
    const BinaryMatrix &h, const BinaryMatrix &stabilizers, size_t count, const char *what) {
    std::vector<BitVector> candidates;
    if (is_graph_incidence(h)) {
        candidates = short_cycles(h);
    }
    std::stable_sort(candidates.begin(), candidates.end(), [](const BitVector &a, const BitVector &b) {
        size_t wa = a.weight();
        size_t wb = b.weight();
        return wa != wb ? wa < wb : a.indices() < b.indices();
    });
    for (auto &v : h.kernel_basis()) {
        candidates.push_back(std::move(v));
    }

    RowSpace span(h.cols());
    for (const auto &row : stabilizers.row_vectors()) {
        span.insert(row);
    }
    std::vector<BitVector> chosen;
    for (const auto &v : candidates) {
        if (chosen.size() == count) {
            break;
        }
        if (span.insert(v)) {
            chosen.push_back(v);
        }
    }
    if (chosen.size() != count) {
        throw_integrity(std::string(what) + " quotient has dimension " + std::to_string(chosen.size()) +
                        "; expected " + std::to_string(count));
    }
    return chosen;
}

std::string weight_list(const BinaryMatrix &m) {
    std::string out;
    for (size_t r = 0; r < m.rows(); r++) {
        out += (r ? " " : "") + std::to_string(m.row(r).weight());
    }
    return out;
}

}  // namespace

CssCode css_from_matrices(BinaryMatrix hx, BinaryMatrix hz, int genus, std::string label) {
    if (hx.cols() != hz.cols()) {
        throw_invalid("hx has " + std::to_string(hx.cols()) + " columns but hz has " + std::to_string(hz.cols()));
    }
    CssCode code;
    code.n = static_cast<int>(hx.cols());
    code.k = code.n - static_cast<int>(hx.rank()) - static_cast<int>(hz.rank());
    code.hx = std::move(hx);
    code.hz = std::move(hz);
    code.genus = genus;
    code.source_label = std::move(label);
    return code;
}

CssCode build_css(const SurfaceComplex &c) {
    ChainComplexZ2 chain = boundary_matrices(c);
    CssCode code = css_from_matrices(chain.d2.transposed(), chain.d1, c.genus(), c.label());
    if (code.k != 2 * c.genus()) {
        throw_integrity("code of " + c.label() + " encodes k = " + std::to_string(code.k) + " qubits; expected 2g = " +
                        std::to_string(2 * c.genus()));
    }
    for (size_t f = 0; f < code.hx.rows(); f++) {
        if (code.hx.row(f).none()) {
            code.warnings.push_back("face " + std::to_string(f) + " has a zero Z2 boundary (degenerate face)");
        }
    }
    LogicalBasis logicals = logical_basis(code);
    code.logical_x = std::move(logicals.x);
    code.logical_z = std::move(logicals.z);
    return code;
}

StabilizerReport verify_stabilizers(const CssCode &code) {
    for (size_t f = 0; f < code.hx.rows(); f++) {
        for (size_t v = 0; v < code.hz.rows(); v++) {
            if (code.hx.row(f).dot(code.hz.row(v))) {
                throw_integrity("X_f and Z_v anticommute for face row " + std::to_string(f) + " and vertex row " +
                                std::to_string(v));
            }
        }
    }
    auto check_product = [](const BinaryMatrix &m, const char *name) {
        BitVector total(m.cols());
        for (const auto &row : m.row_vectors()) {
            total ^= row;
        }
        if (total.any()) {
            throw_integrity(std::string("product of all ") + name + " operators is not the identity (qubit " +
                            std::to_string(total.indices().front()) + " survives)");
        }
    };
    check_product(code.hx, "face");
    check_product(code.hz, "vertex");

    StabilizerReport report;
    report.independent_generators = code.hx.rank() + code.hz.rank();
    report.expected_generators = code.hx.rows() + code.hz.rows() - 2;
    report.k = code.n - static_cast<int>(report.independent_generators);
    if (report.independent_generators != report.expected_generators) {
        throw_integrity("independent generators " + std::to_string(report.independent_generators) +
                        " != |V| + |F| - 2 = " + std::to_string(report.expected_generators));
    }
    return report;
}

LogicalBasis logical_basis(const CssCode &code) {
    size_t k = static_cast<size_t>(code.k);
    LogicalBasis out;
    out.x = quotient_basis(code.hz, code.hx, k, "ker(hz)/rowspace(hx)");
    std::vector<BitVector> z = quotient_basis(code.hx, code.hz, k, "ker(hx)/rowspace(hz)");

    // z'_j = sum_k C[j][k] z_k with C = (M^T)^{-1} makes x_i · z'_j = δ_ij.
    BinaryMatrix coefficients = pairing_matrix(out.x, z).transposed().inverse();
    for (size_t j = 0; j < k; j++) {
        BitVector combined(static_cast<size_t>(code.n));
        for (int idx : coefficients.row(j).indices()) {
            combined ^= z[static_cast<size_t>(idx)];
        }
        out.z.push_back(std::move(combined));
    }
    return out;
}

void write_alist(const BinaryMatrix &m, std::ostream &out) {
    const size_t rows = m.rows();
    const size_t cols = m.cols();
    BinaryMatrix t = m.transposed();
    size_t max_col = 0;
    size_t max_row = 0;
    for (size_t c = 0; c < cols; c++) {
        max_col = std::max(max_col, t.row(c).weight());
    }
    for (size_t r = 0; r < rows; r++) {
        max_row = std::max(max_row, m.row(r).weight());
    }
    out << cols << " " << rows << "\n";
    out << max_col << " " << max_row << "\n";
    out << weight_list(t) << "\n";
    out << weight_list(m) << "\n";
    auto write_positions = [&out](const BitVector &v, size_t width) {
        std::vector<int> idx = v.indices();
        for (size_t i = 0; i < width; i++) {
            out << (i ? " " : "") << (i < idx.size() ? idx[i] + 1 : 0);
        }
        out << "\n";
    };
    for (size_t c = 0; c < cols; c++) {
        write_positions(t.row(c), max_col);
    }
    for (size_t r = 0; r < rows; r++) {
        write_positions(m.row(r), max_row);
    }
}

BinaryMatrix read_alist(std::istream &in) {
    size_t cols = 0;
    size_t rows = 0;
    size_t max_col = 0;
    size_t max_row = 0;
    if (!(in >> cols >> rows >> max_col >> max_row)) {
        throw_invalid("alist: truncated header");
    }
    std::vector<size_t> col_weights(cols);
    std::vector<size_t> row_weights(rows);
    for (auto &w : col_weights) {
        in >> w;
    }
    for (auto &w : row_weights) {
        in >> w;
    }
    BinaryMatrix m(rows, cols);
    for (size_t c = 0; c < cols; c++) {
        for (size_t i = 0; i < max_col; i++) {
            size_t r = 0;
            if (!(in >> r)) {
                throw_invalid("alist: truncated column lists");
            }
            if (r > rows) {
                throw_invalid("alist: row index " + std::to_string(r) + " out of range");
            }
            if (r != 0) {
                m.set(r - 1, c);
            }
        }
    }
    // The per-row lists must agree with the per-column lists.
    for (size_t r = 0; r < rows; r++) {
        BitVector listed(cols);
        for (size_t i = 0; i < max_row; i++) {
            size_t c = 0;
            if (!(in >> c)) {
                throw_invalid("alist: truncated row lists");
            }
            if (c > cols) {
                throw_invalid("alist: column index " + std::to_string(c) + " out of range");
            }
            if (c != 0) {
                listed.set(c - 1);
            }
        }
        if (listed != m.row(r) || listed.weight() != row_weights[r]) {
            throw_invalid("alist: row " + std::to_string(r + 1) + " disagrees with the column lists");
        }
    }
    for (size_t c = 0; c < cols; c++) {
        if (m.column_weight(c) != col_weights[c]) {
            throw_invalid("alist: column " + std::to_string(c + 1) + " weight disagrees with its list");
        }
    }
    return m;
}

void write_dense_text(const BinaryMatrix &m, std::ostream &out) {
    for (const auto &row : m.row_vectors()) {
        out << row.str() << "\n";
    }
}

BinaryMatrix read_dense_text(std::istream &in) {
    std::vector<BitVector> rows;
    std::string line;
    size_t cols = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (!rows.empty() && line.size() != cols) {
            throw_invalid("dense-text: ragged row " + std::to_string(rows.size() + 1));
        }
        cols = line.size();
        rows.push_back(BitVector::from_string(line));
    }
    return BinaryMatrix::from_rows(cols, std::move(rows));
}

void write_code_json(const CssCode &code, std::ostream &out) {
    auto rows_of = [](const BinaryMatrix &m) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto &row : m.row_vectors()) {
            nlohmann::json bits = nlohmann::json::array();
            for (size_t i = 0; i < row.size(); i++) {
                bits.push_back(row.get(i) ? 1 : 0);
            }
            rows.push_back(std::move(bits));
        }
        return rows;
    };
    nlohmann::ordered_json doc;
    doc["n"] = code.n;
    doc["k"] = code.k;
    doc["genus"] = code.genus;
    doc["hx"] = rows_of(code.hx);
    doc["hz"] = rows_of(code.hz);
    doc["label"] = code.source_label;
    out << doc.dump() << "\n";
}

CssCode read_code_json(std::istream &in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &ex) {
        throw_invalid(std::string("malformed JSON: ") + ex.what());
    }
    for (const char *key : {"n", "k", "genus", "hx", "hz", "label"}) {
        if (!doc.contains(key)) {
            throw_invalid(std::string("code JSON: missing key \"") + key + "\"");
        }
    }
    const size_t n = doc["n"].get<size_t>();
    auto matrix_of = [n](const nlohmann::json &rows, const char *name) {
        std::vector<BitVector> out;
        for (const auto &r : rows) {
            if (r.size() != n) {
                throw_invalid(std::string("code JSON: ") + name + " row length differs from n");
            }
            BitVector v(n);
            for (size_t i = 0; i < n; i++) {
                v.set(i, r[i].get<int>() != 0);
            }
            out.push_back(std::move(v));
        }
        return BinaryMatrix::from_rows(n, std::move(out));
    };
    CssCode code = css_from_matrices(
        matrix_of(doc["hx"], "hx"), matrix_of(doc["hz"], "hz"), doc["genus"].get<int>(),
        doc["label"].get<std::string>());
    if (code.k != doc["k"].get<int>()) {
        throw_integrity("code JSON: declared k = " + std::to_string(doc["k"].get<int>()) + " but ranks give " +
                        std::to_string(code.k));
    }
    return code;
}

void export_checks(const CssCode &code, CheckFormat format, CheckMatrix which, std::ostream &out) {
    const BinaryMatrix &m = which == CheckMatrix::kHx ? code.hx : code.hz;
    switch (format) {
        case CheckFormat::kAlist:
            write_alist(m, out);
            break;
        case CheckFormat::kDenseText:
            write_dense_text(m, out);
            break;
        case CheckFormat::kJson:
            write_code_json(code, out);
            break;
    }
    if (!out) {
        throw_io("failed writing parity checks");
    }
}

}  // namespace atqc
