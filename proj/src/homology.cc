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

#include "atqc/homology.h"

#include <queue>

#include "atqc/error.h"

namespace atqc {

namespace {

struct SpanningTree {
    std::vector<int> parent_edge;  // -1 at the root
    std::vector<int> parent_node;
    std::vector<bool> in_tree;     // indexed by edge
};

// BFS tree over `num_nodes` nodes where edge e joins ends[e]; edges with
// allowed[e] == false, and self-loops, are never used.
SpanningTree bfs_tree(
    int num_nodes, const std::vector<std::pair<int, int>> &ends, const std::vector<bool> &allowed,
    const char *what) {
    std::vector<std::vector<std::pair<int, int>>> adjacency(static_cast<size_t>(num_nodes));
    for (size_t e = 0; e < ends.size(); e++) {
        auto [a, b] = ends[e];
        if (!allowed[e] || a == b) {
            continue;
        }
        adjacency[static_cast<size_t>(a)].emplace_back(b, static_cast<int>(e));
        adjacency[static_cast<size_t>(b)].emplace_back(a, static_cast<int>(e));
    }
    SpanningTree tree{
        std::vector<int>(static_cast<size_t>(num_nodes), -1), std::vector<int>(static_cast<size_t>(num_nodes), -1),
        std::vector<bool>(ends.size(), false)};
    std::vector<bool> reached(static_cast<size_t>(num_nodes), false);
    std::queue<int> frontier;
    frontier.push(0);
    reached[0] = true;
    int count = 1;
    while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (auto [w, e] : adjacency[static_cast<size_t>(u)]) {
            if (reached[static_cast<size_t>(w)]) {
                continue;
            }
            reached[static_cast<size_t>(w)] = true;
            tree.parent_edge[static_cast<size_t>(w)] = e;
            tree.parent_node[static_cast<size_t>(w)] = u;
            tree.in_tree[static_cast<size_t>(e)] = true;
            frontier.push(w);
            count++;
        }
    }
    if (count != num_nodes) {
        throw_integrity(std::string(what) + " is disconnected (" + std::to_string(count) + " of " +
                        std::to_string(num_nodes) + " reachable)");
    }
    return tree;
}

// Tree path from `node` to the root, toggled into `out`.
void toggle_root_path(const SpanningTree &tree, int node, BitVector &out) {
    while (tree.parent_edge[static_cast<size_t>(node)] != -1) {
        out.flip(static_cast<size_t>(tree.parent_edge[static_cast<size_t>(node)]));
        node = tree.parent_node[static_cast<size_t>(node)];
    }
}

}  // namespace

ChainComplexZ2 boundary_matrices(const SurfaceComplex &c) {
    ChainComplexZ2 out{
        BinaryMatrix(static_cast<size_t>(c.num_edges()), static_cast<size_t>(c.num_faces())),
        BinaryMatrix(static_cast<size_t>(c.num_vertices()), static_cast<size_t>(c.num_edges()))};
    for (int f = 0; f < c.num_faces(); f++) {
        for (int e : c.face(f)) {
            out.d2.flip(static_cast<size_t>(e), static_cast<size_t>(f));
        }
    }
    for (int e = 0; e < c.num_edges(); e++) {
        out.d1.flip(static_cast<size_t>(c.edge(e).a), static_cast<size_t>(e));
        out.d1.flip(static_cast<size_t>(c.edge(e).b), static_cast<size_t>(e));
    }
    return out;
}

int betti1(const SurfaceComplex &c) {
    ChainComplexZ2 chain = boundary_matrices(c);
    int cycles_dim = c.num_edges() - static_cast<int>(chain.d1.rank());
    int result = cycles_dim - static_cast<int>(chain.d2.rank());
    if (result != 2 * c.genus()) {
        throw_integrity("first Betti number " + std::to_string(result) + " differs from 2g = " +
                        std::to_string(2 * c.genus()));
    }
    return result;
}

BinaryMatrix pairing_matrix(const std::vector<BitVector> &cycles, const std::vector<BitVector> &cocycles) {
    BinaryMatrix m(cycles.size(), cocycles.size());
    for (size_t i = 0; i < cycles.size(); i++) {
        for (size_t j = 0; j < cocycles.size(); j++) {
            m.set(i, j, cycles[i].dot(cocycles[j]));
        }
    }
    return m;
}

CocycleBasis cocycle_basis(const SurfaceComplex &c) {
    const size_t num_edges = static_cast<size_t>(c.num_edges());
    std::vector<std::pair<int, int>> primal_ends;
    std::vector<std::pair<int, int>> dual_ends;
    primal_ends.reserve(num_edges);
    dual_ends.reserve(num_edges);
    for (int e = 0; e < c.num_edges(); e++) {
        primal_ends.emplace_back(c.edge(e).a, c.edge(e).b);
        dual_ends.push_back(c.edge_faces(e));
    }

    SpanningTree tree = bfs_tree(c.num_vertices(), primal_ends, std::vector<bool>(num_edges, true), "primal graph");
    std::vector<bool> not_tree(num_edges);
    for (size_t e = 0; e < num_edges; e++) {
        not_tree[e] = !tree.in_tree[e];
    }
    SpanningTree cotree = bfs_tree(c.num_faces(), dual_ends, not_tree, "dual graph outside the spanning tree");

    CocycleBasis basis;
    for (size_t e = 0; e < num_edges; e++) {
        if (tree.in_tree[e] || cotree.in_tree[e]) {
            continue;
        }
        basis.leftover_edges.push_back(static_cast<int>(e));

        BitVector cycle(num_edges);
        cycle.flip(e);
        toggle_root_path(tree, primal_ends[e].first, cycle);
        toggle_root_path(tree, primal_ends[e].second, cycle);
        basis.cycles.push_back(std::move(cycle));

        BitVector cocycle(num_edges);
        cocycle.flip(e);
        toggle_root_path(cotree, dual_ends[e].first, cocycle);
        toggle_root_path(cotree, dual_ends[e].second, cocycle);
        basis.cocycles.push_back(std::move(cocycle));
    }
    if (basis.leftover_edges.size() != static_cast<size_t>(2 * c.genus())) {
        throw_integrity("tree/co-tree decomposition leaves " + std::to_string(basis.leftover_edges.size()) +
                        " edges; expected 2g = " + std::to_string(2 * c.genus()));
    }

    ChainComplexZ2 chain = boundary_matrices(c);
    BinaryMatrix face_boundaries = chain.d2.transposed();
    for (size_t i = 0; i < basis.cocycles.size(); i++) {
        if (face_boundaries.apply(basis.cocycles[i]).any()) {
            throw_integrity("cocycle " + std::to_string(i) + " meets a face boundary an odd number of times");
        }
        if (chain.d1.apply(basis.cycles[i]).any()) {
            throw_integrity("homology representative " + std::to_string(i) + " is not a cycle");
        }
    }
    if (pairing_matrix(basis.cycles, basis.cocycles).rank() != basis.cocycles.size()) {
        throw_integrity("cycle/cocycle pairing matrix is singular");
    }
    return basis;
}

BitVector homology_signature(const SurfaceComplex &c, const BitVector &cycle, const CocycleBasis &basis) {
    if (cycle.size() != static_cast<size_t>(c.num_edges())) {
        throw_invalid("edge set has length " + std::to_string(cycle.size()) + "; complex has " +
                      std::to_string(c.num_edges()) + " edges");
    }
    if (boundary_matrices(c).d1.apply(cycle).any()) {
        throw_invalid("edge set is not a cycle (it has odd-degree vertices)");
    }
    BitVector signature(basis.cocycles.size());
    for (size_t i = 0; i < basis.cocycles.size(); i++) {
        signature.set(i, cycle.dot(basis.cocycles[i]));
    }
    return signature;
}

}  // namespace atqc
