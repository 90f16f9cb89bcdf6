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

#include "atqc/distance.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <limits>
#include <string>

#include "atqc/error.h"
#include "atqc/homology.h"

namespace atqc {

namespace {

struct Arc {
    int to;
    int edge;
};

// Closed walks from `start` that stay on vertices >= start. A minimum
// nontrivial cycle whose lowest vertex is `start` is such a walk.
struct StartSearch {
    int length = -1;
    std::vector<int> edges;  // sorted edge ids of the chosen walk
};

StartSearch search_from(
    int start, const std::vector<std::vector<Arc>> &arcs, const std::vector<uint32_t> &edge_mask, int bits,
    int bound) {
    const size_t sigs = size_t{1} << bits;
    const size_t states = arcs.size() * sigs;
    std::vector<int> dist(states, -1);
    std::vector<int> parent_state(states, -1);
    std::vector<int> parent_edge(states, -1);
    auto id = [sigs](int v, uint32_t sig) { return static_cast<int>(static_cast<size_t>(v) * sigs + sig); };

    std::deque<int> frontier;
    dist[static_cast<size_t>(id(start, 0))] = 0;
    frontier.push_back(id(start, 0));
    int found_depth = -1;
    while (!frontier.empty()) {
        int s = frontier.front();
        frontier.pop_front();
        int d = dist[static_cast<size_t>(s)];
        if ((found_depth >= 0 && d >= found_depth) || d + 1 >= bound) {
            continue;
        }
        int v = static_cast<int>(static_cast<size_t>(s) / sigs);
        uint32_t sig = static_cast<uint32_t>(static_cast<size_t>(s) % sigs);
        for (const Arc &arc : arcs[static_cast<size_t>(v)]) {
            if (arc.to < start) {
                continue;
            }
            int t = id(arc.to, sig ^ edge_mask[static_cast<size_t>(arc.edge)]);
            if (dist[static_cast<size_t>(t)] != -1) {
                continue;
            }
            dist[static_cast<size_t>(t)] = d + 1;
            parent_state[static_cast<size_t>(t)] = s;
            parent_edge[static_cast<size_t>(t)] = arc.edge;
            if (arc.to == start) {
                found_depth = d + 1;
            }
            frontier.push_back(t);
        }
    }

    StartSearch best;
    if (found_depth < 0) {
        return best;
    }
    for (uint32_t sig = 1; sig < sigs; sig++) {
        int t = id(start, sig);
        if (dist[static_cast<size_t>(t)] != found_depth) {
            continue;
        }
        std::vector<int> walk;
        for (int s = t; parent_edge[static_cast<size_t>(s)] != -1; s = parent_state[static_cast<size_t>(s)]) {
            walk.push_back(parent_edge[static_cast<size_t>(s)]);
        }
        std::sort(walk.begin(), walk.end());
        if (best.length < 0 || walk < best.edges) {
            best.length = found_depth;
            best.edges = std::move(walk);
        }
    }
    return best;
}

BitVector validated_witness(const SurfaceComplex &c, const BitVector &w, int weight, const char *what) {
    CocycleBasis basis = cocycle_basis(c);
    if (static_cast<int>(w.weight()) != weight) {
        throw_integrity(std::string(what) + " witness has weight " + std::to_string(w.weight()) +
                        " but the reported distance is " + std::to_string(weight));
    }
    if (homology_signature(c, w, basis).none()) {
        throw_integrity(std::string(what) + " witness is homologically trivial");
    }
    return w;
}

CycleWitness oracle_min(const BinaryMatrix &kernel_of, const BinaryMatrix &modulo, const char *what) {
    std::vector<BitVector> kernel = kernel_of.kernel_basis();
    if (kernel.size() >= 63) {
        throw_invalid(std::string(what) + ": kernel dimension " + std::to_string(kernel.size()) + " is too large");
    }
    RowSpace span(modulo.cols());
    for (const auto &row : modulo.row_vectors()) {
        span.insert(row);
    }
    // reduce() is linear, so the residual of the running sum is the running
    // sum of residuals; the vector lies outside the row space iff it is nonzero.
    std::vector<BitVector> residual;
    residual.reserve(kernel.size());
    for (const auto &v : kernel) {
        residual.push_back(span.reduce(v));
    }

    CycleWitness best{std::numeric_limits<int>::max(), BitVector(kernel_of.cols())};
    BitVector v(kernel_of.cols());
    BitVector r(kernel_of.cols());
    const uint64_t count = uint64_t{1} << kernel.size();
    for (uint64_t t = 1; t < count; t++) {
        size_t i = static_cast<size_t>(std::countr_zero(t));
        v ^= kernel[i];
        r ^= residual[i];
        if (r.none()) {
            continue;
        }
        int w = static_cast<int>(v.weight());
        if (w < best.weight) {
            best.weight = w;
            best.edges = v;
        }
    }
    if (best.weight == std::numeric_limits<int>::max()) {
        throw_invalid(std::string(what) + ": no logical operators (k = 0)");
    }
    return best;
}

}  // namespace

std::string_view distance_method_name(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::kSearch:
            return "search";
        case DistanceMethod::kOracle:
            return "oracle";
        case DistanceMethod::kBothAgree:
            return "both-agree";
    }
    return "?";
}

CycleWitness shortest_nontrivial_cycle(const SurfaceComplex &c) {
    const int bits = 2 * c.genus();
    if (bits > kMaxSearchBetti) {
        throw_invalid("genus " + std::to_string(c.genus()) + " exceeds the signature search limit");
    }
    CocycleBasis basis = cocycle_basis(c);
    if (basis.cocycles.empty()) {
        throw_invalid("complex has trivial first homology");
    }

    std::vector<uint32_t> edge_mask(static_cast<size_t>(c.num_edges()), 0);
    for (size_t i = 0; i < basis.cocycles.size(); i++) {
        for (int e : basis.cocycles[i].indices()) {
            edge_mask[static_cast<size_t>(e)] |= uint32_t{1} << i;
        }
    }
    std::vector<std::vector<Arc>> arcs(static_cast<size_t>(c.num_vertices()));
    for (int e = 0; e < c.num_edges(); e++) {
        const EdgeEnds &ends = c.edge(e);
        arcs[static_cast<size_t>(ends.a)].push_back({ends.b, e});
        if (!ends.is_loop()) {
            arcs[static_cast<size_t>(ends.b)].push_back({ends.a, e});
        }
    }
    for (auto &list : arcs) {
        std::sort(list.begin(), list.end(), [](const Arc &x, const Arc &y) { return x.edge < y.edge; });
    }

    StartSearch best;
    for (int s = 0; s < c.num_vertices(); s++) {
        int bound = best.length < 0 ? std::numeric_limits<int>::max() : best.length;
        StartSearch here = search_from(s, arcs, edge_mask, bits, bound);
        if (here.length >= 0 && (best.length < 0 || here.length < best.length)) {
            best = std::move(here);
        }
    }
    if (best.length < 0) {
        throw_integrity("no homologically nontrivial closed walk found");
    }

    CycleWitness out{best.length, BitVector(static_cast<size_t>(c.num_edges()))};
    for (int e : best.edges) {
        out.edges.flip(static_cast<size_t>(e));
    }
    // A minimum nontrivial walk cannot reuse an edge, or a shorter one would exist.
    if (static_cast<int>(out.edges.weight()) != best.length) {
        throw_integrity("shortest nontrivial walk repeats an edge");
    }
    return out;
}

DistanceResult code_distances(const SurfaceComplex &c) {
    SurfaceComplex dual = dual_complex(c);
    CycleWitness x = shortest_nontrivial_cycle(c);
    CycleWitness z = shortest_nontrivial_cycle(dual);
    DistanceResult out;
    out.d_x = x.weight;
    out.d_z = z.weight;
    out.witness_x = validated_witness(c, x.edges, x.weight, "X");
    out.witness_z = validated_witness(dual, z.edges, z.weight, "Z");
    out.method = DistanceMethod::kSearch;
    return out;
}

int oracle_ceiling_from_env() {
    const char *raw = std::getenv("ATQC_ORACLE_CEILING");
    if (raw == nullptr || *raw == '\0') {
        return kDefaultOracleCeiling;
    }
    char *end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (*end != '\0' || value <= 0 || value > 1'000'000) {
        throw_invalid(std::string("ATQC_ORACLE_CEILING must be a positive integer, got \"") + raw + "\"");
    }
    return static_cast<int>(value);
}

DistanceResult oracle_distances(const CssCode &code, int ceiling) {
    if (code.n > ceiling) {
        throw_invalid("oracle refuses n = " + std::to_string(code.n) + " above the ceiling " + std::to_string(ceiling));
    }
    CycleWitness x = oracle_min(code.hz, code.hx, "d_x oracle");
    CycleWitness z = oracle_min(code.hx, code.hz, "d_z oracle");
    DistanceResult out;
    out.d_x = x.weight;
    out.d_z = z.weight;
    out.witness_x = std::move(x.edges);
    out.witness_z = std::move(z.edges);
    out.method = DistanceMethod::kOracle;
    return out;
}

DistanceResult certified_distances(const SurfaceComplex &c, int ceiling) {
    DistanceResult search = code_distances(c);
    if (c.num_edges() > ceiling) {
        return search;
    }
    DistanceResult oracle = oracle_distances(build_css(c), ceiling);
    if (oracle.d_x != search.d_x || oracle.d_z != search.d_z) {
        throw_discrepancy("search gives (d_x, d_z) = (" + std::to_string(search.d_x) + ", " +
                          std::to_string(search.d_z) + ") but the oracle gives (" + std::to_string(oracle.d_x) +
                          ", " + std::to_string(oracle.d_z) + ") for " + c.label());
    }
    search.method = DistanceMethod::kBothAgree;
    return search;
}

}  // namespace atqc
