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

#include "atqc/surface_complex.h"

#include <algorithm>

#include "atqc/error.h"

namespace atqc {

namespace {

std::string face_name(size_t f) {
    return "face " + std::to_string(f);
}

// Walk starting at `start`; empty when the edge sequence does not close up from there.
std::vector<int> try_walk(const std::vector<EdgeEnds> &edges, const std::vector<int> &cycle, int start) {
    std::vector<int> walk;
    walk.reserve(cycle.size());
    int cur = start;
    for (int e : cycle) {
        const EdgeEnds &ends = edges[static_cast<size_t>(e)];
        if (!ends.touches(cur)) {
            return {};
        }
        walk.push_back(cur);
        cur = ends.other(cur);
    }
    if (cur != start) {
        return {};
    }
    return walk;
}

std::vector<int> walk_of(const std::vector<EdgeEnds> &edges, const std::vector<int> &cycle) {
    const EdgeEnds &first = edges[static_cast<size_t>(cycle.front())];
    std::vector<int> walk = try_walk(edges, cycle, first.a);
    if (walk.empty() && !first.is_loop()) {
        walk = try_walk(edges, cycle, first.b);
    }
    return walk;
}

}  // namespace

SurfaceComplex::SurfaceComplex(
    int genus, std::string label, int num_vertices, std::vector<EdgeEnds> edges, std::vector<std::vector<int>> faces)
    : genus_(genus),
      label_(std::move(label)),
      num_vertices_(num_vertices),
      edges_(std::move(edges)),
      faces_(std::move(faces)) {
    if (genus_ < 1) {
        throw_integrity("genus " + std::to_string(genus_) + " is not supported (closed surfaces of genus >= 1 only)");
    }
    if (num_vertices_ < 1) {
        throw_integrity("complex has no vertices");
    }

    std::vector<int> degree(static_cast<size_t>(num_vertices_), 0);
    for (size_t e = 0; e < edges_.size(); e++) {
        const EdgeEnds &ends = edges_[e];
        for (int v : {ends.a, ends.b}) {
            if (v < 0 || v >= num_vertices_) {
                throw_integrity("edge " + std::to_string(e) + " references unknown vertex " + std::to_string(v));
            }
        }
        degree[static_cast<size_t>(ends.a)]++;
        degree[static_cast<size_t>(ends.b)]++;
    }

    std::vector<std::vector<int>> slots(edges_.size());
    for (size_t f = 0; f < faces_.size(); f++) {
        if (faces_[f].empty()) {
            throw_integrity(face_name(f) + " has an empty boundary");
        }
        for (int e : faces_[f]) {
            if (e < 0 || static_cast<size_t>(e) >= edges_.size()) {
                throw_integrity(face_name(f) + " references unknown edge " + std::to_string(e));
            }
            slots[static_cast<size_t>(e)].push_back(static_cast<int>(f));
        }
    }
    for (size_t e = 0; e < edges_.size(); e++) {
        if (slots[e].size() != 2) {
            throw_integrity(
                "edge " + std::to_string(e) + " borders " + std::to_string(slots[e].size()) +
                " face slot(s); every edge must border exactly two face slots");
        }
    }
    for (size_t f = 0; f < faces_.size(); f++) {
        const auto &cycle = faces_[f];
        for (size_t i = 0; i < cycle.size(); i++) {
            const EdgeEnds &x = edges_[static_cast<size_t>(cycle[i])];
            const EdgeEnds &y = edges_[static_cast<size_t>(cycle[(i + 1) % cycle.size()])];
            if (!x.touches(y.a) && !x.touches(y.b)) {
                throw_integrity(
                    face_name(f) + ": consecutive edges " + std::to_string(cycle[i]) + " and " +
                    std::to_string(cycle[(i + 1) % cycle.size()]) + " share no vertex");
            }
        }
        if (walk_of(edges_, cycle).empty()) {
            throw_integrity(face_name(f) + ": boundary edges do not form a closed walk");
        }
    }
    for (size_t v = 0; v < degree.size(); v++) {
        if (degree[v] == 0) {
            throw_integrity("vertex " + std::to_string(v) + " has no incident edges");
        }
    }
    if (euler_characteristic() != 2 - 2 * genus_) {
        throw_integrity(
            "Euler characteristic V - E + F = " + std::to_string(num_vertices_) + " - " +
            std::to_string(edges_.size()) + " + " + std::to_string(faces_.size()) + " = " +
            std::to_string(euler_characteristic()) + " is inconsistent with genus " + std::to_string(genus_) +
            " (expected " + std::to_string(2 - 2 * genus_) + ")");
    }

    edge_faces_.reserve(edges_.size());
    for (const auto &s : slots) {
        edge_faces_.emplace_back(s[0], s[1]);
    }
}

std::vector<int> SurfaceComplex::face_walk(int f) const {
    return walk_of(edges_, face(f));
}

std::pair<int, int> SurfaceComplex::edge_faces(int e) const {
    return edge_faces_[static_cast<size_t>(e)];
}

std::vector<int> SurfaceComplex::degenerate_faces() const {
    std::vector<int> out;
    for (size_t f = 0; f < faces_.size(); f++) {
        std::vector<int> sorted = faces_[f];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            out.push_back(static_cast<int>(f));
        }
    }
    return out;
}

bool SurfaceComplex::same_structure(const SurfaceComplex &other) const {
    if (genus_ != other.genus_ || num_vertices_ != other.num_vertices_ || faces_.size() != other.faces_.size()) {
        return false;
    }
    if (edges_.size() != other.edges_.size()) {
        return false;
    }
    for (size_t e = 0; e < edges_.size(); e++) {
        auto [a, b] = std::minmax(edges_[e].a, edges_[e].b);
        auto [c, d] = std::minmax(other.edges_[e].a, other.edges_[e].b);
        if (a != c || b != d) {
            return false;
        }
    }
    for (size_t f = 0; f < faces_.size(); f++) {
        if (normalized_cycle(faces_[f]) != normalized_cycle(other.faces_[f])) {
            return false;
        }
    }
    return true;
}

std::vector<int> normalized_cycle(const std::vector<int> &cycle) {
    std::vector<int> best = cycle;
    const std::vector<int> reversed(cycle.rbegin(), cycle.rend());
    for (const auto *base : {&cycle, &reversed}) {
        std::vector<int> candidate = *base;
        for (size_t r = 0; r < cycle.size(); r++) {
            if (candidate < best) {
                best = candidate;
            }
            std::rotate(candidate.begin(), candidate.begin() + 1, candidate.end());
        }
    }
    return best;
}

SurfaceComplex dual_complex(const SurfaceComplex &c) {
    // Half-edge h = 2 * e + end, where end 0 is at edges[e].a and end 1 at edges[e].b.
    // A corner of a face joins the half-edge it enters a vertex by with the one it
    // leaves by; the corners around a vertex chain its half-edges into the dual face.
    const size_t num_half = 2 * static_cast<size_t>(c.num_edges());
    std::vector<std::vector<int>> corner_links(num_half);
    std::vector<int> loop_seen(static_cast<size_t>(c.num_edges()), 0);

    for (int f = 0; f < c.num_faces(); f++) {
        const auto &cycle = c.face(f);
        std::vector<int> walk = c.face_walk(f);
        size_t k = cycle.size();
        std::vector<int> leave(k);
        std::vector<int> enter(k);
        for (size_t i = 0; i < k; i++) {
            int e = cycle[i];
            const EdgeEnds &ends = c.edge(e);
            int from_end;
            if (ends.is_loop()) {
                // Traverse a loop forwards the first time it is met and backwards the second.
                from_end = loop_seen[static_cast<size_t>(e)]++ == 0 ? 0 : 1;
            } else {
                from_end = ends.a == walk[i] ? 0 : 1;
            }
            leave[i] = 2 * e + from_end;
            enter[i] = 2 * e + (1 - from_end);
        }
        for (size_t i = 0; i < k; i++) {
            int in = enter[i];
            int out = leave[(i + 1) % k];
            corner_links[static_cast<size_t>(in)].push_back(out);
            corner_links[static_cast<size_t>(out)].push_back(in);
        }
    }

    auto vertex_of_half = [&](int h) {
        const EdgeEnds &ends = c.edge(h / 2);
        return h % 2 == 0 ? ends.a : ends.b;
    };
    std::vector<std::vector<int>> halves_at(static_cast<size_t>(c.num_vertices()));
    for (size_t h = 0; h < num_half; h++) {
        if (corner_links[h].size() != 2) {
            throw_integrity("half-edge of edge " + std::to_string(h / 2) + " lies in " +
                            std::to_string(corner_links[h].size()) + " corners; expected 2");
        }
        halves_at[static_cast<size_t>(vertex_of_half(static_cast<int>(h)))].push_back(static_cast<int>(h));
    }

    std::vector<std::vector<int>> dual_faces;
    dual_faces.reserve(halves_at.size());
    for (size_t v = 0; v < halves_at.size(); v++) {
        const auto &halves = halves_at[v];
        std::vector<int> rotation;
        int start = halves.front();
        int prev = -1;
        int cur = start;
        do {
            rotation.push_back(cur / 2);
            const auto &links = corner_links[static_cast<size_t>(cur)];
            // With two identical links (a vertex of degree one) either choice continues the chain.
            int next = links[0] != prev ? links[0] : links[1];
            prev = cur;
            cur = next;
        } while (cur != start && rotation.size() <= halves.size());
        if (cur != start || rotation.size() != halves.size()) {
            throw_integrity("the neighbourhood of vertex " + std::to_string(v) + " is not a disk");
        }
        dual_faces.push_back(std::move(rotation));
    }

    std::vector<EdgeEnds> dual_edges;
    dual_edges.reserve(static_cast<size_t>(c.num_edges()));
    for (int e = 0; e < c.num_edges(); e++) {
        auto [f1, f2] = c.edge_faces(e);
        dual_edges.push_back({f1, f2});
    }
    std::string label = c.label().rfind("dual of ", 0) == 0 ? c.label().substr(8) : "dual of " + c.label();
    return SurfaceComplex(c.genus(), std::move(label), c.num_faces(), std::move(dual_edges), std::move(dual_faces));
}

}  // namespace atqc
