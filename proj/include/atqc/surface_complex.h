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

#ifndef ATQC_SURFACE_COMPLEX_H
#define ATQC_SURFACE_COMPLEX_H

#include <iosfwd>
#include <string>
#include <vector>

namespace atqc {

/// Endpoints of an edge. Multi-edges are distinguished by edge id; a == b is a self-loop.
struct EdgeEnds {
    int a = 0;
    int b = 0;

    bool is_loop() const {
        return a == b;
    }
    bool touches(int v) const {
        return a == v || b == v;
    }
    int other(int v) const {
        return v == a ? b : a;
    }
    bool operator==(const EdgeEnds &) const = default;
};

/// A finite cellulation of a closed orientable surface. Vertices, edges and
/// faces are indexed densely from zero; each face is the cyclic sequence of
/// edge ids along its boundary. Orientation is not tracked.
///
/// Construction validates every structural invariant and throws
/// ErrorKind::kIntegrity naming the first violation:
///   - edge endpoints and face entries are in range;
///   - every edge occupies exactly two face slots;
///   - consecutive edges of a face share a vertex and the face closes up as a walk;
///   - every vertex has an incident edge;
///   - V - E + F == 2 - 2 * genus.
class SurfaceComplex {
   public:
    SurfaceComplex(
        int genus, std::string label, int num_vertices, std::vector<EdgeEnds> edges,
        std::vector<std::vector<int>> faces);

    int genus() const {
        return genus_;
    }
    const std::string &label() const {
        return label_;
    }
    int num_vertices() const {
        return num_vertices_;
    }
    int num_edges() const {
        return static_cast<int>(edges_.size());
    }
    int num_faces() const {
        return static_cast<int>(faces_.size());
    }
    int euler_characteristic() const {
        return num_vertices() - num_edges() + num_faces();
    }

    const std::vector<EdgeEnds> &edges() const {
        return edges_;
    }
    const EdgeEnds &edge(int e) const {
        return edges_[static_cast<size_t>(e)];
    }
    const std::vector<std::vector<int>> &faces() const {
        return faces_;
    }
    const std::vector<int> &face(int f) const {
        return faces_[static_cast<size_t>(f)];
    }

    /// Vertex sequence of face f's boundary walk: edge i runs from walk[i] to walk[i+1].
    std::vector<int> face_walk(int f) const;

    /// The two face slots of edge e, as face ids (equal when the face repeats e).
    std::pair<int, int> edge_faces(int e) const;

    /// Faces whose boundary repeats an edge (their Z2 boundary loses that edge).
    std::vector<int> degenerate_faces() const;
    bool is_degenerate() const {
        return !degenerate_faces().empty();
    }

    /// Structural equality on the dense indexing, with face cycles compared up
    /// to rotation and reflection.
    bool same_structure(const SurfaceComplex &other) const;

   private:
    int genus_;
    std::string label_;
    int num_vertices_;
    std::vector<EdgeEnds> edges_;
    std::vector<std::vector<int>> faces_;
    std::vector<std::pair<int, int>> edge_faces_;
};

/// Lexicographically smallest rotation or reflection of a cyclic sequence.
std::vector<int> normalized_cycle(const std::vector<int> &cycle);

/// Dual cellulation: faces become vertices, vertices become faces, edge ids are kept.
SurfaceComplex dual_complex(const SurfaceComplex &c);

/// Reads the JSON complex format. Throws kInvalidInput for malformed JSON or
/// schema violations and kIntegrity for structural ones.
SurfaceComplex load_complex(std::istream &in);
SurfaceComplex load_complex_string(const std::string &text);
SurfaceComplex load_complex_file(const std::string &path);

/// Writes the JSON complex format with dense ids and normalized face cycles.
void save_complex(const SurfaceComplex &c, std::ostream &out);
std::string save_complex_string(const SurfaceComplex &c);

}  // namespace atqc

#endif
