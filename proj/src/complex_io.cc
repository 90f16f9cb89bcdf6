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

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "atqc/error.h"
#include "atqc/surface_complex.h"
#include "json.hpp"

namespace atqc {

namespace {

using nlohmann::json;

void require_keys(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
    if (!obj.is_object()) {
        throw_invalid(where + " must be a JSON object");
    }
    for (const auto &item : obj.items()) {
        if (!allowed.contains(item.key())) {
            throw_invalid(where + ": unknown key \"" + item.key() + "\"");
        }
    }
    for (const auto &key : allowed) {
        if (!obj.contains(key)) {
            throw_invalid(where + ": missing key \"" + key + "\"");
        }
    }
}

int as_int(const json &value, const std::string &where) {
    if (!value.is_number_integer()) {
        throw_invalid(where + " must be an integer");
    }
    return value.get<int>();
}

const json &as_array(const json &value, const std::string &where) {
    if (!value.is_array()) {
        throw_invalid(where + " must be an array");
    }
    return value;
}

SurfaceComplex from_json(const json &doc) {
    require_keys(doc, {"genus", "label", "vertices", "edges", "faces"}, "complex");
    int genus = as_int(doc["genus"], "\"genus\"");
    if (!doc["label"].is_string()) {
        throw_invalid("\"label\" must be a string");
    }

    std::map<int, int> vertex_index;
    for (const auto &v : as_array(doc["vertices"], "\"vertices\"")) {
        int id = as_int(v, "vertex id");
        if (!vertex_index.emplace(id, static_cast<int>(vertex_index.size())).second) {
            throw_invalid("duplicate vertex id " + std::to_string(id));
        }
    }

    std::map<int, int> edge_index;
    std::vector<EdgeEnds> edges;
    for (const auto &e : as_array(doc["edges"], "\"edges\"")) {
        require_keys(e, {"id", "ends"}, "edge");
        int id = as_int(e["id"], "edge id");
        const json &ends = as_array(e["ends"], "edge " + std::to_string(id) + " \"ends\"");
        if (ends.size() != 2) {
            throw_invalid("edge " + std::to_string(id) + " must have exactly two ends");
        }
        EdgeEnds mapped;
        int *slots[2] = {&mapped.a, &mapped.b};
        for (size_t i = 0; i < 2; i++) {
            int v = as_int(ends[i], "edge end");
            auto it = vertex_index.find(v);
            if (it == vertex_index.end()) {
                throw_integrity("edge " + std::to_string(id) + " references unknown vertex " + std::to_string(v));
            }
            *slots[i] = it->second;
        }
        if (!edge_index.emplace(id, static_cast<int>(edges.size())).second) {
            throw_invalid("duplicate edge id " + std::to_string(id));
        }
        edges.push_back(mapped);
    }

    std::set<int> face_ids;
    std::vector<std::vector<int>> faces;
    for (const auto &f : as_array(doc["faces"], "\"faces\"")) {
        require_keys(f, {"id", "edge_cycle"}, "face");
        int id = as_int(f["id"], "face id");
        if (!face_ids.insert(id).second) {
            throw_invalid("duplicate face id " + std::to_string(id));
        }
        std::vector<int> cycle;
        for (const auto &e : as_array(f["edge_cycle"], "face " + std::to_string(id) + " \"edge_cycle\"")) {
            int eid = as_int(e, "face edge");
            auto it = edge_index.find(eid);
            if (it == edge_index.end()) {
                throw_integrity("face " + std::to_string(id) + " references unknown edge " + std::to_string(eid));
            }
            cycle.push_back(it->second);
        }
        faces.push_back(std::move(cycle));
    }

    return SurfaceComplex(
        genus, doc["label"].get<std::string>(), static_cast<int>(vertex_index.size()), std::move(edges),
        std::move(faces));
}

}  // namespace

SurfaceComplex load_complex(std::istream &in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &ex) {
        throw_invalid(std::string("malformed JSON: ") + ex.what());
    }
    return from_json(doc);
}

SurfaceComplex load_complex_string(const std::string &text) {
    std::istringstream in(text);
    return load_complex(in);
}

SurfaceComplex load_complex_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw_io("cannot open " + path);
    }
    return load_complex(in);
}

void save_complex(const SurfaceComplex &c, std::ostream &out) {
    // One edge or face per line keeps files diffable; key order follows the schema.
    out << "{\n";
    out << "  \"genus\": " << c.genus() << ",\n";
    out << "  \"label\": " << json(c.label()).dump() << ",\n";
    out << "  \"vertices\": [";
    for (int v = 0; v < c.num_vertices(); v++) {
        out << (v ? ", " : "") << v;
    }
    out << "],\n";
    out << "  \"edges\": [\n";
    for (int e = 0; e < c.num_edges(); e++) {
        auto [a, b] = std::minmax(c.edge(e).a, c.edge(e).b);
        out << "    {\"id\": " << e << ", \"ends\": [" << a << ", " << b << "]}"
            << (e + 1 < c.num_edges() ? ",\n" : "\n");
    }
    out << "  ],\n";
    out << "  \"faces\": [\n";
    for (int f = 0; f < c.num_faces(); f++) {
        out << "    {\"id\": " << f << ", \"edge_cycle\": [";
        auto cycle = normalized_cycle(c.face(f));
        for (size_t i = 0; i < cycle.size(); i++) {
            out << (i ? ", " : "") << cycle[i];
        }
        out << "]}" << (f + 1 < c.num_faces() ? ",\n" : "\n");
    }
    out << "  ]\n";
    out << "}\n";
    if (!out) {
        throw_io("failed writing complex");
    }
}

std::string save_complex_string(const SurfaceComplex &c) {
    std::ostringstream out;
    save_complex(c, out);
    return out.str();
}

}  // namespace atqc
