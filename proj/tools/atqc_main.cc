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

// atqc: command-line front end. JSON and CSV go to stdout (or --out),
// diagnostics to stderr.
//
// Exit codes: 0 ok, 2 usage or invalid input, 3 verification discrepancy, 4 I/O.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "atqc/catalog.h"
#include "atqc/distance.h"
#include "atqc/error.h"
#include "atqc/geometry.h"
#include "atqc/homology.h"
#include "atqc/stabilizer.h"
#include "atqc/surface_complex.h"
#include "atqc/torus_builder.h"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDiscrepancy = 3;
constexpr int kExitIo = 4;

atqc::SurfaceComplex read_input(const std::string &path) {
    if (path.empty() || path == "-") {
        return atqc::load_complex(std::cin);
    }
    return atqc::load_complex_file(path);
}

// Runs `write` against --out when given, else stdout.
template <typename Fn>
void with_sink(const std::string &out_path, Fn write) {
    if (out_path.empty() || out_path == "-") {
        write(std::cout);
        std::cout.flush();
        if (!std::cout) {
            atqc::throw_io("failed writing to stdout");
        }
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        atqc::throw_io("cannot open " + out_path + " for writing");
    }
    write(out);
    out.close();
    if (!out) {
        atqc::throw_io("failed writing " + out_path);
    }
}

ordered_json edge_list(const atqc::BitVector &v) {
    return v.indices();
}

ordered_json params_json(const atqc::CodeParams &p) {
    ordered_json j;
    j["pair"] = p.pair.str();
    j["p"] = p.pair.p;
    j["q"] = p.pair.q;
    j["g"] = p.g;
    j["n"] = p.n;
    j["k"] = p.k;
    j["d_x"] = p.d_x;
    j["d_z"] = p.d_z;
    j["exactness"] = atqc::exactness_name(p.exactness);
    j["rate"] = p.rate.str();
    j["n_f"] = p.n_f.str();
    j["n_f_star"] = p.n_f_star.str();
    return j;
}

atqc::SchlafliPair parse_pair(const std::string &text) {
    std::string body = text;
    if (body.size() >= 2 && body.front() == '{' && body.back() == '}') {
        body = body.substr(1, body.size() - 2);
    }
    std::istringstream in(body);
    atqc::SchlafliPair pair;
    char comma = 0;
    if (!(in >> pair.p >> comma >> pair.q) || comma != ',' || !in.eof()) {
        atqc::throw_invalid("cannot parse pair \"" + text + "\"; expected p,q");
    }
    return pair;
}

void print_json(std::ostream &out, const ordered_json &j) {
    out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Asymmetric topological quantum codes on tessellated surfaces"};
    app.require_subcommand(1);

    int p = 0;
    int q = 0;
    int g = 0;
    std::string input;
    std::string out_path;

    auto *classify = app.add_subcommand("classify", "Geometry class of a {p,q} tessellation");
    classify->add_option("--p", p, "Edges per face")->required();
    classify->add_option("--q", q, "Faces per vertex")->required();

    bool swap = false;
    auto *params = app.add_subcommand("params", "Code parameters of {p,q} on the genus-g surface");
    params->add_option("--p", p, "Edges per face")->required();
    params->add_option("--q", q, "Faces per vertex")->required();
    params->add_option("--g", g, "Genus")->required();
    params->add_flag("--swap", swap, "Report the dual tessellation's code instead");

    std::optional<int> square;
    std::optional<int> hex_apothem;
    std::optional<int> hex_edge;
    bool dual = false;
    auto *build = app.add_subcommand("build", "Build a torus complex as JSON");
    auto *shape = build->add_option_group("shape");
    shape->add_option("--square", square, "l x l square torus");
    shape->add_option("--hex-apothem", hex_apothem, "Hexagonal torus, side 2*xi*apothem");
    shape->add_option("--hex-edge", hex_edge, "Hexagonal torus, side lambda*edge");
    shape->require_option(1);
    build->add_flag("--dual", dual, "Emit the dual complex");
    build->add_option("--out", out_path, "Output file (default stdout)");

    auto *check = app.add_subcommand("check", "Verify complex and stabilizer invariants");
    check->add_option("input", input, "Complex JSON (default stdin)");

    std::optional<int> ceiling;
    auto *distance = app.add_subcommand("distance", "Exact d_x and d_z with oracle cross-check");
    distance->add_option("input", input, "Complex JSON (default stdin)");
    distance->add_option("--oracle-ceiling", ceiling, "Largest n checked by exhaustive enumeration")
        ->check(CLI::PositiveNumber);

    std::string format = "alist";
    std::string matrix = "hz";
    auto *exporter = app.add_subcommand("export", "Write parity-check matrices");
    exporter->add_option("input", input, "Complex JSON (default stdin)");
    exporter->add_option("--format", format, "alist, dense-text or json")
        ->check(CLI::IsMember({"alist", "dense-text", "json"}));
    exporter->add_option("--matrix", matrix, "hx or hz (alist and dense-text)")->check(CLI::IsMember({"hx", "hz"}));
    exporter->add_option("--out", out_path, "Output file (default stdout)");

    auto *table = app.add_subcommand("table", "Regenerate the family tables as CSV");
    table->add_option("--out", out_path, "Output file (default stdout)");

    std::vector<std::string> pair_texts;
    int g_min = 2;
    int g_max = 10;
    auto *curves = app.add_subcommand("curves", "Distance and rate curves versus genus as CSV");
    curves->add_option("--pair", pair_texts, "Pair as p,q (repeatable; default 7,3 5,4 10,5)");
    curves->add_option("--g-min", g_min, "First genus");
    curves->add_option("--g-max", g_max, "Last genus");
    curves->add_option("--out", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*classify) {
            atqc::SchlafliPair pair{p, q};
            atqc::GeometryClass cls = atqc::classify(pair);
            ordered_json j;
            j["pair"] = pair.str();
            j["class"] = atqc::geometry_class_name(cls);
            j["key"] = pair.classification_key();
            print_json(std::cout, j);
        } else if (*params) {
            atqc::CodeParams result = atqc::family_params({p, q}, g);
            print_json(std::cout, params_json(swap ? atqc::swap_dual(result) : result));
        } else if (*build) {
            std::optional<atqc::SurfaceComplex> c;
            if (square) {
                c = atqc::build_square_torus({*square});
            } else {
                atqc::HexTorusSpec spec{
                    hex_apothem ? atqc::HexScaling::kApothem : atqc::HexScaling::kEdge,
                    hex_apothem ? *hex_apothem : *hex_edge};
                c = atqc::build_hex_torus(spec);
            }
            if (dual) {
                c = atqc::dual_complex(*c);
            }
            for (int f : c->degenerate_faces()) {
                std::cerr << "warning: face " << f << " repeats an edge in its boundary\n";
            }
            with_sink(out_path, [&](std::ostream &out) { atqc::save_complex(*c, out); });
        } else if (*check) {
            atqc::SurfaceComplex c = read_input(input);
            int b1 = atqc::betti1(c);
            atqc::CssCode code = atqc::build_css(c);
            atqc::StabilizerReport report = atqc::verify_stabilizers(code);
            ordered_json j;
            j["label"] = c.label();
            j["genus"] = c.genus();
            j["vertices"] = c.num_vertices();
            j["edges"] = c.num_edges();
            j["faces"] = c.num_faces();
            j["euler_characteristic"] = c.euler_characteristic();
            j["betti1"] = b1;
            j["n"] = code.n;
            j["k"] = code.k;
            j["independent_generators"] = report.independent_generators;
            j["expected_generators"] = report.expected_generators;
            j["degenerate_faces"] = c.degenerate_faces();
            j["warnings"] = code.warnings;
            j["ok"] = true;
            for (const auto &w : code.warnings) {
                std::cerr << "warning: " << w << "\n";
            }
            print_json(std::cout, j);
        } else if (*distance) {
            atqc::SurfaceComplex c = read_input(input);
            int limit = ceiling ? *ceiling : atqc::oracle_ceiling_from_env();
            atqc::DistanceResult r = atqc::certified_distances(c, limit);
            if (r.method == atqc::DistanceMethod::kSearch) {
                std::cerr << "note: n = " << c.num_edges() << " exceeds the oracle ceiling " << limit
                          << "; search result not cross-checked\n";
            }
            ordered_json j;
            j["label"] = c.label();
            j["n"] = c.num_edges();
            j["k"] = 2 * c.genus();
            j["d_x"] = r.d_x;
            j["d_z"] = r.d_z;
            j["method"] = atqc::distance_method_name(r.method);
            j["witness_x"] = edge_list(r.witness_x);
            j["witness_z"] = edge_list(r.witness_z);
            print_json(std::cout, j);
        } else if (*exporter) {
            atqc::CssCode code = atqc::build_css(read_input(input));
            atqc::CheckFormat fmt = format == "alist"        ? atqc::CheckFormat::kAlist
                                    : format == "dense-text" ? atqc::CheckFormat::kDenseText
                                                             : atqc::CheckFormat::kJson;
            atqc::CheckMatrix which = matrix == "hx" ? atqc::CheckMatrix::kHx : atqc::CheckMatrix::kHz;
            with_sink(out_path, [&](std::ostream &out) { atqc::export_checks(code, fmt, which, out); });
        } else if (*table) {
            with_sink(out_path, [](std::ostream &out) { atqc::emit_tables(out); });
        } else if (*curves) {
            std::vector<atqc::SchlafliPair> pairs;
            for (const auto &text : pair_texts) {
                pairs.push_back(parse_pair(text));
            }
            if (pairs.empty()) {
                pairs = {{7, 3}, {5, 4}, {10, 5}};
            }
            with_sink(out_path, [&](std::ostream &out) { atqc::emit_curves(pairs, g_min, g_max, out); });
        }
    } catch (const atqc::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case atqc::ErrorKind::kDiscrepancy:
                return kExitDiscrepancy;
            case atqc::ErrorKind::kIo:
                return kExitIo;
            default:
                return kExitUsage;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
