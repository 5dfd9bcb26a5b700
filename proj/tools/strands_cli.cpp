// Command-line front end: enumerate, count, map, twist, orbit, verify, render.
// Exit codes: 0 success, 1 validation failure, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "strands/affine.hpp"
#include "strands/clusters.hpp"
#include "strands/counting.hpp"
#include "strands/geometry.hpp"
#include "strands/homology.hpp"
#include "strands/io.hpp"
#include "strands/quiver.hpp"
#include "strands/render.hpp"
#include "strands/typea.hpp"
#include "strands/verify.hpp"

namespace {

using strands::io::json;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_document_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw ValidationError("cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return json::parse(text);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ValidationError("cannot write " + out_path);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

std::vector<std::string> g_argv;

void emit_document(const std::string& kind, json payload, const std::string& command,
                   const std::string& out_path) {
    strands::io::Document d;
    d.kind = kind;
    d.payload = std::move(payload);
    d.command = command;
    d.arguments = g_argv;
    write_output(strands::io::document_to_json(d).dump(2), out_path);
}

int cmd_enumerate_typea(int n, bool count_only, const std::string& format,
                        const std::string& out) {
    const auto sets = strands::typea::enumerate_sets(n);
    if (count_only) {
        write_output(std::to_string(sets.size()), out);
        return 0;
    }
    const strands::Quiver q = strands::straight_a(std::max(n, 1));
    if (format == "table") {
        std::string text;
        for (const auto& set : sets) {
            std::string line;
            for (const auto& m : set) {
                if (!line.empty()) line += " ";
                line += strands::module_name(q, m);
            }
            text += line + "\n";
        }
        write_output(text, out);
        return 0;
    }
    json payload;
    payload["quiver"] = strands::io::quiver_to_json(q);
    payload["count"] = sets.size();
    json arr = json::array();
    for (const auto& set : sets) {
        json s = json::array();
        for (const auto& m : set) s.push_back(strands::io::module_to_json(q, m));
        arr.push_back(s);
    }
    payload["sets"] = arr;
    emit_document("enumeration", payload, "enumerate typea", out);
    return 0;
}

int cmd_enumerate_affine(int n, bool count_only, bool families, const std::string& format,
                         const std::string& out) {
    const auto reps = strands::affine::enumerate_representatives(n);
    const strands::Quiver q = strands::straight_a_tilde(n);
    if (count_only) {
        write_output(std::to_string(families ? reps.size() * n : reps.size()), out);
        return 0;
    }
    if (format == "table") {
        std::string text;
        for (const auto& rep : reps) {
            std::string line;
            for (const auto& m : rep.strands) {
                if (!line.empty()) line += " ";
                line += strands::module_name(q, m);
            }
            text += line + "\n";
        }
        write_output(text, out);
        return 0;
    }
    json payload;
    payload["quiver"] = strands::io::quiver_to_json(q);
    payload["representativeCount"] = reps.size();
    payload["familyCount"] = reps.size() * n;
    json arr = json::array();
    for (const auto& rep : reps) {
        json entry;
        json strands_json = json::array();
        for (const auto& s : rep.strands) strands_json.push_back(strands::io::strand_to_json(s));
        entry["strands"] = strands_json;
        json arcs = json::array();
        for (const auto& a : strands::affine::rep_to_arcs(q, rep))
            arcs.push_back(strands::io::arc_to_json(a));
        entry["arcs"] = arcs;
        if (families) {
            json orbit = json::array();
            for (const auto& d : strands::affine::expand_orbit(q, rep)) {
                json one = json::array();
                for (const auto& a : d) one.push_back(strands::io::arc_to_json(a));
                orbit.push_back(one);
            }
            entry["orbit"] = orbit;
        }
        arr.push_back(entry);
    }
    payload["representatives"] = arr;
    emit_document("enumeration", payload, "enumerate affine", out);
    return 0;
}

int cmd_enumerate_clusters(int n, bool count_only, const std::string& format,
                           const std::string& out) {
    const strands::Quiver q = strands::straight_a_tilde(n);
    const auto ts = strands::clusters::small_triangulations(q);
    if (count_only) {
        write_output(std::to_string(ts.size()), out);
        return 0;
    }
    if (format == "table") {
        std::string text;
        for (const auto& t : ts)
            text += strands::clusters::cluster_name(q, strands::clusters::cluster_of(q, t)) +
                    "\n";
        write_output(text, out);
        return 0;
    }
    json payload;
    payload["quiver"] = strands::io::quiver_to_json(q);
    payload["count"] = ts.size();
    json arr = json::array();
    for (const auto& t : ts) {
        json entry;
        json arcs = json::array();
        for (const auto& a : t) arcs.push_back(strands::io::arc_to_json(a));
        entry["triangulation"] = arcs;
        const auto cluster = strands::clusters::cluster_of(q, t);
        entry["cluster"] = strands::io::cluster_to_json(q, cluster);
        entry["clusterName"] = strands::clusters::cluster_name(q, cluster);
        entry["fundamental"] = strands::check_fundamental_arcs(q, t).ok;
        arr.push_back(entry);
    }
    payload["triangulations"] = arr;
    emit_document("enumeration", payload, "enumerate clusters", out);
    return 0;
}

int cmd_count(const std::string& formula, long long n, long long k, long long a, long long b,
              const std::string& out) {
    strands::BigUInt v;
    if (formula == "catalan") v = strands::catalan(n);
    else if (formula == "kcatalan") v = strands::k_catalan(k, n);
    else if (formula == "rothe") v = strands::rothe(a, b, n);
    else if (formula == "exceptional") v = strands::exceptional_count(n);
    else throw ValidationError("unknown formula " + formula);
    write_output(v.str(), out);
    return 0;
}

int cmd_map_typea(const std::string& in, const std::string& to, const std::string& out) {
    const auto doc = strands::io::document_from_json(read_document_json(in));
    if (doc.kind != "strandDiagram")
        throw ValidationError("map typea expects a strandDiagram document");
    auto [q, strands_vec] = strands::io::strand_diagram_from_payload(doc.payload);
    if (q.kind != strands::QuiverKind::TypeA)
        throw ValidationError("map typea needs a type A diagram");
    std::vector<strands::StringModule> mods;
    for (const auto& s : strands_vec) mods.push_back(strands::canonical_module(q, s.lo, s.hi));
    std::sort(mods.begin(), mods.end());
    const int n = q.vertex_count();
    const auto tree = strands::typea::ternary_tree(n, mods);
    if (to == "tree") {
        json payload;
        payload["quiver"] = strands::io::quiver_to_json(q);
        payload["tree"] = strands::io::tree_to_json(tree.root.get());
        emit_document("tree", payload, "map typea", out);
        return 0;
    }
    const auto path = strands::typea::tree_to_lattice_path(tree);
    emit_document("path", json{{"steps", path.steps}, {"height", n}}, "map typea", out);
    return 0;
}

int cmd_map_affine(const std::string& in, const std::string& to, const std::string& out) {
    const auto doc = strands::io::document_from_json(read_document_json(in));
    strands::Quiver q = strands::straight_a_tilde(1);
    strands::ArcDiagram arcs;
    if (doc.kind == "arcDiagram" || doc.kind == "triangulation") {
        auto [qq, aa] = strands::io::arc_diagram_from_payload(doc.payload);
        q = qq;
        arcs = aa;
    } else if (doc.kind == "strandDiagram") {
        auto [qq, strands_vec] = strands::io::strand_diagram_from_payload(doc.payload);
        q = qq;
        std::vector<strands::StringModule> mods;
        for (const auto& s : strands_vec)
            mods.push_back(strands::canonical_module(q, s.lo, s.hi));
        arcs = strands::arcs_of_modules(q, mods);
    } else {
        throw ValidationError("map affine expects an arcDiagram or strandDiagram document");
    }
    if (q.kind != strands::QuiverKind::TypeATilde || !q.straight())
        throw ValidationError("map affine needs a straight A~ diagram");
    const auto [rep, word] = strands::affine::representative_of(q, arcs);
    const auto label = strands::affine::label_diagram(rep);
    if (to == "label") {
        json payload = strands::io::label_to_json(label);
        payload["twistWord"] = json{{"inner", word.inner}, {"outer", word.outer}};
        emit_document("label", payload, "map affine", out);
        return 0;
    }
    const auto path = strands::affine::label_to_path(label);
    emit_document("path", json{{"steps", path.steps}, {"height", rep.n - 1}}, "map affine", out);
    return 0;
}

int cmd_map_cluster(const std::string& in, const std::string& out) {
    const auto doc = strands::io::document_from_json(read_document_json(in));
    if (doc.kind != "triangulation" && doc.kind != "arcDiagram")
        throw ValidationError("map cluster expects a triangulation document");
    auto [q, arcs] = strands::io::arc_diagram_from_payload(doc.payload);
    if (!strands::clusters::is_triangulation(q, arcs))
        throw ValidationError("input is not a triangulation");
    const auto cluster = strands::clusters::cluster_of(q, arcs);
    json payload;
    payload["quiver"] = strands::io::quiver_to_json(q);
    payload["summands"] = strands::io::cluster_to_json(q, cluster);
    payload["name"] = strands::clusters::cluster_name(q, cluster);
    payload["conventionsCoincide"] = strands::clusters::conventions_coincide(q, arcs);
    emit_document("cluster", payload, "map cluster", out);
    return 0;
}

int cmd_twist(const std::string& in, long inner, long outer, const std::string& out) {
    const auto doc = strands::io::document_from_json(read_document_json(in));
    if (doc.kind != "arcDiagram" && doc.kind != "triangulation")
        throw ValidationError("twist expects an arcDiagram document");
    auto [q, arcs] = strands::io::arc_diagram_from_payload(doc.payload);
    if (outer < 0) throw ValidationError("outer twist count must be >= 0");
    for (long i = 0; i < outer; ++i) arcs = strands::outer_twist(q, arcs);
    arcs = strands::inner_twist(arcs, inner);
    emit_document(doc.kind, strands::io::arc_diagram_payload(q, arcs), "twist", out);
    return 0;
}

int cmd_orbit(const std::string& in, const std::string& out) {
    const auto doc = strands::io::document_from_json(read_document_json(in));
    if (doc.kind != "arcDiagram" && doc.kind != "strandDiagram")
        throw ValidationError("orbit expects an arcDiagram or strandDiagram document");
    strands::Quiver q = strands::straight_a_tilde(1);
    strands::ArcDiagram arcs;
    if (doc.kind == "arcDiagram") {
        auto [qq, aa] = strands::io::arc_diagram_from_payload(doc.payload);
        q = qq;
        arcs = aa;
    } else {
        auto [qq, strands_vec] = strands::io::strand_diagram_from_payload(doc.payload);
        q = qq;
        std::vector<strands::StringModule> mods;
        for (const auto& s : strands_vec)
            mods.push_back(strands::canonical_module(q, s.lo, s.hi));
        arcs = strands::arcs_of_modules(q, mods);
    }
    const auto [rep, word] = strands::affine::representative_of(q, arcs);
    json payload;
    payload["quiver"] = strands::io::quiver_to_json(q);
    payload["twistWord"] = json{{"inner", word.inner}, {"outer", word.outer}};
    json orbit = json::array();
    for (const auto& d : strands::affine::expand_orbit(q, rep)) {
        json one = json::array();
        for (const auto& a : d) one.push_back(strands::io::arc_to_json(a));
        orbit.push_back(one);
    }
    payload["orbit"] = orbit;
    emit_document("enumeration", payload, "orbit", out);
    return 0;
}

int cmd_verify(const std::string& which, int n, const std::string& out) {
    std::string text;
    bool all_ok = true;
    bool found = false;
    for (const auto& [name, runner] : strands::verify::registry()) {
        if (which != "all" && which != name) continue;
        found = true;
        const auto r = runner(n);
        all_ok = all_ok && r.ok;
        text += std::string(r.ok ? "[PASS] " : "[FAIL] ") + r.property + ": " + r.detail + "\n";
    }
    if (!found) throw ValidationError("unknown property " + which);
    write_output(text, out);
    return all_ok ? 0 : 1;
}

int cmd_render(const std::string& in, const std::string& format, const std::string& out) {
    const auto doc = strands::io::document_from_json(read_document_json(in));
    const bool tikz = format == "tikz";
    if (doc.kind == "arcDiagram" || doc.kind == "triangulation") {
        auto [q, arcs] = strands::io::arc_diagram_from_payload(doc.payload);
        write_output(tikz ? strands::render::annulus_tikz(q, arcs)
                          : strands::render::annulus_svg(q, arcs),
                     out);
        return 0;
    }
    if (doc.kind == "strandDiagram") {
        auto [q, d] = strands::io::strand_diagram_from_payload(doc.payload);
        write_output(tikz ? strands::render::strand_diagram_tikz(q, d)
                          : strands::render::strand_diagram_svg(q, d),
                     out);
        return 0;
    }
    if (doc.kind == "path") {
        strands::typea::LatticePath p{doc.payload.at("steps").get<std::string>()};
        write_output(tikz ? strands::render::lattice_path_tikz(p)
                          : strands::render::lattice_path_svg(p),
                     out);
        return 0;
    }
    if (doc.kind == "tree") {
        std::vector<strands::Strand> strands_vec;
        auto collect = [&](auto&& self, const json& node) -> void {
            if (node.is_null()) return;
            strands_vec.push_back(strands::io::strand_from_json(node.at("strand")));
            self(self, node.at("a"));
            self(self, node.at("b"));
            self(self, node.at("c"));
        };
        collect(collect, doc.payload.at("tree"));
        std::sort(strands_vec.begin(), strands_vec.end());
        const auto tree =
            strands::typea::ternary_tree(static_cast<int>(strands_vec.size()), strands_vec);
        write_output(tikz ? strands::render::tree_tikz(tree) : strands::render::tree_svg(tree),
                     out);
        return 0;
    }
    throw ValidationError("unsupported document kind for render: " + doc.kind);
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) g_argv.push_back(argv[i]);

    CLI::App app{"exceptional collections, clusters, and strand diagrams for type A and A~"};
    app.require_subcommand(1);

    std::string out_path, format = "json", seed_order = "canonical";
    int n = 3;
    bool count_only = false, families = false;

    auto* enumerate = app.add_subcommand("enumerate", "enumerate combinatorial objects");
    enumerate->require_subcommand(1);
    auto add_common = [&](CLI::App* c) {
        c->add_option("-n", n, "size parameter")->required();
        c->add_flag("--count-only", count_only, "print only the count");
        c->add_option("--format", format, "json|table")->check(CLI::IsMember({"json", "table"}));
        c->add_option("--seed-order", seed_order, "emission order (canonical only)")
            ->check(CLI::IsMember({"canonical"}));
        c->add_option("-o,--out", out_path, "output file (default stdout)");
    };
    auto* en_typea = enumerate->add_subcommand("typea", "exceptional sets of straight A_n");
    add_common(en_typea);
    auto* en_affine =
        enumerate->add_subcommand("affine", "family representatives of straight A~");
    add_common(en_affine);
    en_affine->add_flag("--families", families, "expand each outer class into its n families");
    auto* en_clusters = enumerate->add_subcommand("clusters", "small annulus triangulations");
    add_common(en_clusters);
    en_clusters->add_flag("--families", families,
                          "small triangulations are the family representatives");

    auto* count = app.add_subcommand("count", "closed-form counts");
    std::string formula = "rothe";
    long long cn = 0, ck = 3, ca = 4, cb = 3;
    count->add_option("--formula", formula, "catalan|kcatalan|rothe|exceptional")->required();
    count->add_option("-n", cn, "index")->required();
    count->add_option("-k", ck, "k for kcatalan");
    count->add_option("-a", ca, "a for rothe");
    count->add_option("-b", cb, "b for rothe");
    count->add_option("-o,--out", out_path, "output file");

    auto* map = app.add_subcommand("map", "apply a bijection to a document");
    map->require_subcommand(1);
    std::string in_path = "-", to = "path";
    auto* map_typea = map->add_subcommand("typea", "exceptional set -> tree or lattice path");
    map_typea->add_option("--in,--from", in_path, "input document (default stdin)");
    map_typea->add_option("--to", to, "tree|path")->check(CLI::IsMember({"tree", "path"}));
    map_typea->add_option("-o,--out", out_path, "output file");
    auto* map_affine = map->add_subcommand("affine", "A~ diagram -> label or Rothe path");
    map_affine->add_option("--in,--from", in_path, "input document (default stdin)");
    map_affine->add_option("--to", to, "label|path")->check(CLI::IsMember({"label", "path"}));
    map_affine->add_option("-o,--out", out_path, "output file");
    auto* map_cluster = map->add_subcommand("cluster", "triangulation -> cluster");
    map_cluster->add_option("--in,--from", in_path, "input document (default stdin)");
    map_cluster->add_option("-o,--out", out_path, "output file");

    auto* twist = app.add_subcommand("twist", "apply Dehn twists to an arc diagram");
    long inner = 0, outer = 0;
    twist->add_option("--in,--from", in_path, "input document (default stdin)");
    twist->add_option("--inner", inner, "signed number of 2-pi inner twists");
    twist->add_option("--outer", outer, "number of 2-pi/n clockwise outer twists");
    twist->add_option("-o,--out", out_path, "output file");

    auto* orbit = app.add_subcommand("orbit", "outer orbit of a diagram's family");
    bool expand = false;
    orbit->add_flag("--expand", expand, "list the n small diagrams of the outer class");
    orbit->add_option("--in,--from", in_path, "input document (default stdin)");
    orbit->add_option("-o,--out", out_path, "output file");

    auto* verify = app.add_subcommand("verify", "run oracle cross-checks and golden tables");
    std::string which = "all";
    int vn = 3;
    verify->add_option("property", which, "'all' or a property name");
    verify->add_option("-n", vn, "exhaustive range scale");
    verify->add_option("-o,--out", out_path, "output file");

    auto* render = app.add_subcommand("render", "emit SVG or TikZ for a document");
    std::string rformat = "svg";
    render->add_option("--in,--from", in_path, "input document (default stdin)");
    render->add_option("--format", rformat, "svg|tikz")->check(CLI::IsMember({"svg", "tikz"}));
    render->add_option("-o,--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (en_typea->parsed()) return cmd_enumerate_typea(n, count_only, format, out_path);
        if (en_affine->parsed())
            return cmd_enumerate_affine(n, count_only, families, format, out_path);
        if (en_clusters->parsed()) return cmd_enumerate_clusters(n, count_only, format, out_path);
        if (count->parsed()) return cmd_count(formula, cn, ck, ca, cb, out_path);
        if (map_typea->parsed()) return cmd_map_typea(in_path, to, out_path);
        if (map_affine->parsed()) return cmd_map_affine(in_path, to, out_path);
        if (map_cluster->parsed()) return cmd_map_cluster(in_path, out_path);
        if (twist->parsed()) return cmd_twist(in_path, inner, outer, out_path);
        if (orbit->parsed()) return cmd_orbit(in_path, out_path);
        if (verify->parsed()) return cmd_verify(which, vn, out_path);
        if (render->parsed()) return cmd_render(in_path, rformat, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
