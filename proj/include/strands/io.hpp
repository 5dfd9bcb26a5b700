#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "strands/affine.hpp"
#include "strands/clusters.hpp"
#include "strands/geometry.hpp"
#include "strands/quiver.hpp"
#include "strands/typea.hpp"

namespace strands::io {

using json = nlohmann::ordered_json;

inline json quiver_to_json(const Quiver& q) {
    json j;
    j["kind"] = q.kind == QuiverKind::TypeA ? "A" : "ATilde";
    json eps = json::array();
    for (Sign s : q.eps) eps.push_back(std::string(1, s));
    j["epsilon"] = eps;
    return j;
}

inline Quiver quiver_from_json(const json& j) {
    OrientationVector ov;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "A") ov.kind = QuiverKind::TypeA;
    else if (kind == "ATilde") ov.kind = QuiverKind::TypeATilde;
    else throw std::invalid_argument("quiver kind must be A or ATilde");
    for (const auto& e : j.at("epsilon")) {
        const std::string s = e.get<std::string>();
        if (s.size() != 1) throw std::invalid_argument("epsilon entries are '+'/'-'");
        ov.eps.push_back(s[0]);
    }
    return build_quiver(ov);
}

inline json module_to_json(const Quiver& q, const StringModule& m) {
    json j;
    if (q.kind == QuiverKind::TypeA) {
        j["form"] = "interval";
        j["x"] = m.lo;
        j["y"] = m.hi;
    } else {
        const auto w = winding_form(q, m);
        j["form"] = "winding";
        j["i"] = w.i;
        j["j"] = w.j;
        j["l"] = w.l;
    }
    return j;
}

inline StringModule module_from_json(const Quiver& q, const json& j) {
    const std::string form = j.at("form").get<std::string>();
    if (form == "interval") return interval_module(j.at("x").get<long>(), j.at("y").get<long>());
    if (form == "winding")
        return module_from_winding(q, j.at("i").get<int>(), j.at("j").get<int>(),
                                   j.at("l").get<long>());
    throw std::invalid_argument("module form must be interval or winding");
}

inline json strand_to_json(const Strand& s) { return json{{"i", s.lo}, {"j", s.hi}}; }

inline Strand strand_from_json(const json& j) {
    return Strand{j.at("i").get<long>(), j.at("j").get<long>(), false};
}

inline json arc_to_json(const Arc& a) {
    json j;
    j["from"] = a.from;
    j["to"] = a.to;
    j["lambda"] = a.lambda;
    j["fromSide"] = a.from == 0 ? "inner" : "outer";
    j["toSide"] = a.to == 0 ? "inner" : "outer";
    return j;
}

inline Arc arc_from_json(const json& j) {
    return normalize_arc(j.at("from").get<int>(), j.at("to").get<int>(),
                         j.at("lambda").get<long>());
}

inline json tree_to_json(const typea::TernaryTree::Node* node) {
    if (!node || node->leaf) return nullptr;
    json j;
    j["label"] = node->label.empty() ? "R" : node->label;
    j["strand"] = strand_to_json(node->strand);
    j["a"] = tree_to_json(node->child[0].get());
    j["b"] = tree_to_json(node->child[1].get());
    j["c"] = tree_to_json(node->child[2].get());
    return j;
}

inline json label_word_to_json(const affine::Label::Word& w) {
    json j;
    j["word"] = w.text;
    j["circled"] = w.circled;
    if (w.circled) {
        json kids = json::array();
        for (const auto& c : w.children) kids.push_back(label_word_to_json(c));
        j["children"] = kids;
    }
    return j;
}

inline json label_to_json(const affine::Label& l) {
    json j;
    j["n"] = l.n;
    json a = json::array(), b = json::array();
    for (const auto& w : l.under_a) a.push_back(label_word_to_json(w));
    for (const auto& w : l.under_b) b.push_back(label_word_to_json(w));
    j["underA"] = a;
    j["underB"] = b;
    return j;
}

inline json cluster_to_json(const Quiver& q, const clusters::Cluster& c) {
    json arr = json::array();
    for (const auto& o : c) {
        if (o.shifted)
            arr.push_back(json{{"shifted", true}, {"vertex", o.vertex}});
        else {
            json m = module_to_json(q, o.module);
            m["shifted"] = false;
            m["name"] = pretty_name(q, o.module);
            arr.push_back(m);
        }
    }
    return arr;
}

// Document envelope: every persisted file carries its schema version, kind,
// payload, and the command that produced it.
struct Document {
    int schema_version = 1;
    std::string kind;  // strandDiagram | arcDiagram | triangulation | tree | path | label | cluster
    json payload;
    std::string command;
    std::vector<std::string> arguments;
};

inline json document_to_json(const Document& d) {
    json j;
    j["schemaVersion"] = d.schema_version;
    j["kind"] = d.kind;
    j["payload"] = d.payload;
    j["provenance"] = json{{"command", d.command}, {"arguments", d.arguments}};
    return j;
}

inline Document document_from_json(const json& j) {
    Document d;
    d.schema_version = j.at("schemaVersion").get<int>();
    if (d.schema_version != 1) throw std::invalid_argument("unsupported schemaVersion");
    d.kind = j.at("kind").get<std::string>();
    d.payload = j.at("payload");
    if (j.contains("provenance")) {
        d.command = j["provenance"].value("command", "");
        if (j["provenance"].contains("arguments"))
            for (const auto& a : j["provenance"]["arguments"])
                d.arguments.push_back(a.get<std::string>());
    }
    return d;
}

inline json arc_diagram_payload(const Quiver& q, const ArcDiagram& d) {
    json j;
    j["quiver"] = quiver_to_json(q);
    json arcs = json::array();
    for (const auto& a : d) arcs.push_back(arc_to_json(a));
    j["arcs"] = arcs;
    return j;
}

inline std::pair<Quiver, ArcDiagram> arc_diagram_from_payload(const json& payload) {
    const Quiver q = quiver_from_json(payload.at("quiver"));
    ArcDiagram d;
    for (const auto& a : payload.at("arcs")) d.push_back(arc_from_json(a));
    return {q, sorted_diagram(d)};
}

inline json strand_diagram_payload(const Quiver& q, const std::vector<Strand>& d) {
    json j;
    j["quiver"] = quiver_to_json(q);
    json strands = json::array();
    for (const auto& s : d) strands.push_back(strand_to_json(s));
    j["strands"] = strands;
    return j;
}

inline std::pair<Quiver, std::vector<Strand>> strand_diagram_from_payload(const json& payload) {
    const Quiver q = quiver_from_json(payload.at("quiver"));
    std::vector<Strand> d;
    for (const auto& s : payload.at("strands")) d.push_back(strand_from_json(s));
    std::sort(d.begin(), d.end());
    return {q, d};
}

}  // namespace strands::io
