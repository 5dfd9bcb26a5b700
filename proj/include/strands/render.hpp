#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "strands/affine.hpp"
#include "strands/geometry.hpp"
#include "strands/quiver.hpp"
#include "strands/typea.hpp"

// Write-only figure output. Control points are fixed functions of endpoint
// angles and winding counts, so identical input gives identical bytes.
namespace strands::render {

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0);  // avoid -0.00
    return buf;
}

struct Pt {
    double x = 0, y = 0;
};

// screen coordinates: y grows downward, angles sweep clockwise
inline Pt polar(double cx, double cy, double r, double theta) {
    return {cx + r * std::cos(theta), cy + r * std::sin(theta)};
}

inline std::string polyline_svg(const std::vector<Pt>& pts, const char* color) {
    std::string s = "<polyline fill=\"none\" stroke=\"";
    s += color;
    s += "\" stroke-width=\"1.5\" points=\"";
    for (const auto& p : pts) s += num(p.x) + "," + num(p.y) + " ";
    s += "\"/>\n";
    return s;
}

inline std::string polyline_tikz(const std::vector<Pt>& pts) {
    std::string s = "\\draw plot[smooth] coordinates {";
    for (const auto& p : pts)
        s += "(" + num(p.x / 50.0) + "," + num(-p.y / 50.0) + ")";
    s += "};\n";
    return s;
}

// sampled spiral/chord geometry shared by the SVG and TikZ backends
struct AnnulusGeometry {
    int n = 1;
    double cx = 260, cy = 260, router = 220, rinner = 70;

    double outer_angle(int i) const { return -M_PI / 2 + (2.0 * i - 1) * M_PI / n; }
    double inner_angle() const { return -M_PI / 2; }

    std::vector<Pt> arc_points(const Arc& a) const {
        std::vector<Pt> pts;
        const int samples = 96;
        if (a.loop()) {
            const double r = rinner + 18 + 10 * std::abs(a.lambda);
            for (int s = 0; s <= samples; ++s) {
                const double t = inner_angle() + 2 * M_PI * s / samples;
                pts.push_back(polar(cx, cy, s == 0 || s == samples ? rinner : r, t));
            }
            return pts;
        }
        if (a.bridging()) {
            const int i = a.from != 0 ? a.from : a.to;
            const double ti = outer_angle(i);
            double sweep = std::fmod(inner_angle() - ti + 4 * M_PI, 2 * M_PI);
            if (sweep == 0) sweep = 2 * M_PI;
            sweep += 2 * M_PI * a.twist();
            for (int s = 0; s <= samples; ++s) {
                const double f = static_cast<double>(s) / samples;
                pts.push_back(polar(cx, cy, router + (rinner - router) * f, ti + sweep * f));
            }
            return pts;
        }
        // exterior: clockwise chord dipping toward the inner circle
        const double tu = outer_angle(a.from);
        double span = std::fmod(outer_angle(a.to) - tu + 4 * M_PI, 2 * M_PI);
        if (span == 0) span = 2 * M_PI;
        const double dip = (router - rinner) * std::min(0.85, 0.25 + span / (2 * M_PI));
        for (int s = 0; s <= samples; ++s) {
            const double f = static_cast<double>(s) / samples;
            pts.push_back(polar(cx, cy, router - dip * std::sin(M_PI * f), tu + span * f));
        }
        return pts;
    }
};

}  // namespace detail

inline std::string annulus_svg(const Quiver& q, const ArcDiagram& d) {
    using namespace detail;
    AnnulusGeometry g;
    g.n = q.vertex_count() - 1;
    std::string s =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"520\" "
        "viewBox=\"0 0 520 520\">\n";
    s += "<circle cx=\"" + num(g.cx) + "\" cy=\"" + num(g.cy) + "\" r=\"" + num(g.router) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
    s += "<circle cx=\"" + num(g.cx) + "\" cy=\"" + num(g.cy) + "\" r=\"" + num(g.rinner) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
    for (const auto& a : d) s += polyline_svg(g.arc_points(a), "#16309f");
    const Pt p0 = polar(g.cx, g.cy, g.rinner, g.inner_angle());
    s += "<circle cx=\"" + num(p0.x) + "\" cy=\"" + num(p0.y) + "\" r=\"4\"/>\n";
    s += "<text x=\"" + num(p0.x + 8) + "\" y=\"" + num(p0.y + 14) + "\">0</text>\n";
    for (int i = 1; i <= g.n; ++i) {
        const Pt p = polar(g.cx, g.cy, g.router, g.outer_angle(i));
        const Pt lp = polar(g.cx, g.cy, g.router + 14, g.outer_angle(i));
        s += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"4\"/>\n";
        s += "<text x=\"" + num(lp.x - 4) + "\" y=\"" + num(lp.y + 4) + "\">" +
             std::to_string(i) + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

inline std::string annulus_tikz(const Quiver& q, const ArcDiagram& d) {
    using namespace detail;
    AnnulusGeometry g;
    g.n = q.vertex_count() - 1;
    std::string s = "\\begin{tikzpicture}\n";
    s += "\\draw (" + num(g.cx / 50) + "," + num(-g.cy / 50) + ") circle (" +
         num(g.router / 50) + ");\n";
    s += "\\draw (" + num(g.cx / 50) + "," + num(-g.cy / 50) + ") circle (" +
         num(g.rinner / 50) + ");\n";
    for (const auto& a : d) s += polyline_tikz(g.arc_points(a));
    const Pt p0 = polar(g.cx, g.cy, g.rinner, g.inner_angle());
    s += "\\fill (" + num(p0.x / 50) + "," + num(-p0.y / 50) + ") circle (2pt) node[below]{$0$};\n";
    for (int i = 1; i <= g.n; ++i) {
        const Pt p = polar(g.cx, g.cy, g.router, g.outer_angle(i));
        s += "\\fill (" + num(p.x / 50) + "," + num(-p.y / 50) + ") circle (2pt) node[above]{$" +
             std::to_string(i) + "$};\n";
    }
    s += "\\end{tikzpicture}\n";
    return s;
}

// Strand diagrams on the marked line; strands dip below '+' points and rise
// above '-' points, with depth by span so nested strands stay apart.
inline std::vector<detail::Pt> strand_line_points(const Quiver& q, const Strand& s, double x0,
                                                  double step, double y0) {
    std::vector<detail::Pt> pts;
    pts.push_back({x0 + step * s.lo, y0});
    const double depth = 14 + 7.0 * s.length();
    if (s.length() == 1) {
        pts.push_back({x0 + step * (s.lo + 0.5), y0 + depth});
    } else {
        for (long k = s.lo + 1; k < s.hi; ++k) {
            const double dir = q.sign_at(k) == '+' ? 1.0 : -1.0;  // below = +y on screen
            pts.push_back({x0 + step * k, y0 + dir * depth});
        }
    }
    pts.push_back({x0 + step * s.hi, y0});
    return pts;
}

inline std::string strand_diagram_svg(const Quiver& q, const std::vector<Strand>& d) {
    using namespace detail;
    long lo = 0, hi = 1;
    for (const auto& s : d) { lo = std::min(lo, s.lo); hi = std::max(hi, s.hi); }
    const double step = 60, x0 = 40 - step * lo, y0 = 160;
    const double width = x0 + step * hi + 40;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
                      "\" height=\"320\" viewBox=\"0 0 " + num(width) + " 320\">\n";
    for (const auto& s : d)
        out += polyline_svg(strand_line_points(q, s, x0, step, y0), "#16309f");
    for (long k = lo; k <= hi; ++k) {
        out += "<circle cx=\"" + num(x0 + step * k) + "\" cy=\"" + num(y0) + "\" r=\"3\"/>\n";
        out += "<text x=\"" + num(x0 + step * k - 4) + "\" y=\"" + num(y0 - 10) + "\">" +
               std::to_string(k) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

inline std::string lattice_path_svg(const typea::LatticePath& p) {
    using namespace detail;
    const double step = 30, x0 = 30, y0 = 30;
    long x = 0, y = 0, maxx = 1, maxy = 1;
    std::vector<Pt> pts{{x0, y0}};
    for (char c : p.steps) {
        if (c == 'U') ++y;
        else ++x;
        maxx = std::max(maxx, x);
        maxy = std::max(maxy, y);
        pts.push_back({x0 + step * x, y0 + step * y});
    }
    const double w = x0 * 2 + step * maxx, h = y0 * 2 + step * maxy;
    // flip so y grows upward
    for (auto& pt : pts) pt.y = h - pt.y;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) +
                      "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) +
                      "\">\n";
    for (long gx = 0; gx <= maxx; ++gx)
        out += "<line x1=\"" + num(x0 + step * gx) + "\" y1=\"" + num(h - y0) + "\" x2=\"" +
               num(x0 + step * gx) + "\" y2=\"" + num(h - y0 - step * maxy) +
               "\" stroke=\"#dddddd\"/>\n";
    for (long gy = 0; gy <= maxy; ++gy)
        out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(h - y0 - step * gy) + "\" x2=\"" +
               num(x0 + step * maxx) + "\" y2=\"" + num(h - y0 - step * gy) +
               "\" stroke=\"#dddddd\"/>\n";
    out += polyline_svg(pts, "#a50021");
    out += "</svg>\n";
    return out;
}

inline std::string strand_diagram_tikz(const Quiver& q, const std::vector<Strand>& d) {
    using namespace detail;
    long lo = 0, hi = 1;
    for (const auto& s : d) { lo = std::min(lo, s.lo); hi = std::max(hi, s.hi); }
    std::string out = "\\begin{tikzpicture}\n";
    for (const auto& s : d) out += polyline_tikz(strand_line_points(q, s, 0, 60, 0));
    for (long k = lo; k <= hi; ++k)
        out += "\\fill (" + num(60.0 * k / 50) + ",0) circle (2pt) node[above=4pt]{$" +
               std::to_string(k) + "$};\n";
    out += "\\end{tikzpicture}\n";
    return out;
}

inline std::string lattice_path_tikz(const typea::LatticePath& p) {
    using namespace detail;
    long x = 0, y = 0, maxx = 1, maxy = 1;
    std::vector<std::pair<long, long>> pts{{0, 0}};
    for (char c : p.steps) {
        if (c == 'U') ++y;
        else ++x;
        maxx = std::max(maxx, x);
        maxy = std::max(maxy, y);
        pts.push_back({x, y});
    }
    std::string out = "\\begin{tikzpicture}[scale=0.6]\n";
    out += "\\draw[help lines] (0,0) grid (" + std::to_string(maxx) + "," +
           std::to_string(maxy) + ");\n";
    out += "\\draw[very thick] ";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += " -- ";
        out += "(" + std::to_string(pts[i].first) + "," + std::to_string(pts[i].second) + ")";
    }
    out += ";\n\\end{tikzpicture}\n";
    return out;
}

inline std::string tree_svg(const typea::TernaryTree& t) {
    using namespace detail;
    // leaves at consecutive x slots, nodes centered over their children
    struct Placed {
        Pt at;
        std::string label;
        bool leaf;
    };
    std::vector<Placed> nodes;
    std::vector<std::pair<Pt, Pt>> edges;
    double next_leaf = 0;
    int max_depth = 0;
    const double dx = 26, dy = 60;
    auto place = [&](auto&& self, const typea::TernaryTree::Node* n, int depth) -> Pt {
        if (!n) return {0, 0};
        max_depth = std::max(max_depth, depth);
        if (n->leaf) {
            const Pt at{30 + dx * next_leaf, 40 + dy * depth};
            next_leaf += 1;
            nodes.push_back({at, "", true});
            return at;
        }
        std::vector<Pt> kids;
        for (const auto& c : n->child) kids.push_back(self(self, c.get(), depth + 1));
        Pt at{(kids.front().x + kids.back().x) / 2, 40 + dy * depth};
        for (const auto& k : kids) edges.push_back({at, k});
        nodes.push_back({at, n->label.empty() ? "R" : n->label, false});
        return at;
    };
    if (t.root) place(place, t.root.get(), 0);
    double w = 60 + dx * next_leaf, h = 80 + dy * max_depth;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) +
                      "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) +
                      "\">\n";
    for (const auto& [a, b] : edges)
        out += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) +
               "\" y2=\"" + num(b.y) + "\" stroke=\"black\"/>\n";
    for (const auto& n : nodes) {
        out += "<circle cx=\"" + num(n.at.x) + "\" cy=\"" + num(n.at.y) + "\" r=\"" +
               (n.leaf ? "2" : "9") + "\" fill=\"" + (n.leaf ? "black" : "#ffffff") +
               "\" stroke=\"black\"/>\n";
        if (!n.leaf)
            out += "<text x=\"" + num(n.at.x - 6) + "\" y=\"" + num(n.at.y - 12) +
                   "\" font-size=\"10\">" + n.label + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

inline std::string tree_tikz(const typea::TernaryTree& t) {
    using namespace detail;
    std::string out = "\\begin{tikzpicture}[scale=0.4]\n";
    double next_leaf = 0;
    auto place = [&](auto&& self, const typea::TernaryTree::Node* n, int depth) -> Pt {
        if (!n) return {0, 0};
        if (n->leaf) {
            const Pt at{next_leaf, -2.0 * depth};
            next_leaf += 1;
            out += "\\fill (" + num(at.x) + "," + num(at.y) + ") circle (1.5pt);\n";
            return at;
        }
        std::vector<Pt> kids;
        for (const auto& c : n->child) kids.push_back(self(self, c.get(), depth + 1));
        const Pt at{(kids.front().x + kids.back().x) / 2, -2.0 * depth};
        for (const auto& k : kids)
            out += "\\draw (" + num(at.x) + "," + num(at.y) + ") -- (" + num(k.x) + "," +
                   num(k.y) + ");\n";
        out += "\\node[circle,draw,fill=white,inner sep=1pt] at (" + num(at.x) + "," +
               num(at.y) + ") {\\tiny " + (n->label.empty() ? "R" : n->label) + "};\n";
        return at;
    };
    if (t.root) place(place, t.root.get(), 0);
    out += "\\end{tikzpicture}\n";
    return out;
}

}  // namespace strands::render
