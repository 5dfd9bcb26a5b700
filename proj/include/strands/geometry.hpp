#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strands/quiver.hpp"

namespace strands {

// A strand c(lo,hi) on the marked line is exactly the fundamental-lift
// interval of a string module, so the two share a representation.
using Strand = StringModule;

// The injection Phi from string modules to strands. Modules are stored in
// canonical position, so the lift is the module's own interval.
inline Strand fundamental_lift(const Quiver& q, const StringModule& m) {
    if (m.band) throw std::invalid_argument("fundamental_lift: band input");
    return canonical_module(q, m.lo, m.hi);
}

namespace detail {

// Crossing of two strands at a fixed relative position, all four endpoints
// pairwise distinct or sharing an endpoint. Monotone representatives must
// pass below '+' points and above '-' points; endpoint configurations then
// force an odd number of crossings in exactly these cases:
//   nested (c,d) in (a,b): signs at c and d differ
//   interleaved a<c<b<d:   signs at c and b agree
inline bool cross_at(const Quiver& q, long a, long b, long c, long d) {
    if (a == c || a == d || b == c || b == d) return false;
    if (b < c || d < a) return false;
    if (a < c && d < b) return q.sign_at(c) != q.sign_at(d);  // (c,d) nested
    if (c < a && b < d) return q.sign_at(a) != q.sign_at(b);  // (a,b) nested
    if (a < c && b < d) return q.sign_at(c) == q.sign_at(b);  // interleaved
    return q.sign_at(a) == q.sign_at(d);                      // interleaved, other order
}

}  // namespace detail

inline bool strands_cross(const Quiver& q, const Strand& s, const Strand& t) {
    const int N = q.period();
    if (N == 0) return detail::cross_at(q, s.lo, s.hi, t.lo, t.hi);
    const long zmin = (t.lo - s.hi) / N - 1, zmax = (t.hi - s.lo) / N + 1;
    for (long z = zmin; z <= zmax; ++z)
        if (detail::cross_at(q, s.lo + z * N, s.hi + z * N, t.lo, t.hi)) return true;
    return false;
}

inline bool self_intersects(const Quiver& q, const Strand& s) {
    const int N = q.period();
    if (N == 0) return false;
    return s.length() > N && q.sign_at(s.lo) == q.sign_at(s.hi);
}

// A loop shares both endpoints with its own translate without crossing it.
inline bool is_loop(const Quiver& q, const Strand& s) {
    const int N = q.period();
    return N != 0 && s.length() == N;
}

namespace detail {

enum class GermDir { Left, Right };

struct Germ {
    GermDir dir;
    long far;  // the strand's other endpoint, in the shared coordinate frame
};

// Is germ g2 locally clockwise from germ g1 at shared point k?
// Different exits: at '+' the leftward germ is clockwise from the rightward
// one, at '-' the other way (Fig. 3 configurations (a)/(d)). Equal exits:
// the vertical order near k is set by the sign at the nearer far endpoint,
// and the formula below covers configurations (b)/(c)/(e)/(f).
inline bool germ_clockwise_from(const Quiver& q, long k, const Germ& g2, const Germ& g1) {
    if (g1.dir != g2.dir) {
        const bool plus = q.sign_at(k) == '+';
        return plus == (g2.dir == GermDir::Left);
    }
    const long m = std::abs(g1.far - k) < std::abs(g2.far - k) ? g1.far : g2.far;
    return (q.sign_at(m) == '+') == (g2.far > g1.far);
}

inline std::optional<Germ> germ_at(const Strand& s, long shift, long k) {
    if (s.lo + shift == k) return Germ{GermDir::Right, s.hi + shift};
    if (s.hi + shift == k) return Germ{GermDir::Left, s.lo + shift};
    return std::nullopt;
}

}  // namespace detail

enum class RelOrder { Clockwise, Counterclockwise };

// Order of s2 relative to s1 at a shared marked point (the point is a cover
// coordinate; for A~ any translate of s2 meeting s1 there counts).
inline RelOrder local_order(const Quiver& q, const Strand& s1, const Strand& s2,
                            long shared_point) {
    if (strands_cross(q, s1, s2)) throw std::invalid_argument("local_order: strands cross");
    const int N = q.period();
    const auto g1 = detail::germ_at(s1, 0, shared_point);
    if (!g1) throw std::invalid_argument("local_order: s1 does not end at the shared point");
    std::vector<long> shifts{0};
    if (N != 0) {
        shifts.clear();
        for (long end : {s2.lo, s2.hi}) {
            const long z = shared_point - end;
            if (z % N == 0) shifts.push_back(z);
        }
    }
    for (long shift : shifts)
        if (auto g2 = detail::germ_at(s2, shift, shared_point))
            return detail::germ_clockwise_from(q, shared_point, *g2, *g1)
                       ? RelOrder::Clockwise
                       : RelOrder::Counterclockwise;
    throw std::invalid_argument("local_order: strands do not share the point");
}

// All ordered pairs (i,j) with strand i locally clockwise from strand j at
// some shared point (translates included).
inline std::vector<std::pair<int, int>> clockwise_edges(const Quiver& q,
                                                        const std::vector<Strand>& d) {
    const int N = q.period();
    std::set<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (i == j) continue;
            // shifts of d[i] that make an endpoint of it meet one of d[j]
            std::set<long> shifts;
            for (long ei : {d[i].lo, d[i].hi})
                for (long ej : {d[j].lo, d[j].hi}) {
                    const long delta = ej - ei;
                    if (N == 0 ? delta == 0 : delta % N == 0) shifts.insert(delta);
                }
            for (long shift : shifts) {
                for (long k : {d[j].lo, d[j].hi}) {
                    const auto gi = detail::germ_at(d[i], shift, k);
                    const auto gj = detail::germ_at(d[j], 0, k);
                    if (!gi || !gj) continue;
                    if (detail::germ_clockwise_from(q, k, *gi, *gj))
                        edges.insert({static_cast<int>(i), static_cast<int>(j)});
                    else
                        edges.insert({static_cast<int>(j), static_cast<int>(i)});
                }
            }
        }
    }
    return {edges.begin(), edges.end()};
}

namespace detail {

inline bool digraph_has_cycle(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto& e : edges) adj[e.first].push_back(e.second);
    std::vector<int> state(n, 0);
    std::vector<std::pair<int, std::size_t>> stack;
    for (int start = 0; start < n; ++start) {
        if (state[start]) continue;
        stack.push_back({start, 0});
        state[start] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx == adj[v].size()) {
                state[v] = 2;
                stack.pop_back();
                continue;
            }
            const int w = adj[v][idx++];
            if (state[w] == 1) return true;
            if (state[w] == 0) {
                state[w] = 1;
                stack.push_back({w, 0});
            }
        }
    }
    return false;
}

}  // namespace detail

enum class DiagramDefect {
    None,
    WrongSize,
    InvalidStrand,
    SelfIntersection,
    Loop,
    Crossing,
    Cycle,
};

struct DiagramCheck {
    bool ok = true;
    DiagramDefect defect = DiagramDefect::None;
    std::string detail;
};

// Fundamental strand diagram test: |Q_0| fundamental strands, pairwise
// noncrossing, no self-intersections, and no loops or cycles in the
// locally-clockwise relation. Pass expected_size = 0 to skip the size check.
inline DiagramCheck check_fundamental_diagram(const Quiver& q, const std::vector<Strand>& d,
                                              int expected_size = -1) {
    if (expected_size < 0) expected_size = q.vertex_count();
    if (expected_size > 0 && static_cast<int>(d.size()) != expected_size)
        return {false, DiagramDefect::WrongSize,
                "expected " + std::to_string(expected_size) + " strands, got " +
                    std::to_string(d.size())};
    for (const auto& s : d) {
        if (s.band || s.length() < 1 || !(canonical_module(q, s.lo, s.hi) == s))
            return {false, DiagramDefect::InvalidStrand, "strand not a fundamental lift"};
        if (self_intersects(q, s))
            return {false, DiagramDefect::SelfIntersection, module_name(q, s)};
        if (is_loop(q, s)) return {false, DiagramDefect::Loop, module_name(q, s)};
    }
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (strands_cross(q, d[i], d[j]))
                return {false, DiagramDefect::Crossing,
                        module_name(q, d[i]) + " x " + module_name(q, d[j])};
    if (detail::digraph_has_cycle(static_cast<int>(d.size()), clockwise_edges(q, d)))
        return {false, DiagramDefect::Cycle, "locally-clockwise relation has a directed cycle"};
    return {};
}

// ---------------------------------------------------------------------------
// Arcs on the annulus (straight A~ orientation: one inner point 0, outer
// points 1..n). Canonical names:
//   bridging a(i,0)[t]   with t >= 0   (preprojective side)
//   bridging a(0,j)[t]   with t <= 0   (preinjective side)
//   exterior a(u,v)[l]   outer endpoints
//   loop     a(0,0)[l]   inner endpoints
// a(0,i)[t] with t >= 1 names the same curve as a(i,0)[t-1]; normalize_arc
// applies that identification.

struct Arc {
    int from = 0, to = 0;
    long lambda = 0;

    bool bridging() const { return (from == 0) != (to == 0); }
    bool exterior() const { return from != 0 && to != 0; }
    bool loop() const { return from == 0 && to == 0; }

    // signed 2-pi twist count of a bridging arc; 0 = a(i,0)[0], -1 = a(0,i)[0]
    long twist() const { return from != 0 ? lambda : lambda - 1; }

    friend bool operator==(const Arc& a, const Arc& b) {
        return a.from == b.from && a.to == b.to && a.lambda == b.lambda;
    }
    friend bool operator<(const Arc& a, const Arc& b) {
        if (a.from != b.from) return a.from < b.from;
        if (a.to != b.to) return a.to < b.to;
        return a.lambda < b.lambda;
    }
};

using ArcDiagram = std::vector<Arc>;

inline Arc normalize_arc(int from, int to, long lambda) {
    while (from == 0 && to != 0 && lambda >= 1) { from = to; to = 0; --lambda; }
    while (from != 0 && to == 0 && lambda <= -1) { to = from; from = 0; ++lambda; }
    return Arc{from, to, lambda};
}

inline Arc bridge_arc(int outer, long twist) {
    return twist >= 0 ? Arc{outer, 0, twist} : Arc{0, outer, twist + 1};
}

inline ArcDiagram sorted_diagram(ArcDiagram d) {
    std::sort(d.begin(), d.end());
    return d;
}

inline Strand strand_of_arc(const Quiver& q, const Arc& a) {
    const int N = q.vertex_count();
    if (a.bridging()) {
        const long t = a.twist();
        return t >= 0 ? Strand{a.from, (t + 1) * N, false} : Strand{(t + 1) * N, a.to, false};
    }
    if (a.loop()) return Strand{-a.lambda * N, N, false};
    const long d = ((static_cast<long>(a.to) - a.from - 1) % N + N) % N + 1;
    return Strand{a.from, a.from + d + a.lambda * N, false};
}

inline StringModule module_of_arc(const Quiver& q, const Arc& a) {
    const Strand s = strand_of_arc(q, a);
    return canonical_module(q, s.lo, s.hi);
}

// The map psi: string modules to arcs in the exceptional convention.
inline Arc arc_of_module(const Quiver& q, const StringModule& m) {
    const int N = q.vertex_count();
    const long l = (m.length() - 1) / N;
    switch (classify_component(q, m)) {
        case ComponentClass::Preprojective: return Arc{static_cast<int>(m.lo), 0, l};
        case ComponentClass::Preinjective: return Arc{0, static_cast<int>(m.hi), -l};
        case ComponentClass::LeftRegular:
            return Arc{static_cast<int>(m.lo), q.vertex_at(m.hi) % N, l};
        case ComponentClass::RightRegular: return Arc{0, 0, l};
        default: throw std::invalid_argument("arc_of_module: band input");
    }
}

inline std::vector<Strand> strands_of_arcs(const Quiver& q, const ArcDiagram& d) {
    std::vector<Strand> out;
    out.reserve(d.size());
    for (const auto& a : d) out.push_back(strand_of_arc(q, a));
    return out;
}

inline ArcDiagram arcs_of_modules(const Quiver& q, const std::vector<StringModule>& ms) {
    ArcDiagram out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(arc_of_module(q, m));
    return sorted_diagram(out);
}

// 2-pi Dehn twists of the inner boundary: every bridging arc's twist count
// shifts by k, exterior arcs and loops are untouched.
inline ArcDiagram inner_twist(const ArcDiagram& d, long k) {
    ArcDiagram out;
    out.reserve(d.size());
    for (const auto& a : d) {
        if (a.bridging())
            out.push_back(bridge_arc(a.from != 0 ? a.from : a.to, a.twist() + k));
        else
            out.push_back(a);
    }
    return sorted_diagram(out);
}

// 2-pi/n clockwise outer Dehn twist: labels advance by one outer step; an
// arc leaving the last outer point wraps past the dateline, a(0,n)[l]
// becoming a(0,1)[l-1].
inline ArcDiagram outer_twist(const Quiver& q, const ArcDiagram& d) {
    const int n = q.vertex_count() - 1;
    auto step = [&](int v) { return v % n + 1; };
    ArcDiagram out;
    out.reserve(d.size());
    for (const auto& a : d) {
        if (a.loop()) {
            out.push_back(a);
        } else if (a.bridging()) {
            const int i = a.from != 0 ? a.from : a.to;
            out.push_back(bridge_arc(step(i), i == n ? a.twist() - 1 : a.twist()));
        } else {
            out.push_back(Arc{step(a.from), step(a.to), a.lambda});
        }
    }
    return sorted_diagram(out);
}

inline ArcDiagram outer_twist_n(const Quiver& q, ArcDiagram d, int times) {
    for (int i = 0; i < times; ++i) d = outer_twist(q, d);
    return d;
}

inline bool crosses_dateline(const Quiver& q, const Arc& a) {
    if (a.bridging()) return a.twist() != 0 && a.twist() != -1;
    const Strand s = strand_of_arc(q, a);
    return s.lo < 0 || s.hi > q.vertex_count();
}

inline bool is_small(const ArcDiagram& d) {
    for (const auto& a : d) {
        if (a.bridging() ? (a.twist() != 0 && a.twist() != -1) : a.lambda != 0) return false;
    }
    return true;
}

inline DiagramCheck check_fundamental_arcs(const Quiver& q, const ArcDiagram& d,
                                           int expected_size = -1) {
    return check_fundamental_diagram(q, strands_of_arcs(q, d), expected_size);
}

}  // namespace strands
