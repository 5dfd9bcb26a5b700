#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "strands/geometry.hpp"
#include "strands/quiver.hpp"

namespace strands::clusters {

// Triangulations of a convex m-gon (vertices 0..m-1) as diagonal lists.
// Recursion on the base edge (i,j) of each sub-polygon: choosing the apex
// emits every triangulation exactly once.
inline std::vector<std::vector<std::pair<int, int>>> polygon_triangulations(int m) {
    if (m < 3) throw std::invalid_argument("polygon_triangulations: m >= 3");
    using Diags = std::vector<std::pair<int, int>>;
    auto rec = [&](auto&& self, int i, int j) -> std::vector<Diags> {
        if (j - i < 2) return {Diags{}};
        std::vector<Diags> out;
        for (int k = i + 1; k < j; ++k) {
            for (const auto& left : self(self, i, k)) {
                for (const auto& right : self(self, k, j)) {
                    Diags d;
                    if (k - i > 1) d.push_back({i, k});
                    for (auto& e : left) d.push_back(e);
                    if (j - k > 1) d.push_back({k, j});
                    for (auto& e : right) d.push_back(e);
                    std::sort(d.begin(), d.end());
                    out.push_back(std::move(d));
                }
            }
        }
        return out;
    };
    return rec(rec, 0, m - 1);
}

// Small triangulations of the annulus with n outer points. Every class
// under outer rotation has a unique member containing a(0,1)[0] and
// a(1,0)[0]; those members come from triangulations of an (n+2)-gon whose
// vertices are, in order, the outer points 1..n, the wrapped copy of 1, and
// the inner point.
inline std::vector<ArcDiagram> small_triangulations(const Quiver& q) {
    const int n = q.vertex_count() - 1;
    // polygon position -> marked point: 0..n-1 are outer 1..n, n is the
    // wrapped copy of outer 1, n+1 is the inner point
    auto arc_of_diag = [&](int p, int r) -> Arc {
        if (r == n + 1) return Arc{p + 1, 0, 0};  // down to the inner point
        const int u = p + 1;
        const int v = r == n ? 1 : r + 1;
        return Arc{u, v, 0};  // exterior, including the noose a(1,1)[0]
    };
    std::vector<ArcDiagram> base;
    for (const auto& diags : polygon_triangulations(n + 2)) {
        ArcDiagram t{Arc{0, 1, 0}, Arc{1, 0, 0}};
        for (const auto& [p, r] : diags) t.push_back(arc_of_diag(p, r));
        base.push_back(sorted_diagram(t));
    }
    std::vector<ArcDiagram> out;
    for (int r = 0; r < n; ++r)
        for (auto t : base) out.push_back(outer_twist_n(q, t, r));
    std::sort(out.begin(), out.end());
    return out;
}

// Boundary arcs hug a boundary circle: a(0,0)[0] on the inner one, and the
// exterior arcs whose strand passes no outer point, a(i,i+1) and a(n,1).
inline bool is_boundary_arc(const Quiver& q, const Arc& a) {
    if (a.loop()) return a.lambda == 0;
    if (a.bridging()) return false;
    const int N = q.vertex_count();
    const Strand s = strand_of_arc(q, a);
    for (long x = s.lo + 1; x < s.hi; ++x)
        if (x % N != 0) return false;
    return true;
}

// Maximal noncrossing collection test: |Q_0| arcs, no boundary arcs, no
// self-intersections, pairwise compatible.
inline bool is_triangulation(const Quiver& q, const ArcDiagram& d) {
    if (static_cast<int>(d.size()) != q.vertex_count()) return false;
    const auto strands = strands_of_arcs(q, d);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (is_boundary_arc(q, d[i])) return false;
        if (self_intersects(q, strands[i])) return false;
        for (std::size_t j = 0; j < i; ++j) {
            if (d[i] == d[j]) return false;
            if (strands_cross(q, strands[i], strands[j])) return false;
        }
    }
    return true;
}

struct ClusterObject {
    bool shifted = false;
    int vertex = 0;        // P_vertex[1] when shifted
    StringModule module{};  // otherwise

    friend bool operator==(const ClusterObject& a, const ClusterObject& b) {
        return a.shifted == b.shifted && a.vertex == b.vertex && a.module == b.module;
    }
    friend bool operator<(const ClusterObject& a, const ClusterObject& b) {
        if (a.shifted != b.shifted) return a.shifted > b.shifted;
        if (a.shifted) return a.vertex < b.vertex;
        return a.module < b.module;
    }
};

using Cluster = std::vector<ClusterObject>;

inline bool is_vertical_arc(const Quiver& q, const Arc& a) {
    const int n = q.vertex_count() - 1;
    if (!a.bridging()) return false;
    const long t = a.twist();
    return t == 0 || (t == 1 && a.from == n);
}

// The cluster convention phi. Vertical arcs give shifted projectives,
// boundary arcs the zero module (nullopt); anything else gives the string
// module read off the vertical strands its lift crosses:
//   a(i,0)[j] crosses X_{i+1}..X_{n+1} j+1 times and X_1..X_i j times,
//   the inner-to-outer and exterior cases are the symmetric counts.
inline std::optional<ClusterObject> phi(const Quiver& q, const Arc& a) {
    const int n = q.vertex_count() - 1;
    const int N = n + 1;
    if (is_boundary_arc(q, a)) return std::nullopt;
    if (is_vertical_arc(q, a))
        return ClusterObject{true, a.twist() == 1 ? 1 : a.from + 1, StringModule{}};
    if (a.bridging()) {
        // the crossing counts reproduce exactly the module psi assigns
        return ClusterObject{false, 0, module_of_arc(q, a)};
    }
    if (a.loop()) return std::nullopt;
    if (a.lambda != 0)
        throw std::invalid_argument("phi: exterior arc with winding self-intersects");
    // tops strictly between the endpoints of the lift; a top at the dateline
    // carries both X_{n+1} and X_1
    const long d = ((static_cast<long>(a.to) - a.from - 1) % n + n) % n + 1;
    const long first_top = a.from + 1;
    long start_vertex = 0, count = 0;
    for (long m = first_top; m < a.from + d; ++m) {
        const bool dateline = m % n == 0;
        if (count == 0) start_vertex = dateline ? N : (m % n) + 1;
        count += dateline ? 2 : 1;
    }
    if (count == 0) return std::nullopt;  // boundary arc, already handled
    return ClusterObject{false, 0,
                         module_from_ijk(q, static_cast<int>(start_vertex - 1), count)};
}

inline Cluster cluster_of(const Quiver& q, const ArcDiagram& t) {
    Cluster c;
    for (const auto& a : t) {
        const auto obj = phi(q, a);
        if (!obj) throw std::invalid_argument("cluster_of: boundary arc in a triangulation");
        c.push_back(*obj);
    }
    std::sort(c.begin(), c.end());
    return c;
}

inline std::string cluster_name(const Quiver& q, const Cluster& c) {
    std::string s;
    for (const auto& o : c) {
        if (!s.empty()) s += " + ";
        s += o.shifted ? "P_" + std::to_string(o.vertex) + "[1]" : pretty_name(q, o.module);
    }
    return s;
}

// The unshifted exceptional collection of the cluster: phi images plus the
// plain projectives standing in for the shifted summands.
inline std::vector<StringModule> unshifted_collection(const Quiver& q, const Cluster& c) {
    const int N = q.vertex_count();
    std::vector<StringModule> out;
    for (const auto& o : c) {
        if (!o.shifted) {
            out.push_back(o.module);
        } else if (o.vertex == 1) {
            out.push_back(StringModule{N - 1, 2 * N, false});  // P_1 winds once
        } else {
            out.push_back(StringModule{o.vertex - 1, N, false});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Both conventions name the same arcs exactly when the triangulation is a
// fundamental arc diagram.
inline bool conventions_coincide(const Quiver& q, const ArcDiagram& t) {
    const Cluster c = cluster_of(q, t);
    const ArcDiagram psi_arcs = arcs_of_modules(q, unshifted_collection(q, c));
    return psi_arcs == sorted_diagram(t);
}

}  // namespace strands::clusters
