#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "strands/quiver.hpp"
#include "strands/rational.hpp"

namespace strands {

// dim Hom(M,N): solution space of the intertwiner equations
// f_{t(a)} M_a = N_a f_{s(a)}, solved exactly over Q.
inline int hom_dim(const Quiver& q, const StringModule& M, const StringModule& N) {
    if (M.band || N.band) throw std::invalid_argument("hom_dim: band modules out of scope");
    const Representation rm = realize(q, M), rn = realize(q, N);
    const int nv = q.vertex_count();

    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + rm.dims[v] * rn.dims[v];
    const int vars = offset[nv];
    if (vars == 0) return 0;
    // variable (v, r, c): entry f_v[r][c], r < dimN(v), c < dimM(v)
    auto var = [&](int v, int r, int c) { return offset[v] + r * rm.dims[v] + c; };

    RatMatrix rowsmat;
    const auto arrows = q.arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const int u = arrows[a].source - 1, w = arrows[a].target - 1;
        for (int r = 0; r < rn.dims[w]; ++r) {
            for (int c = 0; c < rm.dims[u]; ++c) {
                std::vector<Rat> row(vars, Rat(0));
                bool nonzero = false;
                for (int k = 0; k < rm.dims[w]; ++k) {
                    const Rat& e = rm.matrices[a][k][c];  // M_a[k][c]
                    if (!e.is_zero()) { row[var(w, r, k)] = row[var(w, r, k)] + e; nonzero = true; }
                }
                for (int k = 0; k < rn.dims[u]; ++k) {
                    const Rat& e = rn.matrices[a][r][k];  // N_a[r][k]
                    if (!e.is_zero()) { row[var(u, k, c)] = row[var(u, k, c)] - e; nonzero = true; }
                }
                if (nonzero) rowsmat.push_back(std::move(row));
            }
        }
    }
    return kernel_dim(rowsmat, vars);
}

// dim Ext^1(M,N) = dim Hom(M,N) - <dim M, dim N>. Hereditary, so this is
// exact; a negative value would mean the oracle is inconsistent.
inline int ext_dim(const Quiver& q, const StringModule& M, const StringModule& N) {
    const long e = hom_dim(q, M, N) -
                   euler_form(q, dimension_vector(q, M), dimension_vector(q, N));
    if (e < 0) throw std::logic_error("ext_dim: negative value, oracle inconsistent");
    return static_cast<int>(e);
}

struct HomExtPair {
    int hom = 0;
    int ext = 0;
    friend bool operator==(const HomExtPair& a, const HomExtPair& b) {
        return a.hom == b.hom && a.ext == b.ext;
    }
};

// Closed form for straight A_n intervals:
//   Hom(M_ab, M_cd) = 1 iff c <= a < d <= b,  Ext(M_ab, M_cd) = 1 iff a < c <= b < d.
inline HomExtPair interval_hom_ext(long a, long b, long c, long d, int n) {
    if (!(0 <= a && a < b && b <= n && 0 <= c && c < d && d <= n))
        throw std::out_of_range("interval_hom_ext: indices outside 0..n");
    HomExtPair p;
    p.hom = (c <= a && a < d && d <= b) ? 1 : 0;
    p.ext = (a < c && c <= b && b < d) ? 1 : 0;
    return p;
}

inline HomExtPair interval_hom_ext(const StringModule& M, const StringModule& N, int n) {
    return interval_hom_ext(M.lo, M.hi, N.lo, N.hi, n);
}

inline bool is_exceptional_module(const Quiver& q, const StringModule& m) {
    return hom_dim(q, m, m) == 1 && ext_dim(q, m, m) == 0;
}

inline bool is_exceptional_sequence(const Quiver& q, const std::vector<StringModule>& seq) {
    for (const auto& m : seq)
        if (!is_exceptional_module(q, m)) return false;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (hom_dim(q, seq[i], seq[j]) != 0 || ext_dim(q, seq[i], seq[j]) != 0) return false;
    return true;
}

// Order an exceptional set into an exceptional sequence, or return nothing.
// Edge i -> j when Hom(E_i,E_j) or Ext(E_i,E_j) is nonzero, forcing E_i to
// precede E_j; a two-way pair or a directed cycle means no ordering exists.
inline std::optional<std::vector<StringModule>> sort_exceptional_set(
    const Quiver& q, const std::vector<StringModule>& set) {
    const std::size_t k = set.size();
    for (const auto& m : set)
        if (!is_exceptional_module(q, m)) return std::nullopt;
    std::vector<std::vector<char>> edge(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            if (hom_dim(q, set[i], set[j]) != 0 || ext_dim(q, set[i], set[j]) != 0)
                edge[i][j] = 1;
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (edge[i][j] && edge[j][i]) return std::nullopt;
    // Kahn, smallest index first so the output is deterministic.
    std::vector<int> indeg(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (edge[i][j]) ++indeg[j];
    std::vector<StringModule> out;
    std::vector<char> used(k, 0);
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t pick = k;
        for (std::size_t i = 0; i < k; ++i)
            if (!used[i] && indeg[i] == 0) { pick = i; break; }
        if (pick == k) return std::nullopt;  // directed cycle
        used[pick] = 1;
        out.push_back(set[pick]);
        for (std::size_t j = 0; j < k; ++j)
            if (edge[pick][j]) --indeg[j];
    }
    return out;
}

inline std::vector<StringModule> all_intervals(int n) {
    std::vector<StringModule> out;
    for (long x = 0; x < n; ++x)
        for (long y = x + 1; y <= n; ++y) out.push_back(interval_module(x, y));
    return out;
}

// Right perpendicular category of a set over straight A_n, as the list of
// interval modules W with Hom(E,W) = Ext(E,W) = 0 for every E in the set.
inline std::vector<StringModule> perpendicular(int n, const std::vector<StringModule>& es) {
    std::vector<StringModule> out;
    for (const auto& w : all_intervals(n)) {
        bool ok = true;
        for (const auto& e : es) {
            const auto p = interval_hom_ext(e, w, n);
            if (p.hom != 0 || p.ext != 0) { ok = false; break; }
        }
        if (ok) out.push_back(w);
    }
    return out;
}

// Left perpendicular: W with Hom(W,E) = Ext(W,E) = 0.
inline std::vector<StringModule> left_perpendicular(int n, const std::vector<StringModule>& es) {
    std::vector<StringModule> out;
    for (const auto& w : all_intervals(n)) {
        bool ok = true;
        for (const auto& e : es) {
            const auto p = interval_hom_ext(w, e, n);
            if (p.hom != 0 || p.ext != 0) { ok = false; break; }
        }
        if (ok) out.push_back(w);
    }
    return out;
}

struct RelativeStatus {
    // aligned with the input set
    std::vector<char> projective;
    std::vector<char> injective;
};

// Relative projectives/injectives of an exceptional set over straight A_n,
// straight from the definitions: take the elements forced after (resp.
// before) Y by the Hom/Ext order, and test projectivity (injectivity) of Y
// in their perpendicular category. Ext(Y,-) = 0 on E-perp is projectivity
// there because the perpendicular category is extension closed.
inline RelativeStatus relative_status(int n, const std::vector<StringModule>& set) {
    const std::size_t k = set.size();
    std::vector<std::vector<char>> prec(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            const auto p = interval_hom_ext(set[i], set[j], n);
            if (p.hom != 0 || p.ext != 0) prec[i][j] = 1;
        }
    // transitive closure
    for (std::size_t m = 0; m < k; ++m)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (prec[i][m] && prec[m][j]) prec[i][j] = 1;
    for (std::size_t i = 0; i < k; ++i)
        if (prec[i][i]) throw std::invalid_argument("relative_status: set is not exceptional");

    RelativeStatus rs;
    rs.projective.assign(k, 1);
    rs.injective.assign(k, 1);
    for (std::size_t y = 0; y < k; ++y) {
        std::vector<StringModule> after, before;
        for (std::size_t j = 0; j < k; ++j) {
            if (prec[y][j]) after.push_back(set[j]);
            if (prec[j][y]) before.push_back(set[j]);
        }
        for (const auto& z : perpendicular(n, after))
            if (interval_hom_ext(set[y], z, n).ext != 0) { rs.projective[y] = 0; break; }
        for (const auto& z : left_perpendicular(n, before))
            if (interval_hom_ext(z, set[y], n).ext != 0) { rs.injective[y] = 0; break; }
    }
    return rs;
}

// tau M_{a,b} = M_{a+1,b+1} on straight A_n; projectives (b = n) die.
inline std::optional<StringModule> ar_translate_a(const StringModule& m, int n) {
    if (m.hi >= n) return std::nullopt;
    return interval_module(m.lo + 1, m.hi + 1);
}

inline std::optional<StringModule> ar_translate_a_inverse(const StringModule& m, int n) {
    (void)n;
    if (m.lo <= 0) return std::nullopt;
    return interval_module(m.lo - 1, m.hi - 1);
}

// Duality D: straight A_n modules to straight A_n modules (after the vertex
// relabeling v -> n+1-v that identifies Q^op with Q).
inline StringModule dual_interval(const StringModule& m, int n) {
    return interval_module(n - m.hi, n - m.lo);
}

}  // namespace strands
