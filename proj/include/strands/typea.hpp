#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "strands/bigint.hpp"
#include "strands/geometry.hpp"
#include "strands/homology.hpp"
#include "strands/quiver.hpp"

namespace strands::typea {

using Set = std::vector<StringModule>;  // sorted by (lo,hi)

namespace detail {

// Exceptional sets on s+1 consecutive marked points, strands relative to 0.
// Recursive decomposition: the maximal injective c(0,k), the unique support
// gap p in [1,k], and independent sets on the three remaining intervals.
// Entries are immutable once installed; the lock only guards installation.
inline const std::vector<Set>& sets_of_size(int s) {
    static std::mutex mu;
    static std::vector<std::unique_ptr<const std::vector<Set>>> cache = [] {
        std::vector<std::unique_ptr<const std::vector<Set>>> c;
        c.push_back(std::make_unique<const std::vector<Set>>(std::vector<Set>{Set{}}));
        return c;
    }();
    std::scoped_lock lock(mu);
    while (static_cast<int>(cache.size()) <= s) {
        const int n = static_cast<int>(cache.size());
        std::vector<Set> result;
        for (int k = 1; k <= n; ++k) {
            for (int p = 1; p <= k; ++p) {
                for (const Set& sa : *cache[p - 1]) {
                    for (const Set& sb : *cache[k - p]) {
                        for (const Set& sc : *cache[n - k]) {
                            Set out;
                            out.push_back(StringModule{0, k, false});
                            for (const auto& m : sa) out.push_back(m);
                            for (const auto& m : sb)
                                out.push_back(StringModule{m.lo + p, m.hi + p, false});
                            for (const auto& m : sc)
                                out.push_back(StringModule{m.lo + k, m.hi + k, false});
                            std::sort(out.begin(), out.end());
                            result.push_back(std::move(out));
                        }
                    }
                }
            }
        }
        cache.push_back(std::make_unique<const std::vector<Set>>(std::move(result)));
    }
    return *cache[s];
}

}  // namespace detail

// All complete exceptional sets of straight A_n, in the canonical
// (k, p, recursive) emission order.
inline std::vector<Set> enumerate_sets(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_sets: n >= 0");
    return detail::sets_of_size(n);
}

// Independent route: try every n-subset of the intervals with the oracle.
inline std::vector<Set> brute_force_sets(int n) {
    const Quiver q = straight_a(n);
    const auto intervals = all_intervals(n);
    std::vector<Set> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(pick.size()) == n) {
            Set cand;
            for (int i : pick) cand.push_back(intervals[i]);
            if (sort_exceptional_set(q, cand)) out.push_back(cand);
            return;
        }
        for (std::size_t i = start; i < intervals.size(); ++i) {
            pick.push_back(static_cast<int>(i));
            self(self, i + 1);
            pick.pop_back();
        }
    };
    if (n > 0) rec(rec, 0);
    else out.push_back(Set{});
    for (auto& s : out) std::sort(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

// --------------------------------------------------------------------------
// Rooted ternary trees with labeled nodes (Def. Xa/Xb/Xc).

struct TernaryTree {
    struct Node {
        bool leaf = true;
        Strand strand{};
        bool oriented_right = true;
        std::string label;  // slot letters from the root; root = ""
        std::array<std::unique_ptr<Node>, 3> child;  // a, b, c
    };
    int n = 0;
    std::unique_ptr<Node> root;
};

namespace detail {

// Slot patterns for a node X = c(i,j):
//  right-oriented: a = c(i,x) x max | b = c(y,j) y min | c = c(j,z) z max
//  left-oriented:  a = c(x,j) x min | b = c(i,y) y max | c = c(z,i) z min
inline std::array<std::optional<Strand>, 3> tree_slots(const Set& set, const Strand& x,
                                                       bool right) {
    std::array<std::optional<Strand>, 3> out;
    for (const auto& s : set) {
        if (s == x) continue;
        if (right) {
            if (s.lo == x.lo && s.hi < x.hi && (!out[0] || s.hi > out[0]->hi)) out[0] = s;
            if (s.hi == x.hi && s.lo > x.lo && (!out[1] || s.lo < out[1]->lo)) out[1] = s;
            if (s.lo == x.hi && (!out[2] || s.hi > out[2]->hi)) out[2] = s;
        } else {
            if (s.hi == x.hi && s.lo > x.lo && (!out[0] || s.lo < out[0]->lo)) out[0] = s;
            if (s.lo == x.lo && s.hi < x.hi && (!out[1] || s.hi > out[1]->hi)) out[1] = s;
            if (s.hi == x.lo && (!out[2] || s.lo < out[2]->lo)) out[2] = s;
        }
    }
    return out;
}

inline std::unique_ptr<TernaryTree::Node> build_tree_node(const Set& set, const Strand& x,
                                                          bool right, const std::string& label,
                                                          int& consumed) {
    auto node = std::make_unique<TernaryTree::Node>();
    node->leaf = false;
    node->strand = x;
    node->oriented_right = right;
    node->label = label;
    ++consumed;
    const auto slots = tree_slots(set, x, right);
    const char letters[3] = {'a', 'b', 'c'};
    for (int s = 0; s < 3; ++s) {
        if (slots[s]) {
            const bool child_right = (s == 1) ? !right : right;  // b flips orientation
            node->child[s] =
                build_tree_node(set, *slots[s], child_right, label + letters[s], consumed);
        } else {
            auto leaf = std::make_unique<TernaryTree::Node>();
            leaf->label = label + letters[s];
            node->child[s] = std::move(leaf);
        }
    }
    return node;
}

}  // namespace detail

inline TernaryTree ternary_tree(int n, const Set& set) {
    if (static_cast<int>(set.size()) != n)
        throw std::invalid_argument("ternary_tree: need a complete exceptional set");
    TernaryTree t;
    t.n = n;
    if (n == 0) return t;
    std::optional<Strand> root;
    for (const auto& s : set)
        if (s.lo == 0 && (!root || s.hi > root->hi)) root = s;
    if (!root) throw std::invalid_argument("ternary_tree: no injective in the set");
    int consumed = 0;
    t.root = detail::build_tree_node(set, *root, true, "", consumed);
    if (consumed != n)
        throw std::logic_error("ternary_tree: slots did not cover the set");  // see Def Xa/Xb/Xc
    return t;
}

inline void collect_strands(const TernaryTree::Node* node, Set& out) {
    if (!node || node->leaf) return;
    out.push_back(node->strand);
    for (const auto& c : node->child) collect_strands(c.get(), out);
}

inline Set tree_to_set(const TernaryTree& t) {
    Set out;
    collect_strands(t.root.get(), out);
    std::sort(out.begin(), out.end());
    return out;
}

// --------------------------------------------------------------------------
// Lattice paths of height n: (0,0) to (2n+1,n), x <= 2y except the last step.

struct LatticePath {
    std::string steps;  // 'U' and 'R'

    friend bool operator==(const LatticePath& a, const LatticePath& b) {
        return a.steps == b.steps;
    }
    friend bool operator<(const LatticePath& a, const LatticePath& b) {
        return a.steps < b.steps;
    }
};

inline bool valid_height_path(const LatticePath& p, int n) {
    if (static_cast<int>(p.steps.size()) != 3 * n + 1) return false;
    long x = 0, y = 0;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        if (p.steps[i] == 'U') ++y;
        else if (p.steps[i] == 'R') ++x;
        else return false;
        const bool last = i + 1 == p.steps.size();
        if (last ? x != 2 * y + 1 : x > 2 * y) return false;
    }
    return y == n;
}

// Vertices in preorder (R first, then lexicographic): nodes give 'U', leaves 'R'.
inline LatticePath tree_to_lattice_path(const TernaryTree& t) {
    LatticePath p;
    auto rec = [&](auto&& self, const TernaryTree::Node* node) -> void {
        if (!node) return;
        p.steps.push_back(node->leaf ? 'R' : 'U');
        if (!node->leaf)
            for (const auto& c : node->child) self(self, c.get());
    };
    if (t.n == 0) { p.steps = "R"; return p; }
    rec(rec, t.root.get());
    return p;
}

// x-coordinates of the vertical edges, in preorder (= objects of the set).
inline std::vector<long> vertical_edge_xs(const LatticePath& p) {
    std::vector<long> xs;
    long x = 0;
    for (char c : p.steps) {
        if (c == 'U') xs.push_back(x);
        else ++x;
    }
    return xs;
}

// --------------------------------------------------------------------------
// Relative projectives and injectives, by the strand-diagram tree.

struct TreeShape {
    std::vector<int> parent_point;   // tree on points 0..n
    std::vector<int> dist_from_zero;
    std::vector<int> dist_from_n;
};

inline TreeShape diagram_tree(int n, const Set& set) {
    TreeShape ts;
    std::vector<std::vector<int>> adj(n + 1);
    for (const auto& s : set) {
        adj[s.lo].push_back(static_cast<int>(s.hi));
        adj[s.hi].push_back(static_cast<int>(s.lo));
    }
    auto bfs = [&](int start) {
        std::vector<int> dist(n + 1, -1);
        std::vector<int> queue{start};
        dist[start] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (int w : adj[queue[h]])
                if (dist[w] < 0) { dist[w] = dist[queue[h]] + 1; queue.push_back(w); }
        return dist;
    };
    ts.dist_from_zero = bfs(0);
    ts.dist_from_n = bfs(n);
    for (int v = 0; v <= n; ++v)
        if (ts.dist_from_zero[v] < 0)
            throw std::invalid_argument("diagram_tree: strand graph is not connected");
    return ts;
}

struct Relatives {
    std::vector<char> projective;  // aligned with the sorted set
    std::vector<char> injective;
};

// Orientation rules: c(i,j) is relatively injective iff it points away from
// the root 0 (i closer to 0), relatively projective iff j is closer to n.
inline Relatives combinatorial_relatives(int n, const Set& set) {
    const TreeShape ts = diagram_tree(n, set);
    Relatives r;
    for (const auto& s : set) {
        r.injective.push_back(ts.dist_from_zero[s.lo] < ts.dist_from_zero[s.hi]);
        r.projective.push_back(ts.dist_from_n[s.hi] < ts.dist_from_n[s.lo]);
    }
    return r;
}

// Even number of b's in the tree label <=> relatively injective.
inline Relatives tree_label_relatives(int n, const Set& set) {
    const TernaryTree t = ternary_tree(n, set);
    std::map<Strand, std::string> labels;
    auto rec = [&](auto&& self, const TernaryTree::Node* node) -> void {
        if (!node || node->leaf) return;
        labels[node->strand] = node->label;
        for (const auto& c : node->child) self(self, c.get());
    };
    rec(rec, t.root.get());
    Relatives r;
    for (const auto& s : set) {
        const auto& lbl = labels.at(s);
        const long bs = std::count(lbl.begin(), lbl.end(), 'b');
        r.injective.push_back(bs % 2 == 0);
        r.projective.push_back(0);  // the label rule speaks about injectives only
    }
    return r;
}

// Vertical edges at even x <=> relatively injective (path route). The path
// lists objects in tree preorder, so translate back to set order.
inline std::vector<char> path_relative_injectives(int n, const Set& set) {
    const TernaryTree t = ternary_tree(n, set);
    const LatticePath p = tree_to_lattice_path(t);
    const auto xs = vertical_edge_xs(p);
    std::vector<Strand> preorder;
    auto rec = [&](auto&& self, const TernaryTree::Node* node) -> void {
        if (!node || node->leaf) return;
        preorder.push_back(node->strand);
        for (const auto& c : node->child) self(self, c.get());
    };
    rec(rec, t.root.get());
    std::vector<char> out(set.size(), 0);
    for (std::size_t i = 0; i < preorder.size(); ++i) {
        const auto it = std::lower_bound(set.begin(), set.end(), preorder[i]);
        out[it - set.begin()] = xs[i] % 2 == 0;
    }
    return out;
}

// --------------------------------------------------------------------------
// Support Hasse forest of an exceptional sequence (ordered set).

struct SupportForest {
    std::vector<int> parent;       // index into the sequence, -1 for roots
    std::vector<char> projective;  // per element
    std::vector<char> injective;
};

inline SupportForest support_forest(int n, const std::vector<StringModule>& sequence) {
    const Quiver q = straight_a(n);
    if (!is_exceptional_sequence(q, sequence))
        throw std::invalid_argument("support_forest: ordering is not an exceptional sequence");
    const std::size_t k = sequence.size();
    SupportForest f;
    f.parent.assign(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
        long best = -1;
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            const bool contains = sequence[j].lo <= sequence[i].lo &&
                                  sequence[i].hi <= sequence[j].hi &&
                                  sequence[j].length() > sequence[i].length();
            if (contains && (best < 0 || sequence[j].length() < sequence[best].length()))
                best = static_cast<long>(j);
        }
        f.parent[i] = static_cast<int>(best);
    }
    f.projective.assign(k, 0);
    f.injective.assign(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (f.parent[i] < 0) {
            f.projective[i] = f.injective[i] = 1;  // roots are both
        } else if (i < static_cast<std::size_t>(f.parent[i])) {
            f.projective[i] = 1;  // before the parent
        } else {
            f.injective[i] = 1;  // after the parent
        }
    }
    return f;
}

// --------------------------------------------------------------------------
// N_{n,m}: exceptional sets on A_{n+m} with n relatively injective elements.

inline std::vector<std::vector<BigUInt>> n_table(int max_total) {
    std::vector<std::vector<BigUInt>> t(max_total + 1,
                                        std::vector<BigUInt>(max_total + 1, BigUInt(0)));
    t[0][0] = BigUInt(1);
    for (int total = 1; total <= max_total; ++total) {
        for (int n = 1; n <= total; ++n) {
            const int m = total - n;
            BigUInt sum;
            for (int a = 0; a < n; ++a)
                for (int b = 0; a + b < n; ++b) {
                    const int c = n - 1 - a - b;
                    for (int i = 0; i <= m; ++i)
                        for (int j = 0; i + j <= m; ++j) {
                            const int km = m - i - j;
                            if (a + i > max_total || j + b > max_total || c + km > max_total)
                                continue;
                            sum += t[a][i] * t[j][b] * t[c][km];  // B subtree swaps colors
                        }
                }
            t[n][m] = std::move(sum);
        }
    }
    return t;
}

}  // namespace strands::typea
