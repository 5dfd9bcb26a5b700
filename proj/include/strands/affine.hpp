#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "strands/geometry.hpp"
#include "strands/quiver.hpp"
#include "strands/typea.hpp"

namespace strands::affine {

// Canonical representative of an outer equivalence class of families for
// straight A~ with n outer points: a small fundamental arc diagram with no
// dateline crossings and exactly one preprojective arc, stored as its strand
// diagram on the points 0..n+1. The strands coincide with the canonical
// fundamental lifts of the corresponding A~ modules.
struct FamilyRep {
    int n = 0;
    std::vector<Strand> strands;  // sorted

    friend bool operator==(const FamilyRep& a, const FamilyRep& b) {
        return a.n == b.n && a.strands == b.strands;
    }
    friend bool operator<(const FamilyRep& a, const FamilyRep& b) {
        return a.strands < b.strands;
    }
};

// Enumerate representatives: maximal preinjective c(0,k+1), the unique
// preprojective c(n-j,n+1), the support gap i, and type A exceptional sets
// on the four remaining intervals.
inline std::vector<FamilyRep> enumerate_representatives(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_representatives: n >= 1");
    std::vector<FamilyRep> out;
    for (int k = 0; k <= n - 1; ++k) {          // A = c(0, k+1)
        for (int j = 0; j <= n - 1 - k; ++j) {  // B = c(n-j, n+1)
            for (int i = 1; i <= k + 1; ++i) {  // gap between i-1 and i
                const int a = i - 1, b = k - i + 1, c = n - j - k - 1, d = j;
                for (const auto& sa : typea::enumerate_sets(a)) {
                    for (const auto& sb : typea::enumerate_sets(b)) {
                        for (const auto& sc : typea::enumerate_sets(c)) {
                            for (const auto& sd : typea::enumerate_sets(d)) {
                                FamilyRep rep;
                                rep.n = n;
                                rep.strands.push_back(Strand{0, k + 1, false});
                                rep.strands.push_back(Strand{n - j, n + 1, false});
                                for (const auto& m : sa)
                                    rep.strands.push_back(Strand{m.lo, m.hi, false});
                                for (const auto& m : sb)
                                    rep.strands.push_back(Strand{m.lo + i, m.hi + i, false});
                                for (const auto& m : sc)
                                    rep.strands.push_back(
                                        Strand{m.lo + k + 1, m.hi + k + 1, false});
                                for (const auto& m : sd)
                                    rep.strands.push_back(
                                        Strand{m.lo + n - j, m.hi + n - j, false});
                                std::sort(rep.strands.begin(), rep.strands.end());
                                out.push_back(std::move(rep));
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

inline ArcDiagram rep_to_arcs(const Quiver& q, const FamilyRep& rep) {
    return arcs_of_modules(q, rep.strands);
}

inline int preprojective_count(const ArcDiagram& d) {
    int c = 0;
    for (const auto& a : d)
        if (a.bridging() && a.twist() >= 0) ++c;
    return c;
}

inline bool dateline_free(const Quiver& q, const ArcDiagram& d) {
    for (const auto& a : d)
        if (crosses_dateline(q, a)) return false;
    return true;
}

// Shift the whole diagram by inner twists until the largest bridging twist
// count is zero; this is the canonical small position of its family.
inline std::pair<ArcDiagram, long> smallify(const ArcDiagram& d) {
    long max_t = 0;
    bool seen = false;
    for (const auto& a : d)
        if (a.bridging()) { max_t = seen ? std::max(max_t, a.twist()) : a.twist(); seen = true; }
    if (!seen) throw std::invalid_argument("smallify: diagram has no bridging arcs");
    return {inner_twist(d, -max_t), -max_t};
}

struct TwistWord {
    long inner = 0;  // 2-pi inner twists
    int outer = 0;   // 2-pi/n outer twists, mod n
};

// Canonical representative of the family of d, together with the twist word
// such that applying `outer` outer twists then `inner` inner twists to d
// yields the representative.
inline std::pair<FamilyRep, TwistWord> representative_of(const Quiver& q, const ArcDiagram& d) {
    const int n = q.vertex_count() - 1;
    const auto check = check_fundamental_arcs(q, d);
    if (!check.ok)
        throw std::invalid_argument("representative_of: not a fundamental arc diagram (" +
                                    check.detail + ")");
    std::optional<FamilyRep> found;
    TwistWord w;
    ArcDiagram rotated = d;
    for (int r = 0; r < n; ++r) {
        auto [small, shift] = smallify(rotated);
        if (dateline_free(q, small) && preprojective_count(small) == 1) {
            FamilyRep rep;
            rep.n = n;
            for (const auto& a : small) rep.strands.push_back(strand_of_arc(q, a));
            std::sort(rep.strands.begin(), rep.strands.end());
            if (found && !(*found == rep))
                throw std::logic_error("representative_of: representative not unique");
            if (!found) { found = rep; w = TwistWord{shift, r}; }
        }
        rotated = outer_twist(q, rotated);
    }
    if (!found) throw std::logic_error("representative_of: no representative in the orbit");
    return {*found, w};
}

// The n distinct small diagrams of the outer equivalence class, in orbit
// order starting from the representative itself.
inline std::vector<ArcDiagram> expand_orbit(const Quiver& q, const FamilyRep& rep) {
    const int n = rep.n;
    std::vector<ArcDiagram> out;
    ArcDiagram d = rep_to_arcs(q, rep);
    for (int r = 0; r < n; ++r) {
        out.push_back(d);
        d = smallify(outer_twist(q, d)).first;
    }
    return out;
}

// --------------------------------------------------------------------------
// Labels (the word trees that encode representatives as lattice paths).

struct Label {
    struct Word {
        std::string text;
        bool circled = false;
        std::optional<Strand> strand;    // the strand that got the word circled
        std::vector<Word> children;      // 3 slots for circled words
    };
    int n = 0;
    std::vector<Word> under_a;  // slots a, b, c of the maximal preinjective
    std::vector<Word> under_b;  // the single slot a of the preprojective
};

namespace detail {

// Slot patterns while labeling. A right node X = c(u,v) attaches at u and
// grows rightward; its slots are the chain strand from v, the longest
// nested strand sharing u, and the longest nested strand sharing v (in that
// order). Left nodes mirror this. Candidates are confined to one side of
// the preprojective base point so the A and B subtrees stay disjoint.
inline std::array<std::optional<Strand>, 3> label_slots(const std::vector<Strand>& pool,
                                                        const Strand& x, bool right) {
    std::array<std::optional<Strand>, 3> out;
    for (const auto& s : pool) {
        if (s == x) continue;
        if (right) {
            if (s.lo == x.hi && (!out[0] || s.hi > out[0]->hi)) out[0] = s;          // a
            if (s.lo == x.lo && s.hi < x.hi && (!out[1] || s.hi > out[1]->hi)) out[1] = s;  // b
            if (s.hi == x.hi && s.lo > x.lo && (!out[2] || s.lo < out[2]->lo)) out[2] = s;  // c
        } else {
            if (s.hi == x.lo && (!out[0] || s.lo < out[0]->lo)) out[0] = s;          // a
            if (s.lo == x.lo && s.hi < x.hi && (!out[1] || s.hi > out[1]->hi)) out[1] = s;  // b
            if (s.hi == x.hi && s.lo > x.lo && (!out[2] || s.lo < out[2]->lo)) out[2] = s;  // c
        }
    }
    return out;
}

inline Label::Word label_word(const std::vector<Strand>& pool, const std::string& text,
                              const std::optional<Strand>& strand, bool right, int& circles) {
    Label::Word w;
    w.text = text;
    if (!strand) return w;
    w.circled = true;
    w.strand = strand;
    ++circles;
    const auto slots = label_slots(pool, *strand, right);
    const char letters[3] = {'a', 'b', 'c'};
    for (int s = 0; s < 3; ++s) {
        // slot a keeps the orientation; slot b's child always ends up right
        // oriented and slot c's left (b flips on left nodes, c on right ones)
        const bool child_right = (s == 0) ? right : (s == 1);
        w.children.push_back(
            label_word(pool, text + letters[s], slots[s], child_right, circles));
    }
    return w;
}

}  // namespace detail

inline Label label_diagram(const FamilyRep& rep) {
    const int n = rep.n;
    const long top = n + 1;
    std::optional<Strand> a_strand, b_strand;
    for (const auto& s : rep.strands) {
        if (s.lo == 0 && (!a_strand || s.hi > a_strand->hi)) a_strand = s;
        if (s.hi == top) b_strand = s;
    }
    if (!a_strand || !b_strand)
        throw std::invalid_argument("label_diagram: malformed representative");
    const long jb = b_strand->lo;

    std::vector<Strand> pool_a, pool_b;
    for (const auto& s : rep.strands) {
        if (s == *b_strand) continue;
        (s.lo >= jb ? pool_b : pool_a).push_back(s);
    }

    Label label;
    label.n = n;
    int circles = 0;
    // A = c(0,i) is right oriented: slots a (chain from i), b (nested at 0),
    // c (nested at i). B = c(j,n+1) has the single slot a = longest c(j,q).
    const auto slots_a = detail::label_slots(pool_a, *a_strand, true);
    const char letters[3] = {'a', 'b', 'c'};
    for (int s = 0; s < 3; ++s) {
        const bool child_right = s != 2;  // slot c of a right node flips
        label.under_a.push_back(detail::label_word(
            pool_a, std::string(1, letters[s]), slots_a[s], child_right, circles));
    }
    std::optional<Strand> b_child;
    for (const auto& s : pool_b)
        if (s.lo == jb && (!b_child || s.hi > b_child->hi)) b_child = s;
    label.under_b.push_back(detail::label_word(pool_b, "a", b_child, true, circles));
    if (circles != n - 1)
        throw std::logic_error("label_diagram: expected " + std::to_string(n - 1) +
                               " circled words, found " + std::to_string(circles));
    return label;
}

// Reading the label top to bottom: one horizontal unit per uncircled word,
// one vertical unit per circled word.
inline typea::LatticePath label_to_path(const Label& label) {
    typea::LatticePath p;
    auto rec = [&](auto&& self, const Label::Word& w) -> void {
        p.steps.push_back(w.circled ? 'U' : 'R');
        for (const auto& c : w.children) self(self, c);
    };
    for (const auto& w : label.under_a) rec(rec, w);
    for (const auto& w : label.under_b) rec(rec, w);
    return p;
}

// Member of P_m(4,2): (0,0) to (4+2m, m), strictly above y=(x-4)/2 before
// the endpoint.
inline bool valid_rothe_path(const typea::LatticePath& p, int m) {
    if (static_cast<int>(p.steps.size()) != 4 + 3 * m) return false;
    long x = 0, y = 0;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        if (p.steps[i] == 'U') ++y;
        else if (p.steps[i] == 'R') ++x;
        else return false;
        const bool last = i + 1 == p.steps.size();
        if (last ? 2 * y != x - 4 : 2 * y <= x - 4) return false;
    }
    return y == m;
}

}  // namespace strands::affine
