#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "strands/affine.hpp"
#include "strands/clusters.hpp"
#include "strands/counting.hpp"
#include "strands/geometry.hpp"
#include "strands/homology.hpp"
#include "strands/quiver.hpp"
#include "strands/typea.hpp"

// Cross-checks between the enumeration engines, the closed-form counts, the
// bijections, and the linear-algebra oracle. `strands verify` runs these;
// the acceptance suite pins the same properties at the full stated ranges.
namespace strands::verify {

struct Result {
    std::string property;
    bool ok = true;
    std::string detail;
};

namespace detail {

inline Result fail(const std::string& prop, const std::string& why) { return {prop, false, why}; }
inline Result pass(const std::string& prop, const std::string& what) { return {prop, true, what}; }

}  // namespace detail

// E(n) counts from enumeration match (1/(2n+1)) C(3n,n); brute force agrees
// on the small range.
inline Result typea_counts(int max_n, int brute_max = 4) {
    for (int n = 0; n <= max_n; ++n) {
        const auto sets = typea::enumerate_sets(n);
        if (BigUInt(sets.size()) != exceptional_count(n))
            return detail::fail("typea-counts", "E(" + std::to_string(n) + ") != closed form");
        std::set<typea::Set> uniq(sets.begin(), sets.end());
        if (uniq.size() != sets.size())
            return detail::fail("typea-counts", "duplicate sets at n=" + std::to_string(n));
    }
    for (int n = 1; n <= brute_max; ++n) {
        auto sets = typea::enumerate_sets(n);
        std::sort(sets.begin(), sets.end());
        if (sets != typea::brute_force_sets(n))
            return detail::fail("typea-counts",
                                "brute-force mismatch at n=" + std::to_string(n));
    }
    return detail::pass("typea-counts", "E(n) verified for n <= " + std::to_string(max_n) +
                                            ", brute force for n <= " +
                                            std::to_string(brute_max));
}

inline Result affine_counts(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        const auto reps = affine::enumerate_representatives(n);
        if (BigUInt(reps.size()) != rothe(4, 3, n - 1))
            return detail::fail("affine-counts",
                                "representative count mismatch at n=" + std::to_string(n));
        const Quiver q = straight_a_tilde(n);
        std::size_t families = 0;
        for (const auto& rep : reps) families += affine::expand_orbit(q, rep).size();
        BigUInt expected = rothe(4, 3, n - 1);
        expected *= n;
        if (BigUInt(families) != expected)
            return detail::fail("affine-counts",
                                "family count mismatch at n=" + std::to_string(n));
    }
    return detail::pass("affine-counts",
                        "A_{n-1}(4,3) and n*A_{n-1}(4,3) verified for n <= " +
                            std::to_string(max_n));
}

inline Result affine_validity(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        const Quiver q = straight_a_tilde(n);
        for (const auto& rep : affine::enumerate_representatives(n)) {
            if (!check_fundamental_diagram(q, rep.strands).ok)
                return detail::fail("affine-validity", "non-fundamental representative");
            if (!sort_exceptional_set(q, rep.strands))
                return detail::fail("affine-validity", "representative not exceptional");
            const auto arcs = affine::rep_to_arcs(q, rep);
            if (!is_small(arcs) || !affine::dateline_free(q, arcs) ||
                affine::preprojective_count(arcs) != 1)
                return detail::fail("affine-validity", "representative not in normal form");
        }
    }
    return detail::pass("affine-validity",
                        "representatives fundamental+exceptional for n <= " +
                            std::to_string(max_n));
}

inline Result cluster_counts(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        const Quiver q = straight_a_tilde(n);
        const auto ts = clusters::small_triangulations(q);
        BigUInt expected = catalan(n);
        expected *= n;
        if (BigUInt(ts.size()) != expected)
            return detail::fail("cluster-counts", "count mismatch at n=" + std::to_string(n));
        for (const auto& t : ts)
            if (!clusters::is_triangulation(q, t))
                return detail::fail("cluster-counts", "invalid triangulation enumerated");
    }
    return detail::pass("cluster-counts", "n C_n verified for n <= " + std::to_string(max_n));
}

inline Result golden_cluster() {
    const Quiver q = straight_a_tilde(3);
    const ArcDiagram t{Arc{0, 1, 0}, Arc{1, 0, 0}, Arc{3, 0, 0}, Arc{1, 3, 0}};
    const auto name = clusters::cluster_name(q, clusters::cluster_of(q, t));
    if (name != "P_2[1] + P_4[1] + I_1 + S_3")
        return detail::fail("golden-cluster", "got " + name);
    return detail::pass("golden-cluster", "I_1 + S_3 + P_2[1] + P_4[1] reproduced");
}

inline Result conventions_theorem(int max_n) {
    for (int n = 3; n <= max_n; ++n) {
        const Quiver q = straight_a_tilde(n);
        for (const auto& t : clusters::small_triangulations(q)) {
            if (clusters::conventions_coincide(q, t) != check_fundamental_arcs(q, t).ok)
                return detail::fail("conventions", "theorem fails at n=" + std::to_string(n));
        }
    }
    return detail::pass("conventions",
                        "coincide <=> fundamental over all small triangulations, n <= " +
                            std::to_string(max_n));
}

inline Result order_independence(int max_n) {
    for (int n = 2; n <= max_n; ++n) {
        const Quiver q = straight_a(n);
        for (const auto& set : typea::enumerate_sets(n)) {
            const auto oracle = relative_status(n, set);
            std::vector<std::size_t> perm(set.size());
            for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
            do {
                std::vector<StringModule> seq;
                for (auto i : perm) seq.push_back(set[i]);
                if (!is_exceptional_sequence(q, seq)) continue;
                const auto forest = typea::support_forest(n, seq);
                for (std::size_t pos = 0; pos < seq.size(); ++pos) {
                    const auto it = std::lower_bound(set.begin(), set.end(), seq[pos]);
                    const auto idx = it - set.begin();
                    if (static_cast<bool>(forest.projective[pos]) !=
                            static_cast<bool>(oracle.projective[idx]) ||
                        static_cast<bool>(forest.injective[pos]) !=
                            static_cast<bool>(oracle.injective[idx]))
                        return detail::fail("order-independence",
                                            "status depends on the ordering");
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return detail::pass("order-independence",
                        "relative status order-invariant for n <= " + std::to_string(max_n));
}

inline Result classification_routes(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& set : typea::enumerate_sets(n)) {
            const auto oracle = relative_status(n, set);
            const auto comb = typea::combinatorial_relatives(n, set);
            const auto even_b = typea::tree_label_relatives(n, set);
            const auto even_x = typea::path_relative_injectives(n, set);
            if (oracle.projective != comb.projective || oracle.injective != comb.injective)
                return detail::fail("classification-routes", "oracle vs orientation");
            if (even_b.injective != comb.injective)
                return detail::fail("classification-routes", "even-b vs orientation");
            for (std::size_t i = 0; i < set.size(); ++i)
                if (even_x[i] != comb.injective[i])
                    return detail::fail("classification-routes", "even-x vs orientation");
        }
    }
    return detail::pass("classification-routes",
                        "four classification routes agree for n <= " + std::to_string(max_n));
}

inline Result n_table_check(int max_total) {
    const auto t = typea::n_table(std::max(max_total, 6));
    for (int n = 0; n <= 6; ++n)
        if (t[n][0] != catalan(n)) return detail::fail("n-table", "N_{n,0} != C_n");
    for (int total = 1; total <= max_total; ++total) {
        std::map<int, unsigned long long> by_inj;
        for (const auto& set : typea::enumerate_sets(total)) {
            const auto rel = typea::combinatorial_relatives(total, set);
            int cnt = 0;
            for (char c : rel.injective) cnt += c;
            ++by_inj[cnt];
        }
        for (int n = 0; n <= total; ++n) {
            const unsigned long long want = by_inj.count(n) ? by_inj[n] : 0;
            if (t[n][total - n] != BigUInt(want))
                return detail::fail("n-table", "table vs enumeration at total=" +
                                                   std::to_string(total));
        }
    }
    return detail::pass("n-table", "recursion matches enumeration for n+m <= " +
                                       std::to_string(max_total) + ", N_{n,0}=C_n for n <= 6");
}

inline Result bijections(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        std::set<std::string> paths;
        const auto sets = typea::enumerate_sets(n);
        for (const auto& set : sets) {
            const auto tree = typea::ternary_tree(n, set);
            if (typea::tree_to_set(tree) != set)
                return detail::fail("bijections", "set->tree->set not the identity");
            const auto p = typea::tree_to_lattice_path(tree);
            if (!typea::valid_height_path(p, n))
                return detail::fail("bijections", "invalid lattice path");
            paths.insert(p.steps);
        }
        if (paths.size() != sets.size())
            return detail::fail("bijections", "tree->path not injective");

        std::set<std::string> rothe_paths;
        const auto reps = affine::enumerate_representatives(n);
        for (const auto& rep : reps) {
            const auto p = affine::label_to_path(affine::label_diagram(rep));
            if (!affine::valid_rothe_path(p, n - 1))
                return detail::fail("bijections", "label path outside P_{n-1}(4,2)");
            rothe_paths.insert(p.steps);
        }
        if (rothe_paths.size() != reps.size())
            return detail::fail("bijections", "label->path not injective");
    }
    return detail::pass("bijections", "tree/path and label/path bijections for n <= " +
                                          std::to_string(max_n));
}

inline Result oracle_consistency(int max_n) {
    for (int n = 1; n <= max_n; ++n) {
        const Quiver q = straight_a(n);
        for (const auto& m : all_intervals(n))
            for (const auto& w : all_intervals(n)) {
                const auto p = interval_hom_ext(m, w, n);
                if (p.hom != hom_dim(q, m, w) || p.ext != ext_dim(q, m, w))
                    return detail::fail("oracle", "closed form vs linear algebra");
            }
    }
    const Quiver q3 = straight_a_tilde(3);
    std::vector<StringModule> mods;
    for (int i = 1; i <= 4; ++i)
        for (long k = 1; k <= 8; ++k) mods.push_back(module_from_ijk(q3, i, k));
    for (const auto& m : mods)
        for (const auto& w : mods) {
            const long euler = euler_form(q3, dimension_vector(q3, m), dimension_vector(q3, w));
            if (hom_dim(q3, m, w) - ext_dim(q3, m, w) != euler)
                return detail::fail("oracle", "euler identity fails");
        }
    return detail::pass("oracle", "closed form == linear algebra for n <= " +
                                      std::to_string(max_n) + "; euler identity on A~_3");
}

inline Result twist_laws() {
    const Quiver q = straight_a_tilde(3);
    const ArcDiagram fig{Arc{0, 1, 0}, Arc{1, 0, 0}, Arc{3, 0, 0}, Arc{1, 3, 0}};
    if (inner_twist(inner_twist(fig, 1), -1) != sorted_diagram(fig))
        return detail::fail("twist-laws", "inner twists do not invert");
    const ArcDiagram t2 = outer_twist(q, fig);
    const ArcDiagram t3 = outer_twist(q, t2);
    const ArcDiagram expect2 =
        sorted_diagram({Arc{0, 2, 0}, Arc{2, 0, 0}, Arc{0, 1, 0}, Arc{2, 1, 0}});
    const ArcDiagram expect3 =
        sorted_diagram({Arc{0, 3, 0}, Arc{3, 0, 0}, Arc{0, 2, 0}, Arc{3, 2, 0}});
    if (t2 != expect2 || t3 != expect3)
        return detail::fail("twist-laws", "outer orbit differs from the worked example");
    if (outer_twist(q, t3) != inner_twist(fig, -1))
        return detail::fail("twist-laws", "outer^n != inner^{-1}");
    return detail::pass("twist-laws", "inner inverse pair and the outer orbit reproduced");
}

inline Result golden_representation() {
    const Quiver q = straight_a_tilde(3);
    const Representation rep = realize(q, module_from_ijk(q, 2, 6));
    if (rep.dims != std::vector<int>{1, 1, 2, 2})
        return detail::fail("golden-representation", "dimension vector");
    const bool ok = rep.matrices[0][0][0] == Rat(0) && rep.matrices[0][1][0] == Rat(1) &&
                    rep.matrices[1][0][0] == Rat(1) && rep.matrices[2][0][0] == Rat(1) &&
                    rep.matrices[2][1][0] == Rat(0) && rep.matrices[3][0][0] == Rat(1) &&
                    rep.matrices[3][0][1] == Rat(0) && rep.matrices[3][1][0] == Rat(0) &&
                    rep.matrices[3][1][1] == Rat(1);
    if (!ok) return detail::fail("golden-representation", "matrix entries");
    return detail::pass("golden-representation", "24_6 matrices reproduced");
}

inline Result counting_recursions(int max_n) {
    auto r = check_k_fold_recursion(3, max_n);
    if (!r.ok) return detail::fail("recursions", r.detail);
    r = check_k_fold_recursion(2, max_n);
    if (!r.ok) return detail::fail("recursions", r.detail);
    r = check_four_three_recursion(std::min<std::uint64_t>(max_n, 8));
    if (!r.ok) return detail::fail("recursions", r.detail);
    r = check_generating_function(std::min<std::uint64_t>(max_n, 10));
    if (!r.ok) return detail::fail("recursions", r.detail);
    return detail::pass("recursions", "Rothe and generating-function recursions up to n=" +
                                          std::to_string(max_n));
}

// name -> runner at the requested exhaustive cap
inline std::vector<std::pair<std::string, std::function<Result(int)>>> registry() {
    return {
        {"oracle", [](int n) { return oracle_consistency(std::min(n + 2, 6)); }},
        {"golden-representation", [](int) { return golden_representation(); }},
        {"typea-counts", [](int n) { return typea_counts(std::min(n + 3, 7), std::min(n, 4)); }},
        {"affine-counts", [](int n) { return affine_counts(std::min(n + 2, 6)); }},
        {"affine-validity", [](int n) { return affine_validity(std::min(n, 4)); }},
        {"cluster-counts", [](int n) { return cluster_counts(std::min(n + 2, 6)); }},
        {"golden-cluster", [](int) { return golden_cluster(); }},
        {"conventions", [](int n) { return conventions_theorem(std::min(std::max(n, 3), 4)); }},
        {"order-independence", [](int n) { return order_independence(std::min(n, 4)); }},
        {"classification-routes",
         [](int n) { return classification_routes(std::min(n + 1, 5)); }},
        {"n-table", [](int n) { return n_table_check(std::min(n + 1, 5)); }},
        {"bijections", [](int n) { return bijections(std::min(n + 1, 5)); }},
        {"twist-laws", [](int) { return twist_laws(); }},
        {"recursions", [](int n) { return counting_recursions(std::max(n, 12)); }},
    };
}

}  // namespace strands::verify
