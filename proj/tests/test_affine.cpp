#include <doctest.h>

#include <map>
#include <set>

#include "strands/affine.hpp"
#include "strands/counting.hpp"

using namespace strands;
using namespace strands::affine;

namespace {
Strand s(long lo, long hi) { return Strand{lo, hi, false}; }

std::map<std::string, bool> label_words(const Label& lbl) {
    std::map<std::string, bool> out;
    auto rec = [&](auto&& self, const Label::Word& w, const std::string& side) -> void {
        out[side + ":" + w.text] = w.circled;
        for (const auto& c : w.children) self(self, c, side);
    };
    for (const auto& w : lbl.under_a) rec(rec, w, "A");
    for (const auto& w : lbl.under_b) rec(rec, w, "B");
    return out;
}
}  // namespace

TEST_CASE("representative counts match A_{n-1}(4,3)") {
    const unsigned long long expect[] = {0, 1, 4, 18, 88, 455, 2448};
    for (int n = 1; n <= 6; ++n) {
        const auto reps = enumerate_representatives(n);
        CHECK(reps.size() == expect[n]);
        CHECK(rothe(4, 3, n - 1).to_ull() == reps.size());
        std::set<FamilyRep> uniq(reps.begin(), reps.end());
        CHECK(uniq.size() == reps.size());
    }
}

TEST_CASE("representatives are small fundamental diagrams with one preprojective") {
    for (int n = 1; n <= 4; ++n) {
        const Quiver q = straight_a_tilde(n);
        for (const auto& rep : enumerate_representatives(n)) {
            CHECK(check_fundamental_diagram(q, rep.strands).ok);
            const auto arcs = rep_to_arcs(q, rep);
            CHECK(is_small(arcs));
            CHECK(dateline_free(q, arcs));
            CHECK(preprojective_count(arcs) == 1);
            CHECK(sort_exceptional_set(q, rep.strands).has_value());
        }
    }
}

TEST_CASE("representatives double as type A diagrams on n+2 points") {
    for (int n = 1; n <= 4; ++n) {
        // reinterpreted over A_{n+1} with eps = (-,+,...,+,-)
        std::vector<Sign> eps(n + 2, '+');
        eps.front() = eps.back() = '-';
        const Quiver a{QuiverKind::TypeA, eps};
        for (const auto& rep : enumerate_representatives(n))
            CHECK(check_fundamental_diagram(a, rep.strands, n + 1).ok);
    }
}

TEST_CASE("representative_of is idempotent and inverts twists") {
    const Quiver q = straight_a_tilde(3);
    for (const auto& rep : enumerate_representatives(3)) {
        const auto arcs = rep_to_arcs(q, rep);
        const auto [found, w] = representative_of(q, arcs);
        CHECK(found == rep);
        CHECK(w.inner == 0);
        CHECK(w.outer == 0);

        // inner twist: same family, recorded shift
        const auto [f2, w2] = representative_of(q, inner_twist(arcs, 2));
        CHECK(f2 == rep);
        CHECK(w2.inner == -2);
        CHECK(w2.outer == 0);

        // outer twists: recovered with the matching rotation count
        ArcDiagram d = arcs;
        for (int r = 1; r <= 3; ++r) {
            d = outer_twist(q, d);
            const auto [f3, w3] = representative_of(q, d);
            CHECK(f3 == rep);
            CHECK(w3.outer == (3 - r) % 3);
        }
    }
}

TEST_CASE("expand_orbit produces n distinct small diagrams per class") {
    for (int n = 2; n <= 4; ++n) {
        const Quiver q = straight_a_tilde(n);
        std::set<ArcDiagram> all;
        for (const auto& rep : enumerate_representatives(n)) {
            const auto orbit = expand_orbit(q, rep);
            CHECK(static_cast<int>(orbit.size()) == n);
            for (const auto& d : orbit) {
                CHECK(is_small(d));
                CHECK(all.insert(d).second);  // orbits are pairwise disjoint
                const auto [back, w] = representative_of(q, d);
                CHECK(back == rep);
            }
        }
        // total family count n * A_{n-1}(4,3)
        CHECK(all.size() == n * rothe(4, 3, n - 1).to_ull());
    }
}

TEST_CASE("family counts for A~_1 and A~_2 are 1 and 8") {
    const Quiver q1 = straight_a_tilde(1);
    const Quiver q2 = straight_a_tilde(2);
    std::size_t fam1 = 0, fam2 = 0;
    for (const auto& rep : enumerate_representatives(1)) fam1 += expand_orbit(q1, rep).size();
    for (const auto& rep : enumerate_representatives(2)) fam2 += expand_orbit(q2, rep).size();
    CHECK(fam1 == 1);
    CHECK(fam2 == 8);
}

TEST_CASE("the A~_7 example label") {
    FamilyRep rep;
    rep.n = 7;
    rep.strands = {s(0, 4), s(4, 8), s(2, 3), s(2, 4), s(4, 6), s(5, 6), s(6, 7), s(1, 2)};
    std::sort(rep.strands.begin(), rep.strands.end());
    const Label lbl = label_diagram(rep);
    const auto words = label_words(lbl);
    const std::set<std::string> circled{"A:c", "A:ca", "A:cb", "B:a", "B:aa", "B:ac"};
    int total_circled = 0;
    for (const auto& [key, circ] : words) {
        CHECK(circ == (circled.count(key) > 0));
        total_circled += circ;
    }
    CHECK(total_circled == 6);
    CHECK(words.count("A:caa"));
    CHECK(words.count("A:cbc"));
    CHECK(words.count("A:cc"));
    CHECK(words.count("B:ab"));
    CHECK(words.count("B:aca"));
    const auto path = label_to_path(lbl);
    CHECK(valid_rothe_path(path, 6));
    CHECK(path.steps == "RRUURRRURRRRUURRRRURRR");
}

TEST_CASE("n=1: the unique representative and its trivial label") {
    const auto reps = enumerate_representatives(1);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].strands == std::vector<Strand>{s(0, 1), s(1, 2)});
    const Label lbl = label_diagram(reps[0]);
    const auto path = label_to_path(lbl);
    CHECK(path.steps == "RRRR");
    CHECK(valid_rothe_path(path, 0));
}

TEST_CASE("labels to paths: injective into P_{n-1}(4,2)") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> paths;
        const auto reps = enumerate_representatives(n);
        for (const auto& rep : reps) {
            const auto path = label_to_path(label_diagram(rep));
            CHECK(valid_rothe_path(path, n - 1));
            CHECK(paths.insert(path.steps).second);
        }
        CHECK(paths.size() == reps.size());
        // the target has exactly that many elements: |P_{n-1}(4,2)| = A_{n-1}(4,3)
        CHECK(paths.size() == rothe(4, 3, n - 1).to_ull());
    }
}

TEST_CASE("n=2 paths have their vertical step at each possible x") {
    std::set<std::string> steps;
    for (const auto& rep : enumerate_representatives(2))
        steps.insert(label_to_path(label_diagram(rep)).steps);
    CHECK(steps == std::set<std::string>{"URRRRRR", "RURRRRR", "RRURRRR", "RRRURRR"});
}
