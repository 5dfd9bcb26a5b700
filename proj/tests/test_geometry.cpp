#include <doctest.h>

#include <set>

#include "strands/affine.hpp"
#include "strands/geometry.hpp"
#include "strands/homology.hpp"

using namespace strands;

namespace {
const Quiver q3 = straight_a_tilde(3);

Strand s(long lo, long hi) { return Strand{lo, hi, false}; }
}  // namespace

TEST_CASE("strand crossing: interleaved, shared, nested") {
    const Quiver a4 = straight_a(4);
    CHECK(strands_cross(a4, s(0, 2), s(1, 3)));        // interleaved, equal '+' signs
    CHECK_FALSE(strands_cross(a4, s(0, 2), s(2, 4)));  // shared endpoint only
    CHECK_FALSE(strands_cross(a4, s(0, 3), s(1, 2)));  // nested under constant signs
    CHECK_FALSE(strands_cross(a4, s(0, 1), s(2, 4)));  // disjoint
}

TEST_CASE("strand crossing with signs and period") {
    // nested pair across the inner point: signs differ, forced crossing
    CHECK(strands_cross(q3, s(1, 12), s(5, 8)));
    // bridging arcs with twist difference one are compatible ...
    CHECK_FALSE(strands_cross(q3, s(1, 4), s(1, 8)));
    // ... but twist difference two forces a crossing
    CHECK(strands_cross(q3, s(1, 4), s(1, 12)));
    // interleaved translates with opposite signs at the inner pair: no cross
    CHECK_FALSE(strands_cross(q3, s(-1, 4), s(3, 8)));
}

TEST_CASE("self intersection and loops") {
    CHECK_FALSE(self_intersects(q3, s(3, 8)));   // winding bridging arc embeds
    CHECK(self_intersects(q3, s(1, 6)));         // exterior arc winding past itself
    CHECK(is_loop(q3, s(1, 5)));                 // the noose at outer 1
    CHECK(is_loop(q3, s(0, 4)));                 // the inner loop
    CHECK_FALSE(is_loop(q3, s(1, 4)));
    const Quiver a4 = straight_a(4);
    CHECK_FALSE(self_intersects(a4, s(0, 4)));
    CHECK_FALSE(is_loop(a4, s(0, 4)));
}

TEST_CASE("local order matches the six configurations") {
    const Quiver a4 = straight_a(4);
    // at a '+' point, a left-exiting strand is clockwise from a right-exiting
    CHECK(local_order(a4, s(2, 3), s(0, 2), 2) == RelOrder::Clockwise);
    CHECK(local_order(a4, s(0, 2), s(2, 3), 2) == RelOrder::Counterclockwise);
    // both leaving right at '+': the longer (lower) strand is clockwise
    CHECK(local_order(a4, s(1, 2), s(1, 3), 1) == RelOrder::Clockwise);
    CHECK(local_order(a4, s(1, 3), s(1, 2), 1) == RelOrder::Counterclockwise);
    // both leaving left at '+': the shorter (upper) strand is clockwise
    CHECK(local_order(a4, s(0, 3), s(1, 3), 3) == RelOrder::Clockwise);
    // at the '-' point 0 of A~_3, right exits: longer is clockwise
    CHECK(local_order(q3, s(0, 1), s(0, 3), 0) == RelOrder::Clockwise);
    CHECK(local_order(q3, s(0, 3), s(0, 1), 0) == RelOrder::Counterclockwise);
    CHECK_THROWS(local_order(q3, s(0, 2), s(1, 3), 0));
}

TEST_CASE("fundamental diagram: the A~_3 example") {
    // Strands c(0,2), c(2,4), c(1,2), c(2,3) form a fundamental diagram.
    const std::vector<Strand> d{s(0, 2), s(1, 2), s(2, 3), s(2, 4)};
    const auto check = check_fundamental_diagram(q3, d);
    CHECK(check.ok);
}

TEST_CASE("fundamental diagram defect reporting") {
    // crossing pair
    auto c = check_fundamental_diagram(q3, {s(1, 3), s(2, 4), s(0, 1), s(0, 2)});
    // c(1,3) vs c(2,4): interleaved at +,+: cross
    CHECK_FALSE(c.ok);
    CHECK(c.defect == DiagramDefect::Crossing);
    // wrong size
    c = check_fundamental_diagram(q3, {s(0, 1)});
    CHECK(c.defect == DiagramDefect::WrongSize);
    // loop
    c = check_fundamental_diagram(q3, {s(0, 4), s(0, 1), s(0, 2), s(0, 3)});
    CHECK_FALSE(c.ok);
    CHECK(c.defect == DiagramDefect::Loop);
}

TEST_CASE("a two-strand cycle: clockwise at one shared point, counterclockwise at the other") {
    // c(1,2) and c(2,5) meet at 2 and (after translation) at 5; the local
    // orders disagree, which is exactly a length-2 cycle
    const Strand s2 = s(1, 2), t = s(2, 5);
    CHECK(local_order(q3, t, s2, 2) == RelOrder::Clockwise);
    CHECK(local_order(q3, t, s2, 5) == RelOrder::Counterclockwise);
    const auto edges = clockwise_edges(q3, {s2, t});
    CHECK(edges.size() == 2);  // both directions present
    const auto check = check_fundamental_diagram(q3, {s2, t}, 0);
    CHECK_FALSE(check.ok);
    CHECK(check.defect == DiagramDefect::Cycle);
    // and indeed the pair is not an exceptional set
    CHECK_FALSE(sort_exceptional_set(q3, {s2, t}).has_value());
}

TEST_CASE("the projectives form a fundamental diagram, Fig. 4's set does not") {
    // {P_1..P_4} = initial triangulation, exceptional
    const std::vector<Strand> proj{s(1, 4), s(2, 4), s(3, 4), s(3, 8)};
    CHECK(check_fundamental_diagram(q3, proj).ok);
    // {S_1 = c(0,1), P_2 = c(1,4), P_4 = c(3,4), 13_2 = c(1,3)} has a 3-cycle
    const std::vector<Strand> fig4{s(0, 1), s(1, 4), s(3, 4), s(1, 3)};
    const auto check = check_fundamental_diagram(q3, fig4);
    CHECK_FALSE(check.ok);
    CHECK(check.defect == DiagramDefect::Cycle);
}

TEST_CASE("cycles agree with the homological oracle on A~_3 diagrams") {
    // every 4-element family of short strings: fundamental iff the set is
    // exceptional (winding <= 1, the spec's desk-scale cap)
    std::vector<StringModule> mods;
    for (int i = 1; i <= 4; ++i)
        for (long k = 1; k <= 8; ++k) mods.push_back(module_from_ijk(q3, i, k));
    const std::size_t m = mods.size();
    std::vector<std::vector<char>> nonzero(m, std::vector<char>(m, 0));
    std::vector<char> exceptional(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        exceptional[i] = is_exceptional_module(q3, mods[i]);
        for (std::size_t j = 0; j < m; ++j)
            if (i != j)
                nonzero[i][j] =
                    hom_dim(q3, mods[i], mods[j]) != 0 || ext_dim(q3, mods[i], mods[j]) != 0;
    }
    auto sortable = [&](const std::vector<std::size_t>& pick) {
        for (auto i : pick)
            if (!exceptional[i]) return false;
        // Kahn on the precedence digraph restricted to the subset
        std::vector<char> used(pick.size(), 0);
        for (std::size_t round = 0; round < pick.size(); ++round) {
            bool advanced = false;
            for (std::size_t x = 0; x < pick.size() && !advanced; ++x) {
                if (used[x]) continue;
                bool source = true;
                for (std::size_t y = 0; y < pick.size(); ++y)
                    if (!used[y] && y != x && nonzero[pick[y]][pick[x]]) source = false;
                if (source) {
                    // also reject two-way pairs
                    for (std::size_t y = 0; y < pick.size(); ++y)
                        if (y != x && nonzero[pick[y]][pick[x]] && nonzero[pick[x]][pick[y]])
                            return false;
                    used[x] = 1;
                    advanced = true;
                }
            }
            if (!advanced) return false;
        }
        return true;
    };
    long fundamental_count = 0;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t c = b + 1; c < m; ++c)
                for (std::size_t d = c + 1; d < m; ++d) {
                    const std::vector<std::size_t> pick{a, b, c, d};
                    const std::vector<StringModule> set{mods[a], mods[b], mods[c], mods[d]};
                    const bool fund = check_fundamental_diagram(q3, set).ok;
                    REQUIRE(fund == sortable(pick));
                    fundamental_count += fund;
                }
    CHECK(fundamental_count > 0);
}

TEST_CASE("fundamental lifts") {
    // (3,4;1) = 34_5 is preprojective with i=3, k=5: the lift is c(3,8)
    const Strand lift = fundamental_lift(q3, module_from_winding(q3, 3, 4, 1));
    CHECK(lift.lo == 3);
    CHECK(lift.hi == 8);
    // a simple right regular sits at c(j-1, j): needs both adjacent signs '-'
    const Quiver mixed = build_quiver({QuiverKind::TypeATilde, {'-', '+', '-', '-'}});
    const StringModule s3 = module_from_ijk(mixed, 2, 1);
    CHECK(classify_component(mixed, s3) == ComponentClass::RightRegular);
    CHECK(fundamental_lift(mixed, s3) == Strand{2, 3, false});
    // type A intervals lift to themselves
    const Quiver a5 = straight_a(5);
    CHECK(fundamental_lift(a5, interval_module(1, 4)) == Strand{1, 4, false});
    CHECK_THROWS(fundamental_lift(q3, band_module()));
}

TEST_CASE("psi: modules to arcs and back") {
    // (3,4;1) -> a(3,0)[1]
    CHECK(arc_of_module(q3, module_from_winding(q3, 3, 4, 1)) == Arc{3, 0, 1});
    // (4,3;0) -> a(0,3)[0]
    CHECK(arc_of_module(q3, module_from_winding(q3, 4, 3, 0)) == Arc{0, 3, 0});
    // (4,3;1) -> a(0,3)[-1]
    CHECK(arc_of_module(q3, module_from_winding(q3, 4, 3, 1)) == Arc{0, 3, -1});
    // M_{a,b}-style: the left regular 13_2 -> a(1,3)[0]
    CHECK(arc_of_module(q3, module_from_ijk(q3, 1, 2)) == Arc{1, 3, 0});
    // round trips on a range of modules
    for (int i = 1; i <= 4; ++i)
        for (long k = 1; k <= 12; ++k) {
            const StringModule m = module_from_ijk(q3, i, k);
            CHECK(module_of_arc(q3, arc_of_module(q3, m)) == m);
        }
}

TEST_CASE("phi injects string modules into strands") {
    std::set<std::pair<long, long>> seen;
    int count = 0;
    for (int i = 1; i <= 4; ++i)
        for (long k = 1; k <= 12; ++k) {
            const StringModule m = module_from_ijk(q3, i, k);
            CHECK(seen.insert({m.lo, m.hi}).second);
            ++count;
        }
    CHECK(count == 48);
}

TEST_CASE("arc normalization and twist parameters") {
    CHECK(normalize_arc(0, 2, 1) == Arc{2, 0, 0});
    CHECK(normalize_arc(0, 2, 2) == Arc{2, 0, 1});
    CHECK(normalize_arc(2, 0, -1) == Arc{0, 2, 0});
    CHECK(normalize_arc(2, 0, 0) == Arc{2, 0, 0});
    CHECK(bridge_arc(3, 0) == Arc{3, 0, 0});
    CHECK(bridge_arc(3, -1) == Arc{0, 3, 0});
    CHECK(Arc{3, 0, 1}.twist() == 1);
    CHECK(Arc{0, 3, 0}.twist() == -1);
    CHECK(Arc{0, 3, -1}.twist() == -2);
}

TEST_CASE("inner twist shifts bridging arcs only") {
    const ArcDiagram d{Arc{3, 0, 0}, Arc{0, 1, 0}, Arc{1, 3, 0}};
    const auto up = inner_twist(d, 1);
    CHECK(std::find(up.begin(), up.end(), Arc{3, 0, 1}) != up.end());
    CHECK(std::find(up.begin(), up.end(), Arc{1, 0, 0}) != up.end());  // a(0,1)[0] twisted
    CHECK(std::find(up.begin(), up.end(), Arc{1, 3, 0}) != up.end());
    CHECK(inner_twist(inner_twist(d, 1), -1) == sorted_diagram(d));
    CHECK(inner_twist(d, 0) == sorted_diagram(d));
}

TEST_CASE("outer twist walks the Fig. 6 orbit") {
    const ArcDiagram t1{Arc{0, 1, 0}, Arc{1, 0, 0}, Arc{3, 0, 0}, Arc{1, 3, 0}};
    const ArcDiagram t2 = outer_twist(q3, t1);
    CHECK(t2 == sorted_diagram({Arc{0, 2, 0}, Arc{2, 0, 0}, Arc{0, 1, 0}, Arc{2, 1, 0}}));
    const ArcDiagram t3 = outer_twist(q3, t2);
    CHECK(t3 == sorted_diagram({Arc{0, 3, 0}, Arc{3, 0, 0}, Arc{0, 2, 0}, Arc{3, 2, 0}}));
    // three twists return the family up to one inverse inner twist
    const ArcDiagram t4 = outer_twist(q3, t3);
    CHECK(t4 == inner_twist(t1, -1));
}

TEST_CASE("inner twists preserve fundamentality of bridging-only diagrams") {
    // bridging-only diagrams keep their validity under any inner twist
    for (const auto& rep : strands::affine::enumerate_representatives(3)) {
        const auto arcs = strands::affine::rep_to_arcs(q3, rep);
        bool bridging_only = true;
        for (const auto& a : arcs) bridging_only = bridging_only && a.bridging();
        if (!bridging_only) continue;
        for (long k : {-2L, -1L, 1L, 3L}) {
            const auto twisted = inner_twist(arcs, k);
            CHECK(check_fundamental_arcs(q3, twisted).ok);
        }
    }
}

TEST_CASE("dateline crossing and smallness") {
    CHECK(crosses_dateline(q3, Arc{3, 0, 1}));
    CHECK_FALSE(crosses_dateline(q3, Arc{0, 3, 0}));
    CHECK_FALSE(crosses_dateline(q3, Arc{3, 0, 0}));
    CHECK(crosses_dateline(q3, Arc{0, 3, -1}));
    CHECK_FALSE(crosses_dateline(q3, Arc{1, 3, 0}));
    CHECK(crosses_dateline(q3, Arc{3, 2, 0}));  // wraps past the dateline
    CHECK(crosses_dateline(q3, Arc{3, 1, 0}));  // lift c(3,5) leaves [0, n+1]
    CHECK(is_small({Arc{0, 1, 0}, Arc{3, 0, 0}, Arc{1, 3, 0}}));
    CHECK_FALSE(is_small({Arc{3, 0, 1}}));
}
