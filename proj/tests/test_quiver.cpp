#include <doctest.h>

#include "strands/quiver.hpp"

using namespace strands;

TEST_CASE("build_quiver from orientation vectors") {
    // the running A~_3 example: eps = (-,+,+,+), arrows 1->2, 2->3, 3->4, 1->4
    const Quiver q = build_quiver({QuiverKind::TypeATilde, {'-', '+', '+', '+'}});
    CHECK(q.vertex_count() == 4);
    const auto arrows = q.arrows();
    REQUIRE(arrows.size() == 4);
    CHECK(arrows[0].label == 0);
    CHECK(arrows[0].source == 1);
    CHECK(arrows[0].target == 4);
    for (int i = 1; i <= 3; ++i) {
        CHECK(arrows[i].source == i);
        CHECK(arrows[i].target == i + 1);
    }
    CHECK(q.straight());

    const Quiver a2 = build_quiver({QuiverKind::TypeA, {'+', '+', '+'}});
    CHECK(a2.vertex_count() == 2);
    REQUIRE(a2.arrows().size() == 1);
    CHECK(a2.arrows()[0].source == 1);
    CHECK(a2.arrows()[0].target == 2);

    CHECK_THROWS(build_quiver({QuiverKind::TypeATilde, {'-', '-', '-', '-'}}));
    CHECK_THROWS(build_quiver({QuiverKind::TypeATilde, {'+', '+', '+', '+'}}));
}

TEST_CASE("realize reproduces the 24_6 example matrices") {
    const Quiver q = straight_a_tilde(3);
    // walk alpha_3 alpha_4^{-1} alpha_1 alpha_2 alpha_3, visits 3,4,1,2,3,4
    const StringModule m = module_from_ijk(q, 2, 6);
    CHECK(ijk_form(q, m).i == 2);
    CHECK(ijk_form(q, m).j == 4);
    CHECK(ijk_form(q, m).k == 6);
    const Representation rep = realize(q, m);
    CHECK(rep.dims == std::vector<int>{1, 1, 2, 2});

    const auto& a0 = rep.matrices[0];  // alpha_0 = the long arrow 1 -> 4
    REQUIRE(a0.size() == 2);
    CHECK(a0[0][0] == Rat(0));
    CHECK(a0[1][0] == Rat(1));

    const auto& a1 = rep.matrices[1];  // 1 -> 2
    CHECK(a1[0][0] == Rat(1));

    const auto& a2 = rep.matrices[2];  // 2 -> 3, the column [1 0]^T
    REQUIRE(a2.size() == 2);
    CHECK(a2[0][0] == Rat(1));
    CHECK(a2[1][0] == Rat(0));

    const auto& a3 = rep.matrices[3];  // 3 -> 4, identity
    CHECK(a3[0][0] == Rat(1));
    CHECK(a3[0][1] == Rat(0));
    CHECK(a3[1][0] == Rat(0));
    CHECK(a3[1][1] == Rat(1));
}

TEST_CASE("realize simple and interval modules") {
    const Quiver a3 = straight_a(3);
    const StringModule s2 = interval_module(1, 2);
    const Representation rep = realize(a3, s2);
    CHECK(rep.dims == std::vector<int>{0, 1, 0});
    for (const auto& m : rep.matrices)
        CHECK((m.empty() || m[0].empty()));

    const Quiver a2 = straight_a(2);
    const Representation p1 = realize(a2, interval_module(0, 2));
    CHECK(p1.dims == std::vector<int>{1, 1});
    CHECK(p1.matrices[0][0][0] == Rat(1));

    CHECK_THROWS(realize(a2, band_module()));
}

TEST_CASE("euler form") {
    const Quiver q = straight_a_tilde(3);
    CHECK(euler_form(q, {1, 1, 2, 2}, {1, 1, 2, 2}) == 1);
    CHECK(euler_form(q, {0, 0, 0, 0}, {1, 2, 3, 4}) == 0);
    const Quiver a2 = straight_a(2);
    CHECK(euler_form(a2, {1, 1}, {1, 1}) == 1);
    CHECK_THROWS(euler_form(a2, {1}, {1, 1}));
}

TEST_CASE("component classification over straight A~_3") {
    const Quiver q = straight_a_tilde(3);
    CHECK(classify_component(q, module_from_ijk(q, 2, 6)) == ComponentClass::Preprojective);
    // (3,4;1) = 34_5
    CHECK(classify_component(q, module_from_winding(q, 3, 4, 1)) ==
          ComponentClass::Preprojective);
    // (4,3;0) = 43_3, the walk alpha_1 alpha_2: arc a(0,3)[0] starts on the
    // inner circle, so the module is preinjective
    CHECK(classify_component(q, module_from_winding(q, 4, 3, 0)) ==
          ComponentClass::Preinjective);
    CHECK(classify_component(q, module_from_winding(q, 4, 3, 1)) ==
          ComponentClass::Preinjective);
    // simples: S_4 = P_4 is preprojective, S_1 = I_1 preinjective, S_2 regular
    CHECK(classify_component(q, module_from_ijk(q, 3, 1)) == ComponentClass::Preprojective);
    CHECK(classify_component(q, module_from_ijk(q, 4, 1)) == ComponentClass::Preinjective);
    CHECK(classify_component(q, module_from_ijk(q, 1, 1)) == ComponentClass::LeftRegular);
    // the string visiting 1,2,3,4 once is the quasi-simple of the rank-one tube
    CHECK(classify_component(q, module_from_ijk(q, 4, 4)) == ComponentClass::RightRegular);
    CHECK(classify_component(q, band_module()) == ComponentClass::Homogeneous);
}

TEST_CASE("notation round trips") {
    const Quiver q = straight_a_tilde(3);
    // 34_5 <-> (3,4;1)
    const StringModule m = module_from_ijk(q, 3, 5);
    const auto w = winding_form(q, m);
    CHECK(w.i == 3);
    CHECK(w.j == 4);
    CHECK(w.l == 1);
    CHECK(module_from_winding(q, w.i, w.j, w.l) == m);
    // 43_3 <-> (4,3;0) and 43_7 <-> (4,3;1)
    const auto w3 = winding_form(q, module_from_ijk(q, 4, 3));
    CHECK(w3.i == 4);
    CHECK(w3.j == 3);
    CHECK(w3.l == 0);
    const auto w7 = winding_form(q, module_from_ijk(q, 4, 7));
    CHECK(w7.i == 4);
    CHECK(w7.j == 3);
    CHECK(w7.l == 1);
    // every short module round-trips through both notations
    for (int i = 1; i <= 4; ++i)
        for (long k = 1; k <= 12; ++k) {
            const StringModule s = module_from_ijk(q, i, k);
            const auto wf = winding_form(q, s);
            CHECK(module_from_winding(q, wf.i, wf.j, wf.l) == s);
            const auto f = ijk_form(q, s);
            CHECK(module_from_ijk(q, f.i, f.k) == s);
        }
}

TEST_CASE("dimension vectors count walk visits") {
    const Quiver q = straight_a_tilde(3);
    for (int i = 1; i <= 4; ++i)
        for (long k = 1; k <= 12; ++k) {
            const StringModule m = module_from_ijk(q, i, k);
            const auto dims = dimension_vector(q, m);
            long total = 0;
            for (int d : dims) total += d;
            CHECK(total == k);
            const Representation rep = realize(q, m);
            CHECK(rep.dims == dims);
        }
}

TEST_CASE("module names") {
    const Quiver q = straight_a_tilde(3);
    CHECK(module_name(q, module_from_ijk(q, 2, 6)) == "24_6");
    CHECK(pretty_name(q, module_from_winding(q, 3, 4, 1)) == "P_1");
    CHECK(pretty_name(q, module_from_ijk(q, 4, 1)) == "I_1");
    CHECK(pretty_name(q, module_from_ijk(q, 2, 1)) == "S_3");
    CHECK(pretty_name(q, module_from_ijk(q, 1, 3)) == "P_2");
    const Quiver a4 = straight_a(4);
    CHECK(module_name(a4, interval_module(0, 2)) == "M_{0,2}");
    CHECK(pretty_name(a4, interval_module(0, 2)) == "I_2");
    CHECK(pretty_name(a4, interval_module(2, 4)) == "P_3");
    CHECK(pretty_name(a4, interval_module(1, 2)) == "S_2");
}
