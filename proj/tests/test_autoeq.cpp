#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "wzw/autoeq.hpp"
#include "wzw/group_structure.hpp"
#include "wzw/modular.hpp"

using namespace wzw;

TEST_CASE("FusEq orders, spot examples") {
    CHECK(enumerate_fusion_autos(build_ring({Family::A, 1, 2})).order() == 1);
    CHECK(enumerate_fusion_autos(build_ring({Family::G2, 2, 3})).order() == 3);
    CHECK(enumerate_fusion_autos(build_ring({Family::B, 4, 2})).order() == 6);
    CHECK(enumerate_fusion_autos(build_ring({Family::A, 2, 3})).order() == 6);
}

TEST_CASE("FusEq orders match the closed forms on a small grid") {
    std::vector<AlgebraSpec> grid;
    for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= 4; ++k) grid.push_back({Family::A, r, k});
    for (int r = 2; r <= 4; ++r)
        for (int k = 1; k <= 3; ++k) {
            grid.push_back({Family::B, r, k});
            grid.push_back({Family::C, r, k});
        }
    for (int k = 1; k <= 5; ++k) grid.push_back({Family::G2, 2, k});
    for (const auto& spec : grid) {
        FusionRing ring = build_ring(spec);
        PermGroup g = enumerate_fusion_autos(ring);
        INFO(spec.str());
        CHECK(static_cast<long long>(g.order()) == fuseq_closed_form(spec));
    }
}

TEST_CASE("enumerated automorphisms satisfy all invariants") {
    for (AlgebraSpec spec : {AlgebraSpec{Family::B, 3, 2}, AlgebraSpec{Family::A, 3, 2},
                             AlgebraSpec{Family::G2, 2, 3}, AlgebraSpec{Family::C, 2, 2}}) {
        FusionRing ring = build_ring(spec);
        PermGroup g = enumerate_fusion_autos(ring);
        auto dims = qdim_table(spec, ring.basis);
        for (const auto& p : g.elems) {
            CHECK(is_ring_automorphism(ring, p));
            for (int i = 0; i < ring.n; ++i) CHECK(std::abs(dims[p[i]] - dims[i]) < 1e-9);
        }
    }
}

TEST_CASE("twist preserving subgroups") {
    {
        FusionRing ring = build_ring({Family::B, 7, 2});
        PermGroup g = enumerate_fusion_autos(ring);
        CHECK(g.order() == 8);  // 2 * |Z_15^x / (+-)|
        PermGroup braided = twist_preserving_subgroup(g, twist_table(ring));
        CHECK(braided.order() == 2);  // {n : n^2 = 1 mod 15}/(+-) = {1, 4}
    }
    {
        FusionRing ring = build_ring({Family::B, 4, 2});
        PermGroup g = enumerate_fusion_autos(ring);
        PermGroup braided = twist_preserving_subgroup(g, twist_table(ring));
        CHECK(braided.order() == 1);
    }
    {
        // identity group stays the identity group
        FusionRing ring = build_ring({Family::A, 1, 2});
        PermGroup g = enumerate_fusion_autos(ring);
        REQUIRE(g.order() == 1);
        CHECK(twist_preserving_subgroup(g, twist_table(ring)).order() == 1);
    }
}

TEST_CASE("abelian invariants") {
    // Klein four group
    FiniteGroup v4;
    v4.n = 4;
    v4.id = 0;
    v4.table = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    auto inv = abelian_invariants(v4);
    CHECK(inv.factors == std::vector<long long>{2, 2});

    // G(9,3) is cyclic of order 9
    auto g93 = gnd_subgroup(9, 3);
    auto inv93 = abelian_invariants(g93.group);
    CHECK(inv93.factors == std::vector<long long>{9});

    // S3 as permutation group: nonabelian, center 1
    PermGroup s3 = perm_closure(3, {{1, 0, 2}, {0, 2, 1}});
    auto inv_s3 = abelian_invariants(s3.cayley());
    CHECK_FALSE(inv_s3.abelian);
    CHECK(inv_s3.order == 6);
    CHECK(inv_s3.center == 1);
}

TEST_CASE("perm group utilities") {
    PermGroup z2 = perm_closure(4, {{1, 0, 3, 2}});
    CHECK(z2.order() == 2);
    CHECK(cycle_notation(z2.elems[1], {"a", "b", "c", "d"}) == "(a b)(c d)");
    CHECK(cycle_notation(z2.elems[0], {"a", "b", "c", "d"}) == "()");
}
