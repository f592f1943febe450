#include <catch2/catch_amalgamated.hpp>

#include "wzw/fusion.hpp"

using namespace wzw;

namespace {

// su(2) level-k oracle: N_{ab}^c = 1 iff the classical and affine truncation
// conditions hold (exact closed form).
int su2_fusion(int k, int a, int b, int c) {
    if ((a + b + c) % 2) return 0;
    if (c < std::abs(a - b)) return 0;
    if (c > std::min(a + b, 2 * k - a - b)) return 0;
    return 1;
}

}  // namespace

TEST_CASE("unit fusion") {
    for (AlgebraSpec spec : {AlgebraSpec{Family::A, 2, 2}, AlgebraSpec{Family::B, 2, 2},
                             AlgebraSpec{Family::C, 3, 2}, AlgebraSpec{Family::G2, 2, 3}}) {
        auto basis = alcove(spec);
        Weight zero(spec.rank, 0);
        for (const auto& w : basis) {
            auto p = fuse(spec, zero, w);
            REQUIRE(p.size() == 1);
            CHECK(p[0] == std::make_pair(w, 1));
        }
    }
}

TEST_CASE("su2 rings against the closed-form oracle") {
    for (int k = 1; k <= 6; ++k) {
        FusionRing ring = build_ring({Family::A, 1, k});
        REQUIRE(ring.n == k + 1);
        for (int a = 0; a <= k; ++a)
            for (int b = 0; b <= k; ++b)
                for (int c = 0; c <= k; ++c)
                    CHECK(ring.N(ring.index_of({a}), ring.index_of({b}), ring.index_of({c})) ==
                          su2_fusion(k, a, b, c));
    }
}

TEST_CASE("paper fusion examples") {
    // Y1 (x) Y1 = 1 + Z + Y2 in C(so5, 2): weights L1 (x) L1 = 0 + 2L1 + 2L2
    {
        AlgebraSpec spec{Family::B, 2, 2};
        auto p = fuse(spec, {1, 0}, {1, 0});
        std::vector<std::pair<Weight, int>> expect{{{0, 0}, 1}, {{0, 2}, 1}, {{2, 0}, 1}};
        CHECK(p == expect);
    }
    // Lambda_1 (x) k Lambda_r = Lambda_{r-1} + (k-1) Lambda_r in sp(2r)
    for (int r = 2; r <= 4; ++r)
        for (int k = 1; k <= 3; ++k) {
            AlgebraSpec spec{Family::C, r, k};
            Weight l1(r, 0), kr(r, 0), expect(r, 0);
            l1[0] = 1;
            kr[r - 1] = k;
            expect[r - 2] = 1;
            expect[r - 1] = k - 1;
            auto p = fuse(spec, l1, kr);
            REQUIRE(p.size() == 1);
            CHECK(p[0] == std::make_pair(expect, 1));
        }
    // k Lambda_1 (x) Lambda_r = (k-1) Lambda_1 + Lambda_r in so(2r+1), k >= 3
    for (int r = 2; r <= 4; ++r)
        for (int k = 3; k <= 5; ++k) {
            AlgebraSpec spec{Family::B, r, k};
            Weight kl1(r, 0), lr(r, 0), expect(r, 0);
            kl1[0] = k;
            lr[r - 1] = 1;
            expect[0] = k - 1;
            expect[r - 1] = 1;
            auto p = fuse(spec, kl1, lr);
            REQUIRE(p.size() == 1);
            CHECK(p[0] == std::make_pair(expect, 1));
        }
}

TEST_CASE("A1 level 2 ring") {
    FusionRing ring = build_ring({Family::A, 1, 2});
    REQUIRE(ring.n == 3);
    int l1 = ring.index_of({1});
    CHECK(ring.N(l1, l1, ring.index_of({0})) == 1);
    CHECK(ring.N(l1, l1, ring.index_of({2})) == 1);
    CHECK(ring.N(l1, l1, l1) == 0);
}

TEST_CASE("G2 level 1 Fibonacci ring") {
    FusionRing ring = build_ring({Family::G2, 2, 1});
    REQUIRE(ring.n == 2);
    int tau = ring.index_of({1, 0});
    CHECK(ring.N(tau, tau, ring.unit) == 1);
    CHECK(ring.N(tau, tau, tau) == 1);
}

TEST_CASE("ring invariants across a small grid") {
    std::vector<AlgebraSpec> grid;
    for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= 3; ++k) grid.push_back({Family::A, r, k});
    for (int r = 2; r <= 3; ++r)
        for (int k = 1; k <= 3; ++k) {
            grid.push_back({Family::B, r, k});
            grid.push_back({Family::C, r, k});
        }
    for (int k = 1; k <= 5; ++k) grid.push_back({Family::G2, 2, k});
    for (const auto& spec : grid) {
        // build_ring itself verifies unit, duality, Frobenius, associativity
        FusionRing ring = build_ring(spec);
        CHECK(ring.n >= 1);
        for (int a = 0; a < ring.n; ++a)
            for (int b = 0; b < ring.n; ++b)
                for (auto [c, m] : ring.channels(a, b)) CHECK(ring.N(b, a, c) == m);
    }
}

TEST_CASE("invertibles") {
    for (int r = 1; r <= 4; ++r)
        for (int k = 1; k <= 3; ++k) {
            FusionRing ring = build_ring({Family::A, r, k});
            auto inv = invertibles(ring);
            CHECK(inv.size() == static_cast<size_t>(r + 1));  // {0} u {k Lambda_i}
            for (int i = 1; i <= r; ++i) {
                Weight w(r, 0);
                w[i - 1] = k;
                CHECK(std::find(inv.begin(), inv.end(), ring.index_of(w)) != inv.end());
            }
        }
    {
        FusionRing ring = build_ring({Family::B, 3, 2});
        auto inv = invertibles(ring);
        REQUIRE(inv.size() == 2);  // 1 and Z
        Weight z(3, 0);
        z[0] = 2;
        CHECK(inv[0] == ring.unit);
        CHECK(inv[1] == ring.index_of(z));
    }
    for (int k = 1; k <= 4; ++k) {
        FusionRing ring = build_ring({Family::G2, 2, k});
        auto inv = invertibles(ring);
        REQUIRE(inv.size() == 1);
        CHECK(inv[0] == ring.unit);
    }
}

TEST_CASE("grading groups") {
    for (int r = 1; r <= 3; ++r)
        for (int k = 1; k <= 3; ++k) {
            Grading g = grading_group(build_ring({Family::A, r, k}));
            CHECK(g.group.n == r + 1);
            auto inv = abelian_invariants(g.group);
            REQUIRE(inv.factors.size() == 1u);
            CHECK(inv.factors[0] == r + 1);  // Z_{r+1}
        }
    for (int r = 2; r <= 3; ++r)
        for (int k = 1; k <= 3; ++k) {
            Grading g = grading_group(build_ring({Family::B, r, k}));
            CHECK(g.group.n == 2);  // Z_2
        }
    for (int k = 1; k <= 4; ++k) {
        Grading g = grading_group(build_ring({Family::G2, 2, k}));
        CHECK(g.group.n == 1);
    }
}

TEST_CASE("generator recursion agrees with all-pairs Kac-Walton") {
    std::vector<AlgebraSpec> grid{{Family::A, 2, 4}, {Family::A, 3, 3}, {Family::B, 2, 3},
                                  {Family::B, 3, 2}, {Family::C, 2, 3}, {Family::C, 3, 3},
                                  {Family::G2, 2, 4}, {Family::G2, 2, 5}};
    for (const auto& spec : grid) {
        BuildOptions direct;
        direct.direct = true;
        FusionRing a = build_ring(spec, direct);
        FusionRing b = build_ring(spec);
        REQUIRE(a.n == b.n);
        CHECK(a.prod == b.prod);
    }
}

TEST_CASE("alcove bound errors") {
    BuildOptions opt;
    opt.alcove_bound = 5;
    CHECK_THROWS_AS(build_ring({Family::A, 3, 3}, opt), BoundExceeded);
    CHECK_THROWS_AS(build_ring({Family::B, 1, 2}), UsageError);
}
