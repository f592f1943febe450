#include <catch2/catch_amalgamated.hpp>

#include "wzw/lie.hpp"
#include "wzw/numeric.hpp"

using namespace wzw;

namespace {

// K from the Cartan matrix: K = m * A^{-1} * diag(d_j) with d_j the half
// root norms; an independent route to the Table-2 closed forms.
std::vector<std::vector<Rat>> killing_from_cartan(const LieData& d) {
    int r = d.r;
    std::vector<Rat> dnorm(r);
    switch (d.spec.family) {
        case Family::A:
            for (int i = 0; i < r; ++i) dnorm[i] = 1;
            break;
        case Family::B:
            for (int i = 0; i < r; ++i) dnorm[i] = (i == r - 1) ? Rat(1, 2) : Rat(1);
            break;
        case Family::C:
            for (int i = 0; i < r; ++i) dnorm[i] = (i == r - 1) ? Rat(1) : Rat(1, 2);
            break;
        case Family::G2:
            dnorm[0] = Rat(1, 3);
            dnorm[1] = 1;
            break;
    }
    // invert A over Q
    std::vector<std::vector<Rat>> M(r, std::vector<Rat>(2 * r, 0));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) M[i][j] = d.cartan[i][j];
        M[i][r + i] = 1;
    }
    for (int c = 0; c < r; ++c) {
        int piv = c;
        while (M[piv][c] == 0) ++piv;
        std::swap(M[piv], M[c]);
        Rat p = M[c][c];
        for (int j = 0; j < 2 * r; ++j) M[c][j] /= p;
        for (int i = 0; i < r; ++i) {
            if (i == c || M[i][c] == 0) continue;
            Rat f = M[i][c];
            for (int j = 0; j < 2 * r; ++j) M[i][j] -= f * M[c][j];
        }
    }
    std::vector<std::vector<Rat>> K(r, std::vector<Rat>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) K[i][j] = Rat(d.m) * dnorm[i] * M[i][r + j];
    return K;
}

}  // namespace

TEST_CASE("alcove examples") {
    CHECK(alcove({Family::A, 1, 2}).size() == 3);
    CHECK(alcove({Family::B, 2, 2}).size() == 6);
    auto g2 = alcove({Family::G2, 2, 4});
    REQUIRE(g2.size() == 9);
    std::vector<Weight> expect{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}, {4, 0}};
    CHECK(g2 == expect);
}

TEST_CASE("alcove size monotone in level") {
    for (Family f : {Family::A, Family::B, Family::C}) {
        for (int r = (f == Family::A ? 1 : 2); r <= 4; ++r) {
            size_t prev = 0;
            for (int k = 1; k <= 5; ++k) {
                size_t s = alcove({f, r, k}).size();
                CHECK(s >= prev);
                prev = s;
            }
        }
    }
}

TEST_CASE("weyl group orders") {
    CHECK(weyl_group({Family::G2, 2, 1}).order() == 12);
    CHECK(weyl_group({Family::A, 2, 1}).order() == 6);
    CHECK(weyl_group({Family::B, 1, 1}).order() == 2);
    CHECK(weyl_group({Family::A, 3, 1}).order() == 24);
    CHECK(weyl_group({Family::B, 3, 1}).order() == 48);
    CHECK(weyl_group({Family::C, 3, 1}).order() == 48);
    CHECK_THROWS_AS(weyl_group({Family::B, 5, 1}, 100), BoundExceeded);
}

TEST_CASE("weyl elements permute the roots") {
    for (AlgebraSpec spec : {AlgebraSpec{Family::A, 3, 1}, AlgebraSpec{Family::B, 3, 1},
                             AlgebraSpec{Family::C, 2, 1}, AlgebraSpec{Family::G2, 2, 1}}) {
        LieData d = lie_data(spec);
        RootSystem rs = root_system(d);
        std::set<std::vector<int>> rootset(rs.labels.begin(), rs.labels.end());
        WeylGroup W = weyl_group(spec);
        for (const auto& w : W.elems)
            for (const auto& root : rs.labels) CHECK(rootset.count(w.apply(root)) == 1);
    }
}

TEST_CASE("root system sizes") {
    CHECK(root_system(lie_data({Family::A, 4, 1})).alpha.size() == 20);
    CHECK(root_system(lie_data({Family::B, 3, 1})).alpha.size() == 18);
    CHECK(root_system(lie_data({Family::C, 3, 1})).alpha.size() == 18);
    CHECK(root_system(lie_data({Family::G2, 2, 1})).alpha.size() == 12);
    CHECK(root_system(lie_data({Family::G2, 2, 1})).positive.size() == 6);
}

TEST_CASE("Killing matrix matches the Cartan-derived form") {
    for (AlgebraSpec spec : {AlgebraSpec{Family::A, 1, 1}, AlgebraSpec{Family::A, 4, 1},
                             AlgebraSpec{Family::B, 2, 1}, AlgebraSpec{Family::B, 5, 1},
                             AlgebraSpec{Family::C, 2, 1}, AlgebraSpec{Family::C, 5, 1},
                             AlgebraSpec{Family::G2, 2, 1}}) {
        LieData d = lie_data(spec);
        auto K = killing_from_cartan(d);
        for (int i = 0; i < d.r; ++i)
            for (int j = 0; j < d.r; ++j) {
                CHECK(Rat(d.KI[i][j], d.L0) == K[i][j]);
                CHECK(d.KI[i][j] == d.KI[j][i]);
            }
    }
}

TEST_CASE("twist denominators per family") {
    CHECK(lie_data({Family::A, 3, 2}).twist_denominator(2) == 2 * (1 + 2 + 3));
    CHECK(lie_data({Family::B, 4, 3}).twist_denominator(3) == 4 * (2 * 4 - 1 + 3));
    CHECK(lie_data({Family::C, 3, 2}).twist_denominator(2) == 4 * (3 + 2 + 1));
    CHECK(lie_data({Family::G2, 2, 4}).twist_denominator(4) == 6 * (4 + 4));
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(AlgebraSpec({Family::G2, 3, 1}).validate(), UsageError);
    CHECK_THROWS_AS(AlgebraSpec({Family::A, 0, 1}).validate(), UsageError);
    CHECK_THROWS_AS(AlgebraSpec({Family::A, 1, 0}).validate(), UsageError);
}
