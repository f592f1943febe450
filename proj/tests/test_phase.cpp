#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "wzw/rational_phase.hpp"

using namespace wzw;

TEST_CASE("phase normalization") {
    CHECK(RationalPhase(5, 4) == RationalPhase(1, 4));
    CHECK(RationalPhase(-1, 4) == RationalPhase(3, 4));
    CHECK(RationalPhase(6, 4) == RationalPhase(1, 2));
    CHECK(RationalPhase(0, 7).den == 1);
    CHECK(RationalPhase(2, -4) == RationalPhase(1, 2));
}

TEST_CASE("phase_combine examples") {
    // full turn
    CHECK(phase_combine({{RationalPhase(1, 3), 1}, {RationalPhase(1, 3), 2}}).is_zero());
    // mod-1 normalization
    CHECK(phase_combine({{RationalPhase(5, 4), 1}}) == RationalPhase(1, 4));
    // t_{Y_j} = j^2 r/(2r+1) at r=2, j=1
    long long r = 2, j = 1;
    CHECK(phase_combine({{RationalPhase(j * j * r, 2 * r + 1), 1}}) == RationalPhase(2, 5));
}

TEST_CASE("phase arithmetic properties") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> num(-40, 40), den(1, 30);
    for (int t = 0; t < 500; ++t) {
        RationalPhase a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a - a).is_zero());
    }
    for (int n = 1; n <= 24; ++n) {
        RationalPhase t(1, n);
        std::vector<std::pair<RationalPhase, long long>> ops(n, {t, 1});
        CHECK(phase_combine(ops).is_zero());
    }
}
