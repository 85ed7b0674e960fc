#include "doctest.h"

#include "homops/functors.hpp"
#include "homops/oracle.hpp"
#include "test_support.hpp"

using namespace homops;
using test::G;
using test::Zn;

TEST_CASE("element tables enumerate the whole group and close under addition") {
    FgAbGroup g = G(0, {2, 6});
    oracle::ElementTable table(g);
    REQUIRE(table.size() == 12);
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table.size(); ++j) {
            std::size_t s = table.add(i, j);
            CHECK(s < table.size());
            CHECK(table.add(i, j) == table.add(j, i));
        }
    CHECK(table.add(0, 5) == 5);              // zero element is index 0
    CHECK(table.scale(6, 3) == 0);            // 6 kills everything in Z/2 + Z/6
    CHECK_THROWS_AS(oracle::ElementTable(G(1)), ValueError);
    CHECK_THROWS_AS(oracle::ElementTable(G(0, {101, 101}), 100), BoundExceeded);
}

TEST_CASE("hom counting by generator images") {
    CHECK(oracle::hom_count(Zn(4), Zn(6)) == 2);  // images killed by 4 in Z/6: {0, 3}
    CHECK(oracle::hom_count(FgAbGroup{}, G(0, {2, 6})) == 1);
    CHECK(oracle::hom_count(G(0, {2, 2}), Zn(2)) == 4);
    CHECK_THROWS_AS(oracle::hom_count(G(0, {2, 2}), Zn(12), 10), BoundExceeded);
}

TEST_CASE("hom counts are symmetric for finite groups") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        FgAbGroup a = test::random_group(rng, 3, 10, false);
        FgAbGroup b = test::random_group(rng, 3, 10, false);
        CHECK(oracle::hom_count(a, b) == oracle::hom_count(b, a));
    }
}

TEST_CASE("ext via free resolutions") {
    CHECK(oracle::ext(Zn(4), Zn(6)) == Zn(2));  // cokernel of multiplication by 4 on Z/6
    CHECK(oracle::ext(Zn(5), G(1)) == Zn(5));
    CHECK(oracle::ext(FgAbGroup{}, G(2, {4})) == FgAbGroup{});
    CHECK(oracle::ext(Zn(6), G(1, {4})) == G(0, {2, 6}));  // Z/6 + Z/gcd(6,4)
}

TEST_CASE("tensor via presentations") {
    CHECK(oracle::tensor(Zn(4), Zn(6)) == Zn(2));   // <x | 4x, 6x>
    CHECK(oracle::tensor(Zn(3), Zn(5)).is_trivial());
    CHECK(oracle::tensor(G(0, {2, 2}), Zn(2)) == G(0, {2, 2}));
    CHECK_THROWS_AS(oracle::tensor(G(0, {2, 2, 2}), G(0, {2, 2, 2}), 5), BoundExceeded);
}

TEST_CASE("tor via the tensor of resolutions") {
    CHECK(oracle::tor(Zn(4), Zn(6)) == Zn(2));
    CHECK(oracle::tor(Zn(9), Zn(3)) == Zn(3));
    CHECK(oracle::tor(Zn(3), Zn(5)).is_trivial());
    CHECK(oracle::tor(G(0, {2, 4}), G(0, {8})) == G(0, {2, 4}));
}

TEST_CASE("oracle and closed forms agree on a quick family") {
    // the exhaustive sweep runs in the acceptance suite; keep a fast slice here
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        FgAbGroup a = test::random_group(rng, 2, 9, false);
        FgAbGroup b = test::random_group(rng, 2, 9, false);
        CHECK(oracle::tensor(a, b) == functors::tensor(a, b));
        CHECK(oracle::tor(a, b) == functors::tor(a, b));
        CHECK(oracle::ext(a, b) == functors::ext(a, b));
        CHECK(oracle::hom_count(a, b) == functors::hom(a, b).order().value);
    }
}
