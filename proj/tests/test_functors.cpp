#include "doctest.h"

#include "homops/functors.hpp"
#include "homops/oracle.hpp"
#include "test_support.hpp"

using namespace homops;
using test::G;
using test::Zn;

TEST_CASE("tensor closed form") {
    CHECK(functors::tensor(Zn(4), Zn(6)) == Zn(2));
    CHECK(functors::tensor(G(1), G(1, {5})) == G(1, {5}));
    CHECK(functors::tensor(G(1, {2}), Zn(4)) == G(0, {2, 4}));
}

TEST_CASE("tor closed form") {
    CHECK(functors::tor(Zn(9), Zn(3)) == Zn(3));
    CHECK(functors::tor(G(3), Zn(8)) == FgAbGroup{});
    CHECK(functors::tor(G(0, {4, 3}), Zn(6)) == Zn(6));
}

TEST_CASE("hom closed form") {
    CHECK(functors::hom(Zn(4), Zn(6)) == Zn(2));
    CHECK(oracle::hom_count(Zn(4), Zn(6)) == 2);  // of the 6 candidate images, 2 are killed by 4
    FgAbGroup g = G(1, {3, 6});
    CHECK(functors::hom(G(1), g) == g);
    CHECK(functors::hom(Zn(7), G(1)) == FgAbGroup{});
}

TEST_CASE("ext closed form") {
    for (long long k : {2, 5, 12}) CHECK(functors::ext(Zn(k), G(1)) == Zn(k));
    CHECK(functors::ext(G(5), G(2, {4, 8})) == FgAbGroup{});
    CHECK(functors::ext(Zn(4), Zn(6)) == Zn(2));
    CHECK(oracle::ext(Zn(4), Zn(6)) == Zn(2));  // resolution route
}

TEST_CASE("tensor and tor are symmetric") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 80; ++trial) {
        FgAbGroup a = test::random_group(rng, 4, 12);
        FgAbGroup b = test::random_group(rng, 4, 12);
        CHECK(functors::tensor(a, b) == functors::tensor(b, a));
        CHECK(functors::tor(a, b) == functors::tor(b, a));
    }
}

TEST_CASE("all four functors have the same order on finite pairs") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        FgAbGroup a = test::random_group(rng, 3, 12, false);
        FgAbGroup b = test::random_group(rng, 3, 12, false);
        Int expected = 1;
        for (const Int& d : a.invariant_factors())
            for (const Int& e : b.invariant_factors())
                expected *= boost::multiprecision::gcd(d, e);
        CHECK(functors::hom(a, b).order().value == expected);
        CHECK(functors::ext(a, b).order().value == expected);
        CHECK(functors::tensor(a, b).order().value == expected);
        CHECK(functors::tor(a, b).order().value == expected);
        CHECK(oracle::hom_count(a, b) == expected);
    }
}

TEST_CASE("bilinearity over direct sums") {
    std::mt19937_64 rng(37);
    using Fn = FgAbGroup (*)(const FgAbGroup&, const FgAbGroup&);
    for (Fn f : {static_cast<Fn>(functors::tensor), static_cast<Fn>(functors::tor),
                 static_cast<Fn>(functors::hom), static_cast<Fn>(functors::ext)}) {
        for (int trial = 0; trial < 25; ++trial) {
            FgAbGroup g = test::random_group(rng), g2 = test::random_group(rng),
                      h = test::random_group(rng);
            CHECK(f(direct_sum(g, g2), h) == direct_sum(f(g, h), f(g2, h)));
        }
    }
}

TEST_CASE("tor vanishes on free groups") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        FgAbGroup g = test::random_group(rng);
        CHECK(functors::tor(G(1 + rng() % 3), g).is_trivial());
        CHECK(functors::tor(g, FgAbGroup{}).is_trivial());
        if (g.is_free()) CHECK(functors::tor(g, test::random_group(rng)).is_trivial());
    }
}
