#include "doctest.h"

#include <sstream>

#include "homops/functors.hpp"
#include "homops/opsclassify.hpp"
#include "test_support.hpp"

using namespace homops;
using ops::OperationType;
using test::G;
using test::Zn;

namespace {

OperationType type(const FgAbGroup& g1, const FgAbGroup& g2, const FgAbGroup& g3, int q1, int q2,
                   int q3) {
    return OperationType(g1, g2, g3, q1, q2, q3);
}

}  // namespace

TEST_CASE("basic range verdicts") {
    CHECK(ops::basic_range_check(type(Zn(3), Zn(3), Zn(3), 4, 4, 7)).verdict ==
          ops::RangeVerdict::Yes);
    CHECK(ops::basic_range_check(type(G(1), G(1), G(1), 4, 4, 9)).verdict ==
          ops::RangeVerdict::YesByFreeRelaxation);
    CHECK(ops::basic_range_check(type(Zn(2), Zn(2), Zn(2), 3, 3, 9)).verdict ==
          ops::RangeVerdict::No);
    CHECK(ops::basic_range_check(type(Zn(2), Zn(2), Zn(2), 2, 4, 3)).degree_floor_ok == false);
    CHECK_THROWS_AS(type(Zn(2), Zn(2), Zn(2), 1, 4, 3), DegreeTooSmall);
}

TEST_CASE("range verdicts are monotone in q3") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 40; ++trial) {
        int q1 = static_cast<int>(test::rnd(rng, 2, 8));
        int q2 = static_cast<int>(test::rnd(rng, 2, 8));
        FgAbGroup g3 = test::random_group(rng);
        int bound = q1 + q2 + std::min(q1, q2) - 3;
        for (int q3 = 2; q3 < bound + 2; ++q3) {
            auto verdict = ops::basic_range_check(type(Zn(2), Zn(2), g3, q1, q2, q3)).verdict;
            if (q3 < bound) CHECK(verdict == ops::RangeVerdict::Yes);
            if (verdict == ops::RangeVerdict::Yes)
                for (int lower = 2; lower < q3; ++lower)
                    CHECK(ops::basic_range_check(type(Zn(2), Zn(2), g3, q1, q2, lower)).verdict ==
                          ops::RangeVerdict::Yes);
        }
    }
}

TEST_CASE("triviality bound") {
    CHECK(ops::triviality_check(type(Zn(2), Zn(2), Zn(2), 4, 4, 5)));
    CHECK_FALSE(ops::triviality_check(type(Zn(2), Zn(2), Zn(2), 4, 4, 6)));
    CHECK(ops::triviality_check(type(Zn(2), Zn(2), Zn(2), 3, 3, 3)));
}

TEST_CASE("the group of basic operations") {
    Maybe<moore::UctSequence> bo = ops::bo_group(type(Zn(3), Zn(3), Zn(3), 4, 4, 7));
    REQUIRE(bo.known());
    CHECK(bo.value().ext_term == Zn(3));
    CHECK(bo.value().hom_term == Zn(3));
    CHECK(bo.value().middle_cardinality == Order::of(9));

    for (long long k : {2, 5, 9}) {
        for (int q1 : {3, 5})
            for (int q2 : {4, 6}) {
                Maybe<moore::UctSequence> ext_type =
                    ops::bo_group(type(G(1), G(1), Zn(k), q1, q2, q1 + q2 - 2));
                REQUIRE(ext_type.known());
                CHECK(ext_type.value().middle_cardinality == Order::of(k));
            }
    }

    Maybe<moore::UctSequence> coprime = ops::bo_group(type(Zn(5), Zn(7), G(1), 4, 4, 7));
    REQUIRE(coprime.known());
    CHECK(coprime.value().middle_cardinality == Order::of(1));

    CHECK_THROWS_AS(ops::bo_group(type(Zn(2), Zn(2), Zn(2), 2, 4, 4)), DegreeTooSmall);
    CHECK_THROWS_AS(ops::bo_group(type(Zn(2), Zn(2), Zn(2), 3, 3, 9)), ValueError);
    CHECK_THROWS_AS(ops::bo_group(type(Zn(2), Zn(2), Zn(2), 4, 4, 5)), Unsupported2Torsion);
}

TEST_CASE("special operation shapes") {
    CHECK(ops::special_kind(type(Zn(6), Zn(4), Zn(2), 5, 5, 9)) ==
          ops::SpecialKind::WhiteheadCandidate);
    CHECK(ops::special_kind(type(Zn(6), Zn(4), Zn(2), 5, 5, 10)) ==
          ops::SpecialKind::TorsionCandidate);
    CHECK(ops::special_kind(type(G(1), G(1), G(1), 3, 3, 5)) ==
          ops::SpecialKind::WhiteheadCandidate);
    CHECK(ops::special_kind(type(Zn(6), Zn(4), Zn(3), 5, 5, 9)) == ops::SpecialKind::None);
    CHECK(ops::special_kind(type(Zn(6), Zn(4), Zn(2), 5, 5, 8)) == ops::SpecialKind::None);
    // degree floors: Whitehead needs q >= 3, Torsion needs q >= 4
    CHECK(ops::special_kind(type(Zn(2), Zn(2), Zn(2), 2, 3, 4)) == ops::SpecialKind::None);
    CHECK(ops::special_kind(type(Zn(2), Zn(2), Zn(2), 3, 3, 6)) == ops::SpecialKind::None);
}

TEST_CASE("counting special operations") {
    Maybe<Int> named = ops::count_special_ops(type(Zn(3), Zn(3), Zn(3), 4, 4, 7));
    REQUIRE(named.known());
    CHECK(named.value() == 3);

    for (int q1 : {3, 4, 6})
        for (int q2 : {3, 5}) {
            Maybe<Int> classical =
                ops::count_special_ops(type(G(1), G(1), G(1), q1, q2, q1 + q2 - 1));
            REQUIRE(classical.known());
            CHECK(classical.value() == 1);
        }

    // Torsion counts need the second stem
    Maybe<Int> torsion = ops::count_special_ops(type(Zn(9), Zn(3), Zn(3), 5, 5, 10));
    CHECK_FALSE(torsion.known());
    CHECK(torsion.reason().find("stem 2") != std::string::npos);

    // with a user-extended table the same count becomes available
    std::istringstream in("class=odd, stem=2, value=0, provenance=second stem vanishes for odd "
                          "prime power orders\n");
    moore::StemTable extended = moore::StemTable::builtin().merged_with(moore::StemTable::parse(in));
    Maybe<Int> with_table = ops::count_special_ops(type(Zn(9), Zn(3), Zn(3), 5, 5, 10), extended);
    REQUIRE(with_table.known());
    CHECK(with_table.value() == 1);

    // nonexistent Torsion products report the failed criterion
    Maybe<Int> missing = ops::count_special_ops(type(Zn(2), Zn(2), Zn(2), 4, 4, 8));
    CHECK_FALSE(missing.known());
    CHECK(missing.reason().find("exists") != std::string::npos);

    CHECK_THROWS_AS(ops::count_special_ops(type(Zn(3), Zn(3), Zn(3), 4, 4, 6)), ValueError);
}

TEST_CASE("whitehead counts agree with the direct formula") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 50; ++trial) {
        FgAbGroup g1 = test::random_group(rng, 2, 9);
        FgAbGroup g2 = test::random_group(rng, 2, 9);
        if (g1.has_2_torsion() && g2.has_2_torsion()) continue;
        int q1 = static_cast<int>(test::rnd(rng, 3, 5));
        int q2 = static_cast<int>(test::rnd(rng, 3, 5));
        FgAbGroup g3 = functors::tensor(g1, g2);
        Maybe<Int> pipeline = ops::count_special_ops(type(g1, g2, g3, q1, q2, q1 + q2 - 1));
        std::vector<Int> twos(g3.free_rank(), Int(2));
        for (const auto& [p, e] : g3.primary_factors())
            if (p == 2) twos.emplace_back(2);
        Int direct = functors::ext(g3, direct_sum(FgAbGroup::from_orders(0, twos),
                                                  functors::tor(g1, g2)))
                         .order()
                         .value;
        REQUIRE(pipeline.known());
        CHECK(pipeline.value() == direct);
        if (g3.is_free()) CHECK(pipeline.value() == 1);
    }
}

TEST_CASE("torsion existence criterion") {
    CHECK(ops::torsion_exists(9, 3, 5, 5));
    CHECK(ops::torsion_exists(4, 6, 4, 4));
    CHECK_FALSE(ops::torsion_exists(2, 2, 4, 4));
    CHECK_FALSE(ops::torsion_exists(2, 6, 4, 4));
    CHECK(ops::torsion_exists(3, 5, 4, 4));  // odd gcd 1
    CHECK_THROWS_AS(ops::torsion_exists(4, 6, 3, 4), DegreeTooSmall);
    CHECK_THROWS_AS(ops::torsion_exists(1, 6, 4, 4), ValueError);
}

TEST_CASE("ext operation enumeration") {
    auto three = ops::ext_ops_enumerate(3, 4, 5);
    REQUIRE(three.size() == 3);
    for (long long i = 0; i < 3; ++i) {
        CHECK(three[static_cast<std::size_t>(i)].index == i);
        CHECK(three[static_cast<std::size_t>(i)].is_zero == (i == 0));
        CHECK(three[static_cast<std::size_t>(i)].q3 == 7);
        CHECK(three[static_cast<std::size_t>(i)].g3 == Zn(3));
    }
    auto two = ops::ext_ops_enumerate(2, 3, 3);
    REQUIRE(two.size() == 2);
    CHECK(two[1].q3 == 4);  // type {Z, Z, Z/2; 3, 3, 4}
    CHECK_FALSE(ops::triviality_check(type(G(1), G(1), Zn(2), 3, 3, 4)));
    CHECK_THROWS_AS(ops::ext_ops_enumerate(1, 3, 3), ValueError);
    CHECK_THROWS_AS(ops::ext_ops_enumerate(4, 2, 3), DegreeTooSmall);
}

TEST_CASE("commutativity signs") {
    ops::CommutativitySign w34 = ops::commutativity_sign(ops::ProductKind::Whitehead, 3, 4);
    CHECK(w34.exponent == 12);
    CHECK(w34.sign == 1);
    ops::CommutativitySign t44 = ops::commutativity_sign(ops::ProductKind::Torsion, 4, 4);
    CHECK(t44.exponent == 17);
    CHECK(t44.sign == -1);
    ops::CommutativitySign w33 = ops::commutativity_sign(ops::ProductKind::Whitehead, 3, 3);
    CHECK(w33.exponent == 9);
    CHECK(w33.sign == -1);
}

TEST_CASE("degree shift between Moore and co-Moore indexing") {
    CHECK(ops::neisendorfer_shift(7, ops::ShiftDirection::ToCoMoore) == 8);
    for (int n = 2; n < 10; ++n)
        CHECK(ops::neisendorfer_shift(ops::neisendorfer_shift(n, ops::ShiftDirection::ToCoMoore),
                                      ops::ShiftDirection::ToMoore) == n);
    CHECK_THROWS_AS(ops::neisendorfer_shift(2, ops::ShiftDirection::ToMoore), DegreeTooSmall);
    CHECK_THROWS_AS(ops::neisendorfer_shift(1, ops::ShiftDirection::ToCoMoore), DegreeTooSmall);
    // a Moore-indexed product triple maps to the co-Moore triple degree by degree
    int q1 = 5, q2 = 6;
    int shifted[3] = {ops::neisendorfer_shift(q1, ops::ShiftDirection::ToCoMoore),
                      ops::neisendorfer_shift(q2, ops::ShiftDirection::ToCoMoore),
                      ops::neisendorfer_shift(q1 + q2, ops::ShiftDirection::ToCoMoore)};
    CHECK(shifted[0] == q1 + 1);
    CHECK(shifted[1] == q2 + 1);
    CHECK(shifted[2] == q1 + q2 + 1);
}

TEST_CASE("classification reports") {
    ops::ClassificationReport rep = ops::classify(type(Zn(3), Zn(3), Zn(3), 4, 4, 7));
    CHECK(rep.in_basic_range == ops::RangeVerdict::Yes);
    CHECK(rep.bi_additive_forced);
    CHECK_FALSE(rep.trivially_zero);
    CHECK(rep.special == ops::SpecialKind::WhiteheadCandidate);
    REQUIRE(rep.bo.known());
    CHECK(rep.bo.value().middle_cardinality == Order::of(9));
    REQUIRE(rep.special_count.known());
    CHECK(rep.special_count.value() == 3);
    REQUIRE(rep.sign.has_value());
    CHECK(rep.sign->sign == 1);  // 4*4 = 16 even

    ops::ClassificationReport torsion = ops::classify(type(Zn(6), Zn(4), Zn(2), 5, 5, 10));
    CHECK(torsion.special == ops::SpecialKind::TorsionCandidate);
    REQUIRE(torsion.torsion_existence.has_value());
    CHECK(*torsion.torsion_existence);  // 4 divides 4, both even
    CHECK_FALSE(torsion.special_count.known());  // both 2-torsion: smash refuses

    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        auto t = type(test::random_group(rng), test::random_group(rng), test::random_group(rng),
                      static_cast<int>(test::rnd(rng, 2, 7)),
                      static_cast<int>(test::rnd(rng, 2, 7)),
                      static_cast<int>(test::rnd(rng, 2, 12)));
        ops::ClassificationReport r = ops::classify(t);
        if (r.trivially_zero) CHECK(t.q3 <= t.q1 + t.q2 - 3);
        if (r.bi_additive_forced) CHECK(r.in_basic_range == ops::RangeVerdict::Yes);
    }
}
