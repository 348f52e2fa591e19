#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "sts/combinatorics.hpp"
#include "sts/constructions.hpp"

using namespace sts;

TEST_SUITE("constructions") {

TEST_CASE("pg sizes and the xor block law") {
    const auto fano = pg(2);
    CHECK(fano.order() == 7);
    CHECK(fano.block_count() == 7);
    const auto p3 = pg(3);
    CHECK(p3.order() == 15);
    CHECK(p3.block_count() == 35);
    for (const auto& s : {fano, p3})
        for (const Triple& t : s.blocks())
            CHECK(((t.p[0] + 1) ^ (t.p[1] + 1) ^ (t.p[2] + 1)) == 0);
    CHECK_THROWS_WITH_AS(pg(1), doctest::Contains("KTooSmall"), Error);
}

TEST_CASE("pg(2) is the unique order-7 system") {
    CHECK(are_isomorphic(pg(2), sts::testing::cyclic_sts7()).has_value());
}

TEST_CASE("ag_power sizes and product equivalence") {
    const auto a1 = ag_power(1);
    CHECK(a1.order() == 3);
    CHECK(a1.block_count() == 1);
    const auto a2 = ag_power(2);
    CHECK(a2.order() == 9);
    CHECK(a2.block_count() == 12);
    CHECK(a2.same_blocks(direct_product(a1, a1)));
    CHECK(ag_power(3).same_blocks(direct_product(direct_product(a1, a1), a1)));
    CHECK_THROWS_WITH_AS(ag_power(0), doctest::Contains("MTooSmall"), Error);
}

TEST_CASE("direct products validate and multiply orders") {
    const auto s3 = ag_power(1);
    const auto s7 = sts::testing::cyclic_sts7();
    const auto p9 = direct_product(s3, s3);
    CHECK(p9.order() == 9);
    const auto p21 = direct_product(s3, s7);
    CHECK(p21.order() == 21);
    CHECK(p21.block_count() == 70);
    // The point convention (a,x) -> a*order(t)+x.
    CHECK(p21.star(0 * 7 + 0, 0 * 7 + 1) == 0 * 7 + 3);   // same left coordinate
    CHECK(p21.star(0 * 7 + 2, 1 * 7 + 2) == 2 * 7 + 2);   // same right coordinate
}

TEST_CASE("netto at q = 13") {
    const Field f13 = Field::prime(13);
    const auto s = netto(f13, {1, 2});
    CHECK(s.order() == 13);
    CHECK(s.block_count() == 26);
    CHECK_THROWS_WITH_AS(netto(f13, {1, 4}), doctest::Contains("CosetCollision"), Error);
    CHECK_THROWS_WITH_AS(netto(f13, {0, 1}), doctest::Contains("ZeroInC"), Error);
    CHECK_THROWS_WITH_AS(netto(f13, {1}), doctest::Contains("WrongCSize"), Error);
    CHECK_THROWS_WITH_AS(netto(Field::prime(11), {1}), doctest::Contains("BadOrderModSix"),
                         Error);
}

TEST_CASE("netto at q = 7 gives the projective plane") {
    const auto s = netto(Field::prime(7), {1});
    CHECK(s.order() == 7);
    CHECK(are_isomorphic(s, pg(2)).has_value());
}

TEST_CASE("netto block count is t*q") {
    for (Field::Elem q : {13, 19, 25}) {
        const Field f = Field::of_order(q);
        const auto spec = choose_enough_c(f);
        const auto s = netto(spec);
        CHECK(s.block_count() == spec.t * q);
        CHECK(s.block_count() == third_binom2(q));
    }
}

TEST_CASE("choose_enough_c reproduces the hand-executed runs") {
    const auto s13 = choose_enough_c(Field::prime(13));
    CHECK(s13.x == 2);
    CHECK(s13.t == 2);
    CHECK(s13.c == std::vector<Field::Elem>{1, 2});

    const auto s19 = choose_enough_c(Field::prime(19));
    CHECK(s19.x == 2);
    CHECK(s19.t == 3);
    CHECK(s19.c == std::vector<Field::Elem>{1, 2, 10});  // 10 = 2^17 mod 19

    CHECK_THROWS_WITH_AS(choose_enough_c(Field::prime(7)), doctest::Contains("SDivisibleByT"),
                         Error);
    CHECK_THROWS_WITH_AS(choose_enough_c(Field::prime(17)), doctest::Contains("BadOrderModSix"),
                         Error);
}

TEST_CASE("chosen multiplier sets satisfy transversality and doubling closure") {
    for (Field::Elem q : {13, 19, 31, 37, 25, 121}) {
        CAPTURE(q);
        const Field f = Field::of_order(q);
        const NettoSpec spec = choose_enough_c(f);
        CHECK(static_cast<std::int64_t>(spec.c.size()) == spec.t);
        CHECK(f.pow(spec.y, 3) == 1);
        CHECK(spec.y != 1);

        for (std::size_t i = 0; i < spec.exponents.size(); ++i)
            for (std::size_t j = i + 1; j < spec.exponents.size(); ++j)
                CHECK((spec.exponents[i] - spec.exponents[j]) % spec.t != 0);

        const Field::Elem half = f.inv(2);
        for (Field::Elem c : spec.c) {
            const bool doubled = std::binary_search(spec.c.begin(), spec.c.end(), f.mul(c, 2));
            const bool halved =
                std::binary_search(spec.c.begin(), spec.c.end(), f.mul(c, half));
            CHECK((doubled || halved));
        }
    }
}

TEST_CASE("bose handles the 3 mod 6 orders") {
    const auto s9 = bose(9);
    CHECK(s9.order() == 9);
    const auto s15 = bose(15);
    CHECK(s15.order() == 15);
    CHECK(s15.block_count() == 35);
    CHECK(bose(21).order() == 21);
    CHECK_THROWS_WITH_AS(bose(13), doctest::Contains("BadOrderModSix"), Error);
}

}  // TEST_SUITE
