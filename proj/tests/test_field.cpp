#include <doctest.h>

#include "sts/field.hpp"

using namespace sts;

namespace {

// Exhaustive field-axiom check, practical for q <= ~30.
void check_axioms(const Field& f) {
    const Field::Elem q = f.size();
    for (Field::Elem a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        for (Field::Elem b = 0; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (Field::Elem c = 0; c < q; ++c) {
                REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("prime field arithmetic") {
    const Field f7 = Field::prime(7);
    CHECK(f7.size() == 7);
    CHECK(f7.add(5, 4) == 2);
    CHECK(f7.mul(3, 5) == 1);
    CHECK(f7.inv(3) == 5);
    check_axioms(f7);
    check_axioms(Field::prime(13));
}

TEST_CASE("prime squares pick an irreducible modulus") {
    for (Field::Elem p : {3, 5, 7, 11}) {
        const Field f = Field::prime_square(p);
        CHECK(f.size() == p * p);
        const auto [c0, c1] = f.modulus();
        // No root in GF(p) means irreducible for a quadratic.
        for (Field::Elem x = 0; x < p; ++x)
            CHECK((x * x + c1 * x + c0) % p != 0);
    }
    check_axioms(Field::prime_square(3));
    check_axioms(Field::prime_square(5));
}

TEST_CASE("of_order dispatches on prime versus prime square") {
    CHECK(Field::of_order(19).degree() == 1);
    CHECK(Field::of_order(25).degree() == 2);
    CHECK(Field::of_order(121).characteristic() == 11);
    CHECK_THROWS_WITH_AS(Field::of_order(12), doctest::Contains("BadPrimePower"), Error);
    CHECK_THROWS_WITH_AS(Field::of_order(8), doctest::Contains("BadPrimePower"), Error);
}

TEST_CASE("find_primitive returns the smallest generator") {
    CHECK(find_primitive(Field::prime(7)) == 3);   // 2 has order 3
    CHECK(find_primitive(Field::prime(13)) == 2);
    CHECK(find_primitive(Field::prime(19)) == 2);

    // Exhaustive order check as the oracle at q = 9.
    const Field f9 = Field::prime_square(3);
    const Field::Elem x = find_primitive(f9);
    CHECK(f9.order_of(x) == 8);
    for (Field::Elem e = 2; e < x; ++e) CHECK(f9.order_of(e) < 8);
}

TEST_CASE("primitive elements of the quadratic fields have full order") {
    for (Field::Elem q : {25, 49, 121}) {
        const Field f = Field::of_order(q);
        CHECK(f.order_of(find_primitive(f)) == q - 1);
    }
}

TEST_CASE("discrete_log inverts exponentiation") {
    const Field f13 = Field::prime(13);
    CHECK(discrete_log(f13, 2, 2) == 1);
    CHECK(discrete_log(f13, 2, 1) == 0);
    const Field f19 = Field::prime(19);
    CHECK(discrete_log(f19, 2, 10) == 17);  // 2^17 = 10 mod 19
    CHECK(f19.pow(2, 17) == 10);
    CHECK_THROWS_WITH_AS(discrete_log(f13, 2, 0), doctest::Contains("ZeroTarget"), Error);

    for (Field::Elem q : {13, 25}) {
        const Field f = Field::of_order(q);
        const Field::Elem x = find_primitive(f);
        for (Field::Elem e = 1; e < q; ++e) CHECK(f.pow(x, discrete_log(f, x, e)) == e);
    }
}

TEST_CASE("primality and factoring helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK(!is_prime(1));
    CHECK(!is_prime(121));
    CHECK(prime_factors(12) == std::vector<std::int64_t>{2, 3});
    CHECK(prime_factors(120) == std::vector<std::int64_t>{2, 3, 5});
    CHECK(prime_factors(31) == std::vector<std::int64_t>{31});
}

}  // TEST_SUITE
