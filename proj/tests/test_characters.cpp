#include "doctest.h"

#include "gl2/characters.hpp"

using namespace gl2;

TEST_CASE("parameter validation accepts odd prime powers") {
    FieldParams fp = validate_params(3, 1);
    CHECK(fp.q == 3);
    CHECK(fp.m1 == 2);
    CHECK(fp.m2 == 8);
    CHECK(fp.group_order == 48);

    FieldParams f9 = validate_params(3, 2);
    CHECK(f9.q == 9);
    CHECK(f9.m1 == 8);
    CHECK(f9.m2 == 80);
    CHECK(f9.group_order == 5760);

    for (Int q : {3, 5, 7, 9, 11, 13, 25, 27}) {
        FieldParams p = params_for_q(q);
        CHECK(p.m2 == p.m1 * (q + 1));
        CHECK(p.group_order == q * p.m1 * p.m1 * (q + 1));
    }
}

TEST_CASE("parameter validation rejects bad input") {
    CHECK_THROWS_AS(validate_params(2, 3), EvenCharacteristic);
    CHECK_THROWS_AS(validate_params(4, 1), NotPrime);
    CHECK_THROWS_AS(validate_params(9, 1), NotPrime);
    CHECK_THROWS_AS(validate_params(1, 1), NotPrime);
    CHECK_THROWS_AS(validate_params(3, 0), BadExponent);
    CHECK_THROWS_AS(validate_params(3, -2), BadExponent);
    CHECK_THROWS_AS(params_for_q(15), NotPrime);
    CHECK_THROWS_AS(params_for_q(8), EvenCharacteristic);
    CHECK_THROWS_AS(params_for_q(1), BadExponent);
}

TEST_CASE("multiplicative character arithmetic") {
    FieldParams fp = validate_params(5, 1);
    MultChar one = mult_char(fp, 1), three = mult_char(fp, 3), two = mult_char(fp, 2);
    CHECK(mul(one, three).a == 0);
    CHECK(inverse(one) == three);
    CHECK(mul(two, two).a == 0);
    CHECK(mult_char(fp, -1) == three);

    FieldParams f3 = validate_params(3, 1);
    CHECK_THROWS_AS(mul(one, mult_char(f3, 0)), ParamMismatch);
}

TEST_CASE("neg pairing is a fixed-point-free involution") {
    FieldParams f3 = validate_params(3, 1);
    CHECK(neg_char(mult_char(f3, 0)).a == 1);
    FieldParams f5 = validate_params(5, 1);
    CHECK(neg_char(mult_char(f5, 1)).a == 3);
    for (Int q : {3, 5, 9, 13}) {
        FieldParams fp = params_for_q(q);
        for (Int a = 0; a < fp.m1; ++a) {
            MultChar x = mult_char(fp, a);
            CHECK(neg_char(x) != x);
            CHECK(neg_char(neg_char(x)) == x);
            CHECK(mul(neg_char(x), neg_char(x)) == mul(x, x));
        }
    }
}

TEST_CASE("square roots of a character") {
    FieldParams f5 = validate_params(5, 1);
    auto r = char_sqrts(mult_char(f5, 2));
    REQUIRE(r.size() == 2);
    CHECK(r[0].a == 1);
    CHECK(r[1].a == 3);
    CHECK(char_sqrts(mult_char(f5, 3)).empty());

    FieldParams f3 = validate_params(3, 1);
    auto r3 = char_sqrts(mult_char(f3, 0));
    REQUIRE(r3.size() == 2);
    CHECK(r3[0].a == 0);
    CHECK(r3[1].a == 1);

    for (Int q : {3, 5, 9, 13}) {
        FieldParams fp = params_for_q(q);
        for (Int a = 0; a < fp.m1; ++a) {
            auto roots = char_sqrts(mult_char(fp, a));
            if (a % 2 == 0) {
                REQUIRE(roots.size() == 2);
                CHECK(roots[1] == neg_char(roots[0]));
                for (const MultChar& y : roots) CHECK(mul(y, y).a == a);
            } else {
                CHECK(roots.empty());
            }
        }
    }
}

TEST_CASE("torus characters restrict, twist, and frobenius correctly") {
    FieldParams f5 = validate_params(5, 1);
    CHECK(torus_bar(torus_char(f5, 7)).a == 3);
    CHECK(frobenius(torus_char(f5, 7)).k == 11);
    CHECK(det_twist(torus_char(f5, 1), mult_char(f5, 1)).k == 7);
    CHECK(mul(torus_char(f5, 4), torus_char(f5, 20)).k == 0);
    CHECK(inverse(torus_char(f5, 7)).k == 17);

    FieldParams f3 = validate_params(3, 1);
    CHECK(torus_bar(torus_char(f3, 2)).a == 0);
    CHECK(frobenius(torus_char(f3, 1)).k == 3);
    CHECK(frobenius(torus_char(f3, 0)).k == 0);

    for (Int q : {3, 5, 9}) {
        FieldParams fp = params_for_q(q);
        for (Int k = 0; k < fp.m2; ++k) {
            TorusChar L = torus_char(fp, k);
            CHECK(frobenius(frobenius(L)) == L);
            CHECK(torus_bar(frobenius(L)) == torus_bar(L));
        }
    }
}

TEST_CASE("decomposability: divisibility, frobenius fixing, and witness agree") {
    FieldParams f5 = validate_params(5, 1);
    auto w = decomposable_witness(torus_char(f5, 18));
    REQUIRE(w.has_value());
    CHECK(w->a == 3);
    CHECK(!decomposable_witness(torus_char(f5, 7)).has_value());

    FieldParams f3 = validate_params(3, 1);
    auto w3 = decomposable_witness(torus_char(f3, 4));
    REQUIRE(w3.has_value());
    CHECK(w3->a == 1);

    for (Int q : {3, 5, 9}) {
        FieldParams fp = params_for_q(q);
        for (Int k = 0; k < fp.m2; ++k) {
            TorusChar L = torus_char(fp, k);
            bool divides = k % (q + 1) == 0;
            CHECK(is_decomposable(L) == divides);
            CHECK((frobenius(L) == L) == divides);
            auto wit = decomposable_witness(L);
            CHECK(wit.has_value() == divides);
            if (wit) {
                // The witness reproduces L on the scalar embedding.
                CHECK(umod(wit->a * (q + 1), fp.m2) == k);
                CHECK(torus_bar(L) == mul(*wit, *wit));
            }
        }
    }
}
