#include "doctest.h"

#include "arckit/field.hpp"

#include <stdexcept>

using namespace arckit;

TEST_CASE("rational field arithmetic is exact") {
    Field Q = Field::rationals();
    CHECK(Q.is_rational());
    CHECK(Q.characteristic() == 0);
    CHECK(Q.str() == "Q");

    FieldElem a = fe_parse(Q, "2/3");
    FieldElem b = fe_parse(Q, "-5/7");
    FieldElem s = fe_add(Q, a, b);
    CHECK(fe_str(Q, s) == "-1/21");
    CHECK(fe_eq(Q, fe_mul(Q, a, fe_inv(Q, a)), fe_one(Q)));
    CHECK(fe_is_zero(Q, fe_sub(Q, a, a)));
    // 1/3 repeated 3x sums to 1 exactly (no floating point drift possible).
    FieldElem third = fe_parse(Q, "1/3");
    FieldElem sum = fe_add(Q, third, fe_add(Q, third, third));
    CHECK(fe_eq(Q, sum, fe_one(Q)));
}

TEST_CASE("prime field arithmetic") {
    Field F5 = Field::prime(5);
    CHECK_FALSE(F5.is_rational());
    CHECK(F5.characteristic() == 5);
    CHECK(F5.str() == "F 5");

    FieldElem two = fe_from_long(F5, 2);
    FieldElem neg = fe_from_long(F5, -3);
    CHECK(fe_eq(F5, two, neg)); // -3 = 2 mod 5
    CHECK(fe_eq(F5, fe_inv(F5, two), fe_from_long(F5, 3)));
    CHECK(fe_eq(F5, fe_mul(F5, two, fe_from_long(F5, 4)), fe_from_long(F5, 3)));
    CHECK_THROWS_AS((void)fe_inv(F5, fe_zero(F5)), std::domain_error);
}

TEST_CASE("field equality and total element order") {
    Field Q = Field::rationals();
    Field F3 = Field::prime(3);
    CHECK(Q != F3);
    CHECK(Q == Field::rationals());
    CHECK(F3 == Field::prime(3));
    // fe_less is a strict total order used for canonical output ordering.
    FieldElem x = fe_from_long(F3, 1), y = fe_from_long(F3, 2);
    CHECK(fe_less(F3, x, y) != fe_less(F3, y, x));
    CHECK_FALSE(fe_less(F3, x, x));
}

TEST_CASE("non-prime modulus is rejected") {
    CHECK_THROWS_AS((void)Field::prime(4), std::invalid_argument);
    CHECK_THROWS_AS((void)Field::prime(1), std::invalid_argument);
}
