#include "doctest.h"

#include "arckit/gf.hpp"

#include <stdexcept>

using namespace arckit;

TEST_CASE("finite-field tables satisfy the field axioms, exhaustively") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        CAPTURE(q);
        const GFTable& T = gf_table(q);
        CHECK(T.q == q);
        int pe = 1;
        for (int i = 0; i < T.e; ++i) pe *= T.p;
        CHECK(pe == q);

        for (int a = 0; a < q; ++a) {
            CHECK(T.add[a][0] == a);
            CHECK(T.mul[a][1] == a);
            CHECK(T.mul[a][0] == 0);
            CHECK(T.add[a][T.neg[a]] == 0);
            if (a != 0) CHECK(T.mul[a][T.inv[a]] == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(T.add[a][b] == T.add[b][a]);
                CHECK(T.mul[a][b] == T.mul[b][a]);
                for (int c = 0; c < q; ++c) {
                    CHECK(T.add[T.add[a][b]][c] == T.add[a][T.add[b][c]]);
                    CHECK(T.mul[T.mul[a][b]][c] == T.mul[a][T.mul[b][c]]);
                    CHECK(T.mul[a][T.add[b][c]] == T.add[T.mul[a][b]][T.mul[a][c]]);
                }
            }
        }
        // Characteristic: adding 1 to itself p times gives 0.
        int acc = 0;
        for (int i = 0; i < T.p; ++i) acc = T.add[acc][1];
        CHECK(acc == 0);
        // Frobenius x -> x^p is additive.
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                CHECK(T.pow_of(T.add[a][b], T.p) ==
                      T.add[T.pow_of(a, T.p)][T.pow_of(b, T.p)]);
        // Multiplicative group has order q - 1.
        for (int a = 1; a < q; ++a) CHECK(T.pow_of(a, q - 1) == 1);
    }
}

TEST_CASE("power table is plain repeated multiplication") {
    const GFTable& T = gf_table(8);
    for (int a = 0; a < 8; ++a) {
        int acc = 1;
        for (int k = 0; k <= T.max_exp; ++k) {
            CHECK(T.pow_of(a, k) == acc);
            acc = T.mul[acc][a];
        }
    }
}

TEST_CASE("unsupported table sizes are rejected") {
    CHECK_THROWS_AS((void)gf_table(6), std::invalid_argument);
    CHECK_THROWS_AS((void)gf_table(16), std::invalid_argument);
}

TEST_CASE("coefficient coding: rationals reduce, prime fields embed") {
    const GFTable& T3 = gf_table(3);
    Field Q = Field::rationals();
    CHECK(gf_code(T3, Q, fe_parse(Q, "1/2")) == 2); // 2^{-1} = 2 mod 3
    CHECK(gf_code(T3, Q, fe_from_long(Q, -1)) == 2);
    CHECK(gf_code(T3, Q, fe_from_long(Q, 6)) == 0);
    CHECK_THROWS_AS((void)gf_code(T3, Q, fe_parse(Q, "1/3")),
                    std::invalid_argument);

    Field F3 = Field::prime(3);
    CHECK(gf_code(T3, F3, fe_from_long(F3, 2)) == 2);
    const GFTable& T9 = gf_table(9);
    CHECK(gf_code(T9, F3, fe_from_long(F3, 2)) == 2); // prime subfield embeds
    Field F2 = Field::prime(2);
    CHECK_THROWS_AS((void)gf_code(T9, F2, fe_one(F2)), std::invalid_argument);
}
