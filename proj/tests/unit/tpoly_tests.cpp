#include "doctest.h"

#include "arckit/tpoly.hpp"

#include <random>

#include "gen.hpp"

using namespace arckit;
using namespace arckit::testgen;

namespace {
TPoly random_tpoly(Rng& rng, const RingPtr& r, int maxdeg) {
    TPoly f = TPoly::zero(r);
    int d = (int)pick(rng, 0, maxdeg);
    for (int k = 0; k <= d; ++k) f.set_coeff(k, random_poly(rng, r, 2, 2));
    return f;
}
}  // namespace

TEST_CASE("t-polynomial degree, trimming, printing") {
    RingPtr r = param_ring(Field::rationals(), TestRingSpec{{"a"}, 2});
    Poly a = Poly::var(r, "a");
    TPoly f = TPoly::from_coeffs(r, {Poly::from_long(r, 1), a, Poly::zero(r)});
    CHECK(f.degree() == 1); // trailing zero trimmed
    CHECK(f.str() == "1 + a*t");
    CHECK(TPoly::zero(r).degree() == -1);
    CHECK(TPoly::zero(r).str() == "0");
    CHECK(TPoly::t_power(r, 3).str() == "t^3");
    TPoly g = TPoly::from_coeffs(r, {a - a});
    CHECK(g.is_zero());
    // Coefficient reads beyond the degree give zero.
    CHECK(f.coeff(7).is_zero());
}

TEST_CASE("t-polynomial arithmetic matches series arithmetic") {
    Rng rng(301);
    for (int trial = 0; trial < 50; ++trial) {
        Field F = (trial % 2 == 0) ? Field::rationals() : Field::prime(5);
        RingPtr r = random_param_ring(rng, F, 2, 3);
        TPoly f = random_tpoly(rng, r, 4), g = random_tpoly(rng, r, 4);
        int N = 10; // large enough that no product coefficient is lost
        CHECK((f * g).to_tps(N) == f.to_tps(N) * g.to_tps(N));
        CHECK((f + g).to_tps(N) == f.to_tps(N) + g.to_tps(N));
        CHECK((f - g).to_tps(N) == f.to_tps(N) - g.to_tps(N));
        CHECK(TPoly::from_tps(f.to_tps(N)) == f);
        CHECK(f.shifted_up(2) == f * TPoly::t_power(r, 2));
    }
}

TEST_CASE("division by a monic divisor: quotient and remainder are exact") {
    RingPtr r = param_ring(Field::rationals(), TestRingSpec{{"a"}, 2});
    Poly a = Poly::var(r, "a");
    // Divide t^3 + a by t^2 + a t: quotient t - a, remainder a^2 t + a = a.
    TPoly num = TPoly::t_power(r, 3) + TPoly::from_poly(a);
    TPoly den = TPoly::t_power(r, 2) + TPoly::from_poly(a).shifted_up(1);
    auto dm = num.divmod_monic(den);
    CHECK(dm.quot == TPoly::t_power(r, 1) - TPoly::from_poly(a));
    CHECK(dm.rem == TPoly::from_poly(a));
    CHECK(dm.quot * den + dm.rem == num);

    Rng rng(302);
    for (int trial = 0; trial < 80; ++trial) {
        Field F = (trial % 2 == 0) ? Field::rationals() : Field::prime(3);
        RingPtr rr = random_param_ring(rng, F, 2, 3);
        TPoly f = random_tpoly(rng, rr, 6);
        int d = (int)pick(rng, 0, 3);
        TPoly q = TPoly::t_power(rr, d);
        for (int k = 0; k < d; ++k) q.set_coeff(k, random_poly(rng, rr, 2, 2));
        auto qr = f.divmod_monic(q);
        CHECK(qr.quot * q + qr.rem == f);
        CHECK(qr.rem.degree() < d);
    }
}

TEST_CASE("polynomial evaluation into t-polynomials and series agree") {
    Rng rng(303);
    RingPtr src = PolyRing::make(Field::rationals(), {"x", "y"});
    RingPtr tgt = param_ring(Field::rationals(), TestRingSpec{{"a"}, 2});
    for (int trial = 0; trial < 30; ++trial) {
        Poly f = random_poly(rng, src, 4, 2);
        TPoly ix = random_tpoly(rng, tgt, 2), iy = random_tpoly(rng, tgt, 2);
        int N = 9; // degree bound: terms have degree <= 4 in t-degree-2 images
        TPoly v = eval_tpoly(f, {ix, iy});
        Tps vs = eval_tps(f, {ix.to_tps(N), iy.to_tps(N)});
        CHECK(v.to_tps(N) == vs);
    }
}
