#include "doctest.h"

#include "arckit/geometry.hpp"

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "arckit/enumerate.hpp"
#include "arckit/errors.hpp"
#include "arckit/taylor.hpp"
#include "gen.hpp"

using namespace arckit;
using namespace arckit::testgen;

namespace {

Poly pv(const RingPtr& r, const std::string& n) { return Poly::var(r, n); }

std::vector<FieldElem> named_point(const RingPtr& r,
                                   const std::map<std::string, FieldElem>& vals) {
    std::vector<FieldElem> pt;
    for (const auto& nm : r->var_names()) {
        auto it = vals.find(nm);
        REQUIRE(it != vals.end());
        pt.push_back(it->second);
    }
    return pt;
}

}  // namespace

TEST_CASE("level variable naming") {
    CHECK(level_var_name("x", 0) == "x0");
    CHECK(level_var_name("z", 12) == "z12");
}

TEST_CASE("jet equations of the quadric match the displayed forms") {
    SpecialCI X = quadric_cone(Field::rationals());
    SchemePresentation j0 = base_presentation(X);
    REQUIRE(j0.eqs.size() == 1);
    CHECK(j0.eqs[0].p.str() == "x*y - z^2");

    SchemePresentation j1 = jet_presentation(X, 1);
    REQUIRE(j1.eqs.size() == 2);
    CHECK(j1.eqs[0].p.str() == "x0*y0 - z0^2");
    CHECK(j1.eqs[1].p.str() == "x0*y1 + x1*y0 - 2*z0*z1");
    CHECK(j1.eqs[0].tag == "jet");
    CHECK(j1.eqs[1].level == 1);

    SchemePresentation j2 = jet_presentation(X, 2);
    REQUIRE(j2.eqs.size() == 3);
    CHECK(j2.eqs[2].p.str() == "x0*y2 + x1*y1 + x2*y0 - 2*z0*z2 - z1^2");
    // Variables are grouped per coordinate, levels ascending.
    std::vector<std::string> want = {"x0", "x1", "x2", "y0", "y1",
                                     "y2", "z0", "z1", "z2"};
    CHECK(j2.ring->var_names() == want);
    for (auto& v : j2.vars) CHECK(v.role == "arc");
}

TEST_CASE("jet functor respects truncation: deeper jets restrict to shallower ones") {
    for (int q : {2, 3}) {
        SpecialCI X = quadric_cone(Field::prime((unsigned long)q));
        std::vector<SchemePresentation> jets;
        for (int j = 0; j <= 3; ++j) jets.push_back(jet_presentation(X, j));
        Field F = X.ring->field();
        long long seen = 0;
        enumerate_points(jets[3], q, 2000000, [&](const std::vector<int>& pt) {
            ++seen;
            // pt is ordered x0..x3,y0..y3,z0..z3; level <= i slices solve jet_i.
            for (int i = 0; i < 3; ++i) {
                std::vector<FieldElem> sub;
                for (int coord = 0; coord < 3; ++coord)
                    for (int k = 0; k <= i; ++k)
                        sub.push_back(fe_from_long(F, pt[(size_t)(coord * 4 + k)]));
                CHECK(satisfies_point(jets[(size_t)i], sub));
            }
        });
        CHECK(seen > 0);
    }
}

TEST_CASE("localization data propagates to jets at level zero") {
    Field F3 = Field::prime(3);
    RingPtr r = PolyRing::make(F3, {"x", "y"});
    SchemePresentation base =
        affine_presentation(r, {pv(r, "x") * pv(r, "y") - Poly::from_long(r, 1)},
                            {pv(r, "x")});
    SchemePresentation j1 = jet_presentation(base, 1);
    REQUIRE(j1.inverted.size() == 1);
    CHECK(j1.inverted[0] == pv(j1.ring, "x0"));
}

TEST_CASE("smooth chart fibers: affine line, hyperbola, quadric unit chart") {
    // Affine line, no equations: 3 base points, jet fibers 3^2 = 9 at j = 2.
    Field F3 = Field::prime(3);
    RingPtr line = PolyRing::make(F3, {"u"});
    ChartReport a = smooth_chart_product_check(affine_presentation(line, {}),
                                               {"u"}, 2, 3, 100000);
    CHECK(a.pass);
    CHECK(a.base_count == 3);
    CHECK(a.expected_fiber == 9);

    // Hyperbola x*y = 1, x etale: 2 base points, fiber 3 at j = 1.
    RingPtr hyp = PolyRing::make(F3, {"x", "y"});
    SchemePresentation H = affine_presentation(
        hyp, {pv(hyp, "x") * pv(hyp, "y") - Poly::from_long(hyp, 1)});
    ChartReport b = smooth_chart_product_check(H, {"x"}, 1, 3, 100000);
    CHECK(b.pass);
    CHECK(b.all_smooth);
    CHECK(b.fibers_match);
    CHECK(b.base_count == 2);
    CHECK(b.expected_fiber == 3);
    for (auto& rec : b.records) {
        CHECK(rec.fiber == 3);
        CHECK(rec.smooth_certified);
    }

    // Quadric minus {x = 0}: smooth chart, (x, z) etale, fiber 9 at j = 1.
    SpecialCI X = quadric_cone(F3);
    SchemePresentation chart = base_presentation(X);
    chart.inverted.push_back(pv(chart.ring, "x"));
    ChartReport c = smooth_chart_product_check(chart, {"x", "z"}, 1, 3, 100000);
    CHECK(c.pass);
    CHECK(c.base_count == 6);
    CHECK(c.expected_fiber == 9);
}

TEST_CASE("smooth chart check requires a prime field table") {
    Field F2 = Field::prime(2);
    RingPtr line = PolyRing::make(F2, {"u"});
    CHECK_THROWS_AS((void)smooth_chart_product_check(affine_presentation(line, {}),
                                                     {"u"}, 1, 4, 1000),
                    std::invalid_argument);
}

TEST_CASE("depth-0 stratum: shape and F3 count") {
    SpecialCI X = quadric_cone(Field::prime(3));
    SchemePresentation D0 = stratum_presentation(X, 0);
    CHECK(D0.ring->var_names() == std::vector<std::string>{"x0", "y0", "z0"});
    REQUIRE(D0.eqs.size() == 1);
    // Structural check: over F3 the canonical residue form prints -1 as 2.
    CHECK(D0.eqs[0].p == pv(D0.ring, "x0") * pv(D0.ring, "y0") -
                             pv(D0.ring, "z0") * pv(D0.ring, "z0"));
    REQUIRE(D0.inverted.size() == 1);
    CHECK(D0.inverted[0] == pv(D0.ring, "x0"));
    CHECK(D0.tails == std::vector<TailMark>{{"x", 1}, {"z", 1}});
    CHECK(count_points(D0, 3, 1000, 1).count == 6);
}

TEST_CASE("depth-1 stratum: window, order conditions, localization, count") {
    SpecialCI X = quadric_cone(Field::prime(3));
    SchemePresentation D1 = stratum_presentation(X, 1);
    CHECK(D1.ring->nvars() == 9); // levels 0..2 of each coordinate
    CHECK(D1.count_eqs_tagged("jet") == 3);
    CHECK(D1.count_eqs_tagged("ord") == 1);
    // The order condition pins the certificate's low coefficient: x0 = 0.
    for (auto& e : D1.eqs)
        if (e.tag == "ord") CHECK(e.p == pv(D1.ring, "x0"));
    REQUIRE(D1.inverted.size() == 1);
    CHECK(D1.inverted[0] == pv(D1.ring, "x1"));
    CHECK(D1.tails == std::vector<TailMark>{{"x", 3}, {"z", 3}});
    CHECK(count_points(D1, 3, 100000, 1).count == 162);
}

TEST_CASE("congruence chart: equation budget and the base arc") {
    SpecialCI X = quadric_cone(Field::rationals());
    // At N = 3, d = 1 the witness block is empty and there are n*N = 3
    // congruence equations.
    SchemePresentation P31 = n1_presentation(X, 3, 1);
    CHECK(P31.count_eqs_tagged("cong") == 3);
    CHECK(P31.count_eqs_tagged("ord") == 1);
    for (auto& v : P31.vars) CHECK(v.role != "witness");

    // The arc (t^2, 0, 0) with witness 0 is a point of the d = 2 chart.
    SchemePresentation P = n1_presentation(X, 6, 2);
    Field Q = Field::rationals();
    std::map<std::string, FieldElem> vals;
    for (auto& v : P.vars) vals[v.name] = fe_zero(Q);
    vals["x2"] = fe_one(Q);
    CHECK(satisfies_point(P, named_point(P.ring, vals)));
    // Witness block present: W = N - (2d+1) = 1.
    CHECK(P.ring->var_index("h1_0") >= 0);
    CHECK(P.ring->var_index("h1_1") == -1);

    // Breaking the order condition (x1 = 1 makes psi have order < 2) fails.
    vals["x1"] = fe_one(Q);
    CHECK_FALSE(satisfies_point(P, named_point(P.ring, vals)));
}

TEST_CASE("bar/prime split: identity coordinate and quadratic example") {
    Field Q = Field::rationals();
    // Source g = x in one variable; target has two scalar stand-ins.
    RingPtr src = PolyRing::make(Q, {"x"});
    RingPtr tgt = PolyRing::make(Q, {"p", "s"});
    const int N = 5;

    SUBCASE("g = x splits as (xbar, xi)") {
        MonicPoly q = MonicPoly::from_coeffs(tgt, {Poly::from_long(tgt, 1)}); // t + 1
        BoundedPoly xb = BoundedPoly::from_coeffs(
            tgt, {Poly::from_long(tgt, 2), Poly::from_long(tgt, 3)});
        Tps xi = Tps::from_poly(pv(tgt, "s"), N);
        TaylorSplit ts = taylor_split({Poly::var(src, "x")}, q, {xb}, {xi}, N);
        REQUIRE(ts.bar.size() == 1);
        CHECK(ts.bar[0] == xb.to_tpoly());
        CHECK(ts.prime[0] == xi);
    }

    SUBCASE("g = x^2 with divisor t: gbar = x0^2, gprime = 2 x0 xi + t xi^2") {
        MonicPoly q{tgt, 0, {}}; // q = 1, divisor t*q = t
        BoundedPoly xb = BoundedPoly::from_coeffs(tgt, {pv(tgt, "p")});
        Tps xi = Tps::from_poly(pv(tgt, "s"), 4);
        TaylorSplit ts =
            taylor_split({Poly::var(src, "x", 2)}, q, {xb}, {xi}, 4);
        Poly p = pv(tgt, "p"), s = pv(tgt, "s");
        CHECK(ts.bar[0] == TPoly::from_poly(p * p));
        Tps want = Tps::from_coeffs(
            tgt, {p * s + p * s, s * s, Poly::zero(tgt), Poly::zero(tgt)});
        CHECK(ts.prime[0] == want);
    }
}

TEST_CASE("bar/prime split reassembles the substituted equation") {
    Rng rng(601);
    Field F = Field::prime(5);
    SpecialCI X = quadric_cone(F);
    RingPtr tgt = param_ring(F, TestRingSpec{{"e"}, 2});
    for (int trial = 0; trial < 25; ++trial) {
        int d = (int)pick(rng, 0, 2);
        int N = (int)pick(rng, d + 2, 8);
        MonicPoly q{tgt, d, {}};
        for (int k = 0; k < d; ++k) q.c.push_back(random_poly(rng, tgt, 2, 1));
        std::vector<BoundedPoly> xb;
        std::vector<Tps> xi;
        for (int i = 0; i < X.m; ++i) {
            BoundedPoly b{tgt, d + 1, {}};
            for (int k = 0; k <= d; ++k) b.c.push_back(random_poly(rng, tgt, 2, 1));
            xb.push_back(b);
            xi.push_back(random_tps(rng, tgt, N));
        }
        TaylorSplit ts = taylor_split(X.f, q, xb, xi, N);
        // Independent reassembly: g(xbar + t q xi) == gbar + t*q*gprime.
        Tps tq = q.to_tps(N).shifted_up(1).truncated(N);
        std::vector<Tps> args;
        for (int i = 0; i < X.m; ++i)
            args.push_back(xb[(size_t)i].to_tps(N) + tq * xi[(size_t)i]);
        for (int i = 0; i < X.n; ++i) {
            Tps lhs = eval_tps(X.f[(size_t)i], args);
            Tps rhs = ts.bar[(size_t)i].to_tps(N) + tq * ts.prime[(size_t)i];
            CHECK(lhs == rhs);
            CHECK(ts.bar[(size_t)i].degree() <= d);
        }
    }
}

TEST_CASE("section space: displayed equations and elementary fibers") {
    Field F3 = Field::prime(3);
    SchemePresentation S = s_d_presentation(F3, 1, 1, 2);
    CHECK(S.ring->var_names() ==
          std::vector<std::string>{"a", "v", "xi0", "xi1", "xi2"});
    RingPtr r = S.ring;
    REQUIRE(S.eqs.size() == 3);
    CHECK(S.eqs[0].p == pv(r, "v") + pv(r, "a") * pv(r, "xi0"));
    CHECK(S.eqs[1].p == pv(r, "xi0") + pv(r, "a") * pv(r, "xi1"));
    CHECK(S.eqs[2].p == pv(r, "xi1") + pv(r, "a") * pv(r, "xi2"));

    // Fiber over a = 1: free xi2 determines the rest; v takes every value.
    SchemePresentation Sa1 = specialize(S, {{"a", fe_from_long(F3, 1)}});
    CHECK(count_points(Sa1, 3, 1000, 1).count == 3);
    std::set<int> vvals;
    enumerate_points(Sa1, 3, 1000, [&](const std::vector<int>& pt) {
        vvals.insert(pt[0]); // v is the first remaining variable
    });
    CHECK(vvals == std::set<int>{0, 1, 2});

    // Fiber over a = 0: v is forced to 0.
    SchemePresentation Sa0 = specialize(S, {{"a", fe_zero(F3)}});
    CHECK(count_points(Sa0, 3, 1000, 1).count == 3); // xi2 stays free
    enumerate_points(Sa0, 3, 1000, [&](const std::vector<int>& pt) {
        CHECK(pt[0] == 0);
    });
}

TEST_CASE("section space: two copies share one q") {
    Field F3 = Field::prime(3);
    SchemePresentation S = s_d_presentation(F3, 1, 2, 1);
    // Variables: a, then v1, xi1_0, xi1_1, v2, xi2_0, xi2_1.
    CHECK(S.ring->var_index("a") == 0);
    CHECK(S.ring->var_index("v1") >= 0);
    CHECK(S.ring->var_index("v2") >= 0);
    CHECK(S.eqs.size() == 4); // (K+1) levels per copy
}

TEST_CASE("jacobian rank at points: smooth and singular cases") {
    Field Q = Field::rationals();
    // Second golden model chart: equations a w^2 - v^2, b w^2 - 2 v w.
    RingPtr r = PolyRing::make(Q, {"a", "b", "v", "w"});
    Poly a = pv(r, "a"), b = pv(r, "b"), v = pv(r, "v"), w = pv(r, "w");
    SchemePresentation P = affine_presentation(
        r, {a * w * w - v * v, b * w * w - v * w - v * w});
    RankReport base = rank_at_point(
        P, {fe_one(Q), fe_zero(Q), fe_zero(Q), fe_zero(Q)});
    CHECK(base.rank == 0);
    CHECK(base.eq_count == 2);
    CHECK_FALSE(base.certified_smooth);

    RankReport generic = rank_at_point(
        P, {fe_one(Q), fe_from_long(Q, 2), fe_one(Q), fe_one(Q)});
    CHECK(generic.rank == 2);
    CHECK(generic.certified_smooth);

    // First golden model chart {v^2 = 0}: rank 0 along v = 0.
    RingPtr r1 = PolyRing::make(Q, {"v", "a"});
    SchemePresentation P1 = affine_presentation(r1, {pv(r1, "v") * pv(r1, "v")});
    RankReport flat = rank_at_point(P1, {fe_zero(Q), fe_from_long(Q, 7)});
    CHECK(flat.rank == 0);
    CHECK_FALSE(flat.certified_smooth);

    // Off-variety points are rejected.
    CHECK_THROWS_AS(
        (void)rank_at_point(P1, {fe_one(Q), fe_zero(Q)}), std::invalid_argument);
}

TEST_CASE("model chart at depth 1: structure and a constructed point") {
    Field F3 = Field::prime(3);
    SpecialCI X = quadric_cone(F3);
    const int d = 1, N = 4;
    N2dData data = n2d_presentation(X, d, N);
    SchemePresentation& P = data.pres;

    // Block inventory: q (d), u (N, tail above 0), xbar (m*(d+1)),
    // xi (m*N, tail), nu (n*N, tail).
    CHECK(P.ring->nvars() == d + N + 3 * (d + 1) + 3 * N + 1 * N);
    CHECK(P.count_eqs_tagged("cof") == 1 * N);
    CHECK(P.count_eqs_tagged("det2") == N);
    REQUIRE(P.inverted.size() == 1);
    CHECK(P.inverted[0] == pv(P.ring, "u0"));
    int tails = 0;
    for (auto& v : P.vars) tails += v.free_tail ? 1 : 0;
    CHECK(tails == (N - 1) + 3 * N + N); // u above level 0, all xi, all nu

    // Closed-form point: q = t, xbar on the variety to order 1, u and nu
    // forced by the two series identities.
    Rng rng(602);
    RingPtr K0 = param_ring(F3, TestRingSpec{});
    auto fel = [&](long v) { return fe_from_long(F3, v); };
    auto cpoly = [&](long v) { return Poly::from_long(K0, v); };
    for (int inst = 0; inst < 5; ++inst) {
        long x0 = pick(rng, 1, 2), x1 = pick(rng, 0, 2);
        long z0 = pick(rng, 0, 2), z1 = pick(rng, 0, 2);
        Tps xx = Tps::from_coeffs(K0, {cpoly(x0), cpoly(x1)});
        Tps zz = Tps::from_coeffs(K0, {cpoly(z0), cpoly(z1)});
        Tps yy = zz * zz * xx.inverse(); // truncation 2
        // Random xi, and the arcs x = xbar + t^2 xi at truncation 4.
        std::vector<Tps> xiv;
        for (int i = 0; i < 3; ++i) {
            std::vector<Poly> cs;
            for (int k = 0; k < N; ++k) cs.push_back(cpoly(pick(rng, 0, 2)));
            xiv.push_back(Tps::from_coeffs(K0, cs));
        }
        auto arc = [&](const Tps& low, const Tps& xi) {
            return low.extended(N) + xi.shifted_up(2).truncated(N);
        };
        Tps Ax = arc(xx, xiv[0]), Ay = arc(yy, xiv[1]), Az = arc(zz, xiv[2]);
        Tps a_full = Ax * Ay - Az * Az;
        CHECK(a_full.coeff(0).is_zero());
        CHECK(a_full.coeff(1).is_zero());
        Tps c_full = (Ax * Ax).shifted_up(1).truncated(N); // t * psi^2
        // u from the det2 side: u*q = c_full with q = t.
        std::vector<Poly> uc = {c_full.coeff(1), c_full.coeff(2),
                                c_full.coeff(3), Poly::zero(K0)};
        Tps u_low = Tps::from_coeffs(K0, {uc[0], uc[1]});
        // nu from the cof side: a' = u * nu at truncation N - d - 1.
        Tps nu_low = a_full.shifted_down(2) * u_low.inverse();

        std::map<std::string, FieldElem> vals;
        auto cst = [&](const Poly& p) {
            auto c = p.as_constant();
            REQUIRE(c.has_value());
            return *c;
        };
        vals["q0"] = fe_zero(F3);
        for (int k = 0; k < N; ++k)
            vals["u" + std::to_string(k)] = cst(uc[(size_t)k]);
        const char* coords[3] = {"x", "y", "z"};
        const Tps* lows[3] = {&xx, &yy, &zz};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k <= d; ++k)
                vals[std::string("xb_") + coords[i] + "_" + std::to_string(k)] =
                    cst(lows[i]->coeff(k));
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < N; ++k)
                vals[std::string("xi_") + coords[i] + "_" + std::to_string(k)] =
                    cst(xiv[(size_t)i].coeff(k));
        for (int k = 0; k < N; ++k)
            vals["nu1_" + std::to_string(k)] =
                k < 2 ? cst(nu_low.coeff(k)) : fe_zero(F3);

        std::vector<FieldElem> pt = named_point(P.ring, vals);
        CHECK(satisfies_point(P, pt));

        // The returned symbolic sides agree at the point, coefficient by
        // coefficient.
        for (int k = 0; k < N; ++k) {
            CHECK(fe_eq(F3, data.lhs_a[0].coeff(k).eval_point(pt),
                        data.rhs_a[0].coeff(k).eval_point(pt)));
            CHECK(fe_eq(F3, data.lhs_c.coeff(k).eval_point(pt),
                        data.rhs_c.coeff(k).eval_point(pt)));
        }
        // Perturbing the unit's constant coefficient breaks membership.
        vals["u0"] = fe_eq(F3, vals["u0"], fel(1)) ? fel(2) : fel(1);
        CHECK_FALSE(satisfies_point(P, named_point(P.ring, vals)));
    }
}

TEST_CASE("model chart contains the base arc at its natural depth") {
    // gamma_0 = (t^2, 0, 0): psi = x has order 2d with q = t^5, u = 1 at
    // d = 5, N = 12 (the smallest window with N >= 2d + 2).
    Field Q = Field::rationals();
    SpecialCI X = quadric_cone(Q);
    const int d = 5, N = 12;
    N2dData data = n2d_presentation(X, d, N);
    std::map<std::string, FieldElem> vals;
    for (auto& v : data.pres.vars) vals[v.name] = fe_zero(Q);
    vals["u0"] = fe_one(Q);
    vals["xb_x_2"] = fe_one(Q);
    CHECK(satisfies_point(data.pres, named_point(data.pres.ring, vals)));
}

TEST_CASE("model chart rejects undersized windows") {
    SpecialCI X = quadric_cone(Field::rationals());
    CHECK_THROWS_AS((void)n2d_presentation(X, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)n2d_presentation(X, 2, 2), std::invalid_argument);
}
