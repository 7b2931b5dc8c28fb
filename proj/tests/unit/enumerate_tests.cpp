#include "doctest.h"

#include "arckit/enumerate.hpp"

#include <set>
#include <vector>

#include "arckit/errors.hpp"
#include "arckit/geometry.hpp"
#include "arckit/special_ci.hpp"

using namespace arckit;

namespace {
SchemePresentation one_var(const Field& F, const Poly& eq) {
    return affine_presentation(eq.ring(), {eq});
}
}  // namespace

TEST_CASE("counting: double root counts once") {
    Field F5 = Field::prime(5);
    RingPtr r = PolyRing::make(F5, {"v"});
    Poly v = Poly::var(r, "v");
    CountResult c = count_points(one_var(F5, v * v), 5, 1000, 1);
    CHECK(c.count == 1); // {v^2 = 0} has the single point v = 0
    CHECK(c.total == 5);
    CHECK(c.q == 5);
}

TEST_CASE("counting over an extension field uses subfield coefficient codes") {
    // x^2 + x = 0 has 2 roots in F_4 (x(x+1) = 0) but x^2 + x + 1 = 0 has
    // the 2 roots outside the prime subfield.
    Field F2 = Field::prime(2);
    RingPtr r = PolyRing::make(F2, {"x"});
    Poly x = Poly::var(r, "x");
    CHECK(count_points(one_var(F2, x * x + x), 4, 100, 1).count == 2);
    CHECK(count_points(one_var(F2, x * x + x + Poly::from_long(r, 1)), 4, 100, 1)
              .count == 2);
    CHECK(count_points(one_var(F2, x * x + x + Poly::from_long(r, 1)), 2, 100, 1)
              .count == 0);
}

TEST_CASE("localization removes points from the count") {
    Field F3 = Field::prime(3);
    RingPtr r = PolyRing::make(F3, {"x", "y"});
    Poly x = Poly::var(r, "x"), y = Poly::var(r, "y");
    SchemePresentation P = affine_presentation(r, {x * y}, {x});
    // x invertible forces y = 0: points (1,0), (2,0).
    CHECK(count_points(P, 3, 1000, 1).count == 2);
}

TEST_CASE("worker splits do not change the count") {
    SpecialCI X = quadric_cone(Field::prime(3));
    SchemePresentation jets = jet_presentation(X, 2);
    long long base = count_points(jets, 3, 100000, 1).count;
    for (int w : {2, 3, 4, 8}) {
        CHECK(count_points(jets, 3, 100000, w).count == base);
    }
    CHECK(base == 891);
}

TEST_CASE("enumeration visits every solution exactly once, in ring order") {
    Field F3 = Field::prime(3);
    RingPtr r = PolyRing::make(F3, {"x", "y"});
    Poly x = Poly::var(r, "x"), y = Poly::var(r, "y");
    SchemePresentation P =
        affine_presentation(r, {x * y - Poly::from_long(r, 1)});
    std::set<std::vector<int>> seen;
    enumerate_points(P, 3, 1000, [&](const std::vector<int>& pt) {
        CHECK(pt.size() == 2);
        CHECK(seen.insert(pt).second);
    });
    std::set<std::vector<int>> expect = {{1, 1}, {2, 2}};
    CHECK(seen == expect);
}

TEST_CASE("budget overruns throw instead of running forever") {
    Field F3 = Field::prime(3);
    RingPtr r = PolyRing::make(F3, {"a", "b", "c", "d", "e", "f", "g"});
    SchemePresentation P = affine_presentation(r, {});
    CHECK_THROWS_AS((void)count_points(P, 3, 100, 1), budget_error);
    CHECK_THROWS_AS(enumerate_points(P, 3, 100, [](const std::vector<int>&) {}),
                    budget_error);
    // Within budget it is exact: 3^7 empty-equation points.
    CHECK(count_points(P, 3, 10000, 1).count == 2187);
}

TEST_CASE("compiled polynomials drop characteristic-multiple terms") {
    Field F3 = Field::prime(3);
    RingPtr r = PolyRing::make(F3, {"x"});
    Poly z = Poly::var(r, "x").scale(fe_from_long(F3, 3)); // 3x = 0 in F3
    CHECK(z.is_zero()); // normalized away at construction already
    SchemePresentation P = affine_presentation(r, {z});
    CHECK(count_points(P, 3, 100, 1).count == 3);
}

TEST_CASE("field/table characteristic mismatches are rejected") {
    Field F3 = Field::prime(3);
    RingPtr r = PolyRing::make(F3, {"x"});
    SchemePresentation P = affine_presentation(r, {Poly::var(r, "x")});
    CHECK_THROWS_AS((void)count_points(P, 2, 100, 1), std::invalid_argument);
    CHECK(count_points(P, 9, 100, 1).count == 1);
}
