#include "doctest.h"

#include "arckit/io.hpp"

#include <random>
#include <string>

#include "arckit/errors.hpp"
#include "arckit/geometry.hpp"
#include "arckit/models.hpp"
#include "gen.hpp"

using namespace arckit;
using namespace arckit::testgen;

namespace {

std::string golden_path(const std::string& name) {
    return std::string(ARCKIT_GOLDEN_DIR) + "/" + name;
}

std::string data_path(const std::string& name) {
    return std::string(ARCKIT_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("expression parsing: literals, precedence, parentheses") {
    RingPtr r = PolyRing::make(Field::rationals(), {"x", "y"});
    Poly x = Poly::var(r, "x"), y = Poly::var(r, "y");
    CHECK(parse_poly("x*y - z^2", PolyRing::make(Field::rationals(),
                                                 {"x", "y", "z"}))
              .str() == "x*y - z^2");
    CHECK(parse_poly("x^2 + 2*x*y + y^2", r) == (x + y) * (x + y));
    CHECK(parse_poly("-x", r) == -x);
    CHECK(parse_poly("- x + - y", r) == -(x + y));
    CHECK(parse_poly("(x + y)^3", r) == (x + y).pow(3));
    CHECK(parse_poly("1/2*x", r) == x.scale(fe_parse(Field::rationals(), "1/2")));
    CHECK(parse_poly("7", r) == Poly::from_long(r, 7));
    CHECK(parse_poly("x^0", r) == Poly::from_long(r, 1));
    // No implicit multiplication.
    CHECK_THROWS_AS((void)parse_poly("2x", r), parse_error);
    CHECK_THROWS_AS((void)parse_poly("x y", r), parse_error);
    CHECK_THROWS_AS((void)parse_poly("x + ", r), parse_error);
    CHECK_THROWS_AS((void)parse_poly("w", r), parse_error);
    CHECK_THROWS_AS((void)parse_poly("x^(2)", r), parse_error);
}

TEST_CASE("parse errors carry positions") {
    RingPtr r = PolyRing::make(Field::rationals(), {"x"});
    try {
        (void)parse_poly("x + %", r);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 1") != std::string::npos);
        CHECK(msg.find("col 5") != std::string::npos);
        CHECK(e.line == 1);
        CHECK(e.col == 5);
    }
}

TEST_CASE("round trip: canonical printing re-parses to the same polynomial") {
    Rng rng(901);
    for (int trial = 0; trial < 120; ++trial) {
        Field F = (trial % 2 == 0) ? Field::rationals() : Field::prime(5);
        RingPtr r = PolyRing::make(F, {"x", "y"},
                                   TestRingSpec{{"e"}, (int)pick(rng, 1, 3)});
        Poly p = random_poly(rng, r, 6, 3);
        CHECK(parse_poly(p.str(), r) == p);
    }
}

TEST_CASE("variety document: parse, serialize, realize") {
    std::string text =
        "# cone fixture\n"
        "ci 3 1\n"
        "vars x y z\n"
        "dist y\n"
        "eq x*y - z^2\n";
    VarietyDoc doc = parse_variety(text);
    CHECK(doc.m == 3);
    CHECK(doc.n == 1);
    CHECK(doc.vars == std::vector<std::string>{"x", "y", "z"});
    CHECK(doc.dist == std::vector<std::string>{"y"});
    REQUIRE(doc.eq_srcs.size() == 1);

    // Serialization round-trips through the parser.
    VarietyDoc again = parse_variety(serialize_variety(doc));
    CHECK(again.vars == doc.vars);
    CHECK(again.eq_srcs == doc.eq_srcs);

    SpecialCI X = realize_variety(doc, Field::rationals());
    CHECK(X.m == 3);
    CHECK(X.f[0].str() == "x*y - z^2");
    CHECK(X.y_idx == std::vector<int>{1});

    // The ambient ring is always parameter-free; test-ring arcs reach the
    // equations through the cross-ring evaluation helpers instead.
    SpecialCI Xe = realize_variety(doc, Field::prime(3));
    CHECK(Xe.ring->n_params() == 0);
    CHECK(Xe.ring->nvars() == 3);
}

TEST_CASE("variety document: malformed inputs are rejected with positions") {
    CHECK_THROWS_AS((void)parse_variety("ci 1 1\nvars x\ndist x\neq x\n"),
                    parse_error); // m must be >= 2
    CHECK_THROWS_AS((void)parse_variety("ci 2 1\nvars x y\ndist w\neq x\n"),
                    parse_error); // dist not among vars
    CHECK_THROWS_AS((void)parse_variety("ci 2 1\nvars x y\ndist y\n"),
                    parse_error); // missing equation line
    CHECK_THROWS_AS(
        (void)parse_variety("ci 2 1\nvars x y\ndist y\neq x\nextra\n"),
        parse_error); // trailing junk
}

TEST_CASE("series document: parse, access, serialize") {
    std::string text =
        "series\n"
        "field Q\n"
        "params eps\n"
        "nilpotent 2\n"
        "truncation 6\n"
        "f : t + eps*t^2\n"
        "g : t^2\n"
        "end\n";
    SeriesDoc doc = parse_series(text, "series");
    CHECK(doc.field.is_rational());
    CHECK(doc.spec.M == 2);
    CHECK(doc.truncation == 6);
    CHECK(doc.d == -1);
    REQUIRE(doc.entries.size() == 2);
    Poly eps = Poly::var(doc.ring, "eps");
    TPoly want = TPoly::t_power(doc.ring, 1) +
                 TPoly::from_poly(eps).shifted_up(2);
    CHECK(doc.get("f") == want);
    CHECK(doc.find("missing") == nullptr);
    CHECK_THROWS_AS((void)doc.get("missing"), std::invalid_argument);
    Tps f6 = doc.get_tps("f", 6);
    CHECK(f6.trunc() == 6);
    CHECK(f6.coeff(2) == eps);
    // Degrees beyond the requested truncation are an error, not silent loss.
    CHECK_THROWS_AS((void)doc.get_tps("f", 2), std::invalid_argument);

    SeriesDoc rt = parse_series(serialize_series(doc, "series"), "series");
    REQUIRE(rt.entries.size() == 2);
    // The reparsed document carries a fresh ring; compare canonical text.
    CHECK(rt.get("f").str() == doc.get("f").str());
    CHECK(rt.get("g").str() == doc.get("g").str());
    CHECK(rt.truncation == 6);
}

TEST_CASE("series document: wrong kind line and duplicates are rejected") {
    CHECK_THROWS_AS((void)parse_series("point\nfield Q\nf : t\nend\n", "series"),
                    parse_error);
    CHECK_THROWS_AS(
        (void)parse_series("series\nfield Q\nf : t\nf : t^2\nend\n", "series"),
        parse_error);
    CHECK_THROWS_AS((void)parse_series("series\nf : t\nend\n", "series"),
                    parse_error); // field required
    CHECK_THROWS_AS((void)parse_series("series\nfield Q\nf : t\n", "series"),
                    parse_error); // missing end
    CHECK_THROWS_AS(
        (void)parse_series("series\nfield Q\nparams t\nf : t\nend\n", "series"),
        parse_error); // "t" cannot be a parameter name
}

TEST_CASE("presentation documents round-trip exactly") {
    Field F3 = Field::prime(3);
    SpecialCI X = quadric_cone(F3);

    auto roundtrip = [&](const SchemePresentation& P) {
        std::string text = serialize_presentation(P);
        SchemePresentation back = parse_presentation(text);
        CHECK(back == P);
        // Serialization is deterministic byte-for-byte.
        CHECK(serialize_presentation(back) == text);
    };

    roundtrip(jet_presentation(X, 2));
    roundtrip(stratum_presentation(X, 1));
    roundtrip(n1_presentation(quadric_cone(Field::rationals()), 4, 1));
    roundtrip(n2d_presentation(X, 1, 4).pres);
    roundtrip(s_d_presentation(F3, 1, 1, 2));
    roundtrip(s_d_presentation(Field::rationals(), 2, 2, 3));
    // A presentation over a ring with parameters.
    RingPtr r = PolyRing::make(F3, {"x"}, TestRingSpec{{"e"}, 2});
    SchemePresentation withp = affine_presentation(
        r, {Poly::var(r, "x") * Poly::var(r, "e")}, {Poly::var(r, "x")});
    roundtrip(withp);
}

TEST_CASE("golden files: frozen presentation texts match regenerated ones") {
    SpecialCI X3 = quadric_cone(Field::prime(3));
    CHECK(serialize_presentation(jet_presentation(X3, 2)) ==
          read_text_file(golden_path("jet2_f3.txt")));
    CHECK(serialize_presentation(stratum_presentation(X3, 1)) ==
          read_text_file(golden_path("stratum1_f3.txt")));
    CHECK(serialize_presentation(s_d_presentation(Field::prime(3), 1, 1, 2)) ==
          read_text_file(golden_path("s1_k2_f3.txt")));
    CHECK(serialize_presentation(
              n2d_presentation(quadric_cone(Field::rationals()), 1, 4).pres) ==
          read_text_file(golden_path("n2d_d1_n4_q.txt")));
}

TEST_CASE("shipped data files load") {
    VarietyDoc doc = parse_variety(read_text_file(data_path("quadric.ci")));
    SpecialCI X = realize_variety(doc, Field::rationals());
    CHECK(X.f[0].str() == "x*y - z^2");

    SeriesDoc sd =
        parse_series(read_text_file(data_path("sample_series.txt")), "series");
    CHECK(sd.get_tps("f", 6).coeff(1) == Poly::from_long(sd.ring, 1));

    SeriesDoc pt =
        parse_series(read_text_file(data_path("sample_point.txt")), "point");
    CHECK(pt.d == 2);
    CHECK(pt.truncation == 8);
    REQUIRE(pt.entries.size() == 3);
}

TEST_CASE("missing files raise a readable error") {
    CHECK_THROWS_AS((void)read_text_file("/nonexistent/elsewhere.txt"),
                    std::runtime_error);
}
