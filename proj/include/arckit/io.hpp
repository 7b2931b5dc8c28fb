#pragma once
#include <string>
#include <utility>
#include <vector>

#include "arckit/presentation.hpp"
#include "arckit/special_ci.hpp"
#include "arckit/tpoly.hpp"

namespace arckit {

// Expression grammar shared by every text format: sums of products of
// integer (or integer/integer) literals, ring-variable identifiers, '^'
// with nonnegative integer exponents, parentheses, unary minus. All
// multiplication is explicit ('*'). parse_error carries 1-based positions.
Poly parse_poly(const std::string& src, const RingPtr& ring);
Poly parse_poly_at(const std::string& src, const RingPtr& ring, int line0, int col0);

// Complete-intersection variety file:
//   ci <m> <n>
//   vars <m names>
//   dist <n names>
//   eq <poly>            (n lines, one per distinguished variable)
// '#' comments and blank lines are ignored.
struct VarietyDoc {
    int m = 0, n = 0;
    std::vector<std::string> vars;
    std::vector<std::string> dist;
    std::vector<std::string> eq_srcs;
    std::vector<int> eq_lines; // source line of each eq, for diagnostics
};
VarietyDoc parse_variety(const std::string& text);
std::string serialize_variety(const VarietyDoc& doc);
// Instantiate over a field. The ambient ring is parameter-free; arcs over
// test rings enter through the evaluation helpers, which map coefficients
// across rings of the same field.
SpecialCI realize_variety(const VarietyDoc& doc, const Field& F);

// Named t-series document ("series" for division/preparation input, "point"
// for lift input):
//   series | point
//   field Q | field F <p>
//   params <names>       (optional)
//   nilpotent <M>        (optional, default 1)
//   truncation <N>       (optional)
//   d <d>                (optional)
//   <name> : <poly in t and params>
//   ...
//   end
struct SeriesDoc {
    Field field = Field::rationals();
    TestRingSpec spec;
    int truncation = -1;
    int d = -1;
    RingPtr ring; // param_ring(field, spec); entry coefficients live here
    std::vector<std::pair<std::string, TPoly>> entries;

    const TPoly* find(const std::string& name) const;
    const TPoly& get(const std::string& name) const; // throws context_error
    // The entry as a series at truncation N; degrees >= N must be absent.
    Tps get_tps(const std::string& name, int N) const;
};
SeriesDoc parse_series(const std::string& text, const std::string& kind);
std::string serialize_series(const SeriesDoc& doc, const std::string& kind);

// Scheme presentation document:
//   presentation
//   field Q | field F <p>
//   nilpotent <M>        (optional; meaningful with param-flagged vars)
//   var <name> [coord=<c>] [t=<k>] role=<role> [tail] [param]
//   tail <coord> from=<level>
//   inv : <poly>
//   eq <tag> r=<int> k=<int> : <poly>
//   end
// Variable lines come first (ring order, parameters last); equations and
// inverted elements follow in document order.
std::string serialize_presentation(const SchemePresentation& P);
SchemePresentation parse_presentation(const std::string& text);

// Whole-file slurp; throws std::runtime_error with the path on failure.
std::string read_text_file(const std::string& path);

} // namespace arckit
