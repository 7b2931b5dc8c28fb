#pragma once
#include <functional>
#include <vector>

#include "arckit/gf.hpp"
#include "arckit/presentation.hpp"

namespace arckit {

// Polynomial compiled to GF element codes and (variable, exponent) pairs
// for fast table-driven evaluation.
struct GFPoly {
    struct Term {
        int c = 0;
        std::vector<std::pair<int, int>> pe; // (variable index, exponent)
    };
    std::vector<Term> terms;
    int nvars = 0;

    int eval(const GFTable& T, const std::vector<int>& pt) const;
};

GFPoly compile_gf(const GFTable& T, const Poly& f);

struct CountResult {
    int q = 0;
    int nvars = 0;
    long long count = 0;
    long long total = 0; // q^nvars assignments visited
    double ms = 0.0;
};

// Count F_q points of the presentation (all equations vanish, all inverted
// elements nonzero) by exhaustive enumeration. Throws budget_error when
// q^nvars exceeds the budget; workers > 1 splits on the first variable.
CountResult count_points(const SchemePresentation& P, int q, long long budget, int workers = 1);

// Single-threaded enumeration; cb receives each solution's code vector
// (variables in ring order).
void enumerate_points(const SchemePresentation& P, int q, long long budget,
                      const std::function<void(const std::vector<int>&)>& cb);

} // namespace arckit
