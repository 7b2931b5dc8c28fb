#pragma once
#include <vector>

#include "arckit/field.hpp"

namespace arckit {

// Dense arithmetic tables for a small finite field GF(q), q = p^e <= 9.
// Element codes are 0..q-1 in the polynomial basis: code sum(d_i p^i)
// stands for sum(d_i alpha^i), so 0 and 1 are the field's 0 and 1 and the
// prime subfield embeds as codes 0..p-1. Moduli: x^2+x+1 (q=4),
// x^3+x+1 (q=8), x^2+1 (q=9).
struct GFTable {
    int q = 0, p = 0, e = 1;
    std::vector<std::vector<int>> add, mul;
    std::vector<int> neg, inv;              // inv[0] is unused
    std::vector<std::vector<int>> pw;       // pw[a][k] = a^k, k <= max_exp
    int max_exp = 0;

    int pow_of(int a, int k) const;
};

// Cached table lookup; supported q: 2, 3, 4, 5, 7, 8, 9.
const GFTable& gf_table(int q);

// Element code of a coefficient: rationals reduce mod p (denominator must
// be prime to p; parameter_error otherwise), F_p elements embed into the
// prime subfield (characteristics must agree).
int gf_code(const GFTable& T, const Field& F, const FieldElem& c);

} // namespace arckit
