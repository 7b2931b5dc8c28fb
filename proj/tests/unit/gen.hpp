// Seeded random generators shared by the property-test suites.
// Everything is deterministic: each TEST_CASE constructs its own Rng with a
// fixed seed, so failures reproduce exactly.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "arckit/field.hpp"
#include "arckit/poly.hpp"
#include "arckit/tpoly.hpp"
#include "arckit/tps.hpp"

namespace arckit::testgen {

using Rng = std::mt19937_64;

// Rotate through Q, F_p1, F_p2 — Field has no default constructor, so the
// property suites select the coefficient field through this helper.
inline Field field_cycle(long i, unsigned long p1, unsigned long p2) {
    switch (i % 3) {
        case 0: return Field::rationals();
        case 1: return Field::prime(p1);
        default: return Field::prime(p2);
    }
}

inline long pick(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline FieldElem random_elem(Rng& rng, const Field& F, long span = 5) {
    return fe_from_long(F, pick(rng, -span, span));
}

inline FieldElem random_nonzero_elem(Rng& rng, const Field& F, long span = 5) {
    for (;;) {
        FieldElem e = random_elem(rng, F, span);
        if (!fe_is_zero(F, e)) return e;
    }
}

// A test ring with k nilpotent parameters a1..ak and nilpotency bound M.
inline RingPtr random_param_ring(Rng& rng, const Field& F, int kmax = 3,
                                 int mmax = 4) {
    TestRingSpec spec;
    int k = (int)pick(rng, 0, kmax);
    for (int i = 0; i < k; ++i) spec.params.push_back("a" + std::to_string(i + 1));
    spec.M = (int)pick(rng, 1, mmax);
    return param_ring(F, spec);
}

// Random polynomial in the full variable set of `r` (terms that exceed the
// nilpotency bound are silently dropped by add_term).
inline Poly random_poly(Rng& rng, const RingPtr& r, int max_terms = 4,
                        int max_exp = 2) {
    Poly p = Poly::zero(r);
    long nt = pick(rng, 0, max_terms);
    for (long i = 0; i < nt; ++i) {
        std::vector<int> e((size_t)r->nvars(), 0);
        for (int v = 0; v < r->nvars(); ++v)
            e[(size_t)v] = (int)pick(rng, 0, max_exp);
        p.add_term(Mono::of(e), random_elem(rng, r->field()));
    }
    return p;
}

// Random element of the parameter ideal: every term involves at least one
// parameter.  Zero when the ring has no parameters.
inline Poly random_param_ideal_poly(Rng& rng, const RingPtr& r,
                                    int max_terms = 3, int max_exp = 2) {
    Poly p = Poly::zero(r);
    if (r->n_params() == 0) return p;
    int first_param = r->nvars() - r->n_params();
    long nt = pick(rng, 0, max_terms);
    for (long i = 0; i < nt; ++i) {
        std::vector<int> e((size_t)r->nvars(), 0);
        for (int v = 0; v < r->nvars(); ++v)
            e[(size_t)v] = (int)pick(rng, 0, max_exp);
        int pv = (int)pick(rng, first_param, r->nvars() - 1);
        if (e[(size_t)pv] == 0) e[(size_t)pv] = 1;
        p.add_term(Mono::of(e), random_elem(rng, r->field()));
    }
    return p;
}

// Random unit: nonzero constant plus parameter-ideal noise.
inline Poly random_unit_poly(Rng& rng, const RingPtr& r) {
    Poly p = Poly::constant(r, random_nonzero_elem(rng, r->field()));
    return p + random_param_ideal_poly(rng, r);
}

inline Tps random_tps(Rng& rng, const RingPtr& r, int N, int max_terms = 3,
                      int max_exp = 2) {
    Tps f = Tps::zero(r, N);
    for (int k = 0; k < N; ++k)
        f.set_coeff(k, random_poly(rng, r, max_terms, max_exp));
    return f;
}

// Random unit series: invertible constant coefficient.
inline Tps random_unit_tps(Rng& rng, const RingPtr& r, int N) {
    Tps f = random_tps(rng, r, N);
    f.set_coeff(0, random_unit_poly(rng, r));
    return f;
}

// Random series of certified t-order exactly n: coefficients below n lie in
// the parameter ideal, coefficient n is a unit.
inline Tps random_order_n_tps(Rng& rng, const RingPtr& r, int N, int n) {
    Tps f = random_tps(rng, r, N);
    for (int k = 0; k < n; ++k)
        f.set_coeff(k, random_param_ideal_poly(rng, r));
    f.set_coeff(n, random_unit_poly(rng, r));
    return f;
}

}  // namespace arckit::testgen
