#pragma once
#include <utility>

#include "arckit/tpoly.hpp"
#include "arckit/tps.hpp"

namespace arckit {

// Monic polynomial in t of exact degree d: t^d + c_{d-1} t^{d-1} + ... + c_0.
struct MonicPoly {
    RingPtr ring;
    int d = 0;
    std::vector<Poly> c; // c[k] is the coefficient of t^k, size d

    static MonicPoly t_power(const RingPtr& r, int d);
    static MonicPoly from_coeffs(RingPtr r, std::vector<Poly> lower);
    TPoly to_tpoly() const;
    Tps to_tps(int N) const;
    // True when every lower coefficient lies in the parameter ideal, i.e.
    // the reduction is exactly t^d (the Weierstrass-polynomial shape).
    bool lower_in_param_ideal() const;
    bool operator==(const MonicPoly& o) const;
};

// Polynomial in t of degree < d (a point of the coefficient space A_d).
struct BoundedPoly {
    RingPtr ring;
    int d = 0;           // strict degree bound
    std::vector<Poly> c; // size d

    static BoundedPoly zero(const RingPtr& r, int d);
    static BoundedPoly from_coeffs(RingPtr r, std::vector<Poly> coeffs);
    TPoly to_tpoly() const;
    Tps to_tps(int N) const;
    bool is_zero() const;
    bool operator==(const BoundedPoly& o) const;
};

// g = b*f + r with deg_t r < n, exactly at truncation N. The quotient's
// coefficients are unique below t^{b_certified} (= N - n); the reported b
// carries zeros above that window by convention, which keeps the identity
// exact at truncation N.
struct DivisionResult {
    Tps b;
    int b_certified = 0;
    BoundedPoly r;
    int n = 0;
};

// Weierstrass division of g by f, where the reduction of f modulo the
// parameters has certified t-order n (checked; order_error otherwise).
// Constructive filtration iteration; terminates in <= M steps.
DivisionResult weierstrass_divide(const Tps& f, const Tps& g, int n);
DivisionResult weierstrass_divide(const Tps& f, const Tps& g); // n inferred

// f = q * v exactly at truncation, q monic of degree n with lower
// coefficients in the parameter ideal, v a unit.
struct Preparation {
    MonicPoly q;
    Tps v;
    int n = 0;
};
Preparation weierstrass_prepare(const Tps& f);

// alpha_d: (q, u) -> q*u; inversion is Weierstrass preparation.
Tps alpha_map(const MonicPoly& q, const Tps& u);
Preparation alpha_invert(const Tps& y, int d);

// beta_d: (q, v, xi) -> (q, v + q*xi); inversion is Weierstrass division.
std::pair<MonicPoly, Tps> beta_map(const MonicPoly& q, const BoundedPoly& v, const Tps& xi);
struct BetaInverse {
    BoundedPoly v;
    Tps xi;
    int xi_certified = 0;
};
BetaInverse beta_invert(const MonicPoly& q, const Tps& z);

// Independent cross-check: solve g = b*f + r as a field-linear system,
// unknowns b (truncation N-n) and r (degree < n) expanded over the
// parameter-monomial basis. Requires parameter-only coefficient rings.
struct DivisionOracleResult {
    Tps b_low; // truncation N-n
    BoundedPoly r;
    bool unique = false; // kernel of the linear system is trivial
};
DivisionOracleResult division_linear_solve(const Tps& f, const Tps& g, int n);

// True when no quotient b at truncation N-n satisfies g = b*f + r_fixed.
bool division_infeasible_with_remainder(const Tps& f, const Tps& g, const BoundedPoly& r_fixed,
                                        int n);

} // namespace arckit
