#pragma once
#include <string>
#include <vector>

#include "arckit/presentation.hpp"
#include "arckit/special_ci.hpp"
#include "arckit/weierstrass.hpp"

namespace arckit {

// Canonical name of the t^k coefficient variable of an arc coordinate.
std::string level_var_name(const std::string& coord, int k);

// The variety itself as a presentation (level-0 wrapper).
SchemePresentation base_presentation(const SpecialCI& X);

// Jets: one variable per coordinate and t-level 0..j; equations are the
// t-coefficients of the base equations evaluated on the universal truncated
// arc; inverted elements are taken at level 0.
SchemePresentation jet_presentation(const SchemePresentation& base, int j);
SchemePresentation jet_presentation(const SpecialCI& X, int j);

// Per-base-point record of the fiber check over F_q.
struct ChartFiber {
    std::vector<int> base_point; // element codes
    long long fiber = 0;
    bool smooth_certified = false;
};
struct ChartReport {
    bool pass = false;
    bool all_smooth = false;
    bool fibers_match = false;
    long long expected_fiber = 0;
    long long base_count = 0;
    std::vector<ChartFiber> records;
};

// On a smooth chart with the named coordinates etale, the level-(<=j) jets
// must fiber over the chart points with constant fiber q^(#etale * j).
// Verified by brute-force enumeration; q must be prime here (the rank
// certificate works over the prime field).
ChartReport smooth_chart_product_check(const SchemePresentation& chart,
                                       const std::vector<std::string>& etale_coords, int j,
                                       int q, long long budget);

// The depth-d stratum: equations of the (2d)-jet plus vanishing of the
// degeneracy certificate to order d with its t^d coefficient inverted.
// Coordinates outside the distinguished block are free from level 2d+1 on
// (recorded as tails).
SchemePresentation stratum_presentation(const SpecialCI& X, int d);

// Arc-space chart with a congruence witness: a full window of arc
// coefficients 0..N-1 plus witness variables h expressing that the adjugate
// image of the equations is divisible by t * psi^2.
SchemePresentation n1_presentation(const SpecialCI& X, int N, int d);

// Split g(xbar + t*q*xi) = gbar + t*q*gprime with gbar the exact Euclidean
// remainder mod t*q (degree <= d) and gprime a series at truncation N.
// The identity is asserted exactly at truncation N during construction.
struct TaylorSplit {
    std::vector<TPoly> bar;
    std::vector<Tps> prime;
};
TaylorSplit taylor_split(const std::vector<Poly>& g, const MonicPoly& q,
                         const std::vector<BoundedPoly>& xbar, const std::vector<Tps>& xi,
                         int N);

// Finite-dimensional model chart of the arc space at depth d: variables are
// the q-coefficients, a unit block u, the bounded arc xbar, and tail blocks
// xi, nu. Equations encode a_i(xbar + t*q*xi) = t*u*q*nu_i (tag "cof") and
// t*psi(xbar + t*q*xi)^2 = u*q (tag "det2"), coefficientwise to level N-1.
// The symbolic two sides are returned for independent re-checking.
struct N2dData {
    SchemePresentation pres;
    std::vector<Tps> lhs_a; // a_i(xbar + t q xi)
    std::vector<Tps> rhs_a; // t * u * q * nu_i
    Tps lhs_c;              // t * psi(xbar + t q xi)^2
    Tps rhs_c;              // u * q
};
N2dData n2d_presentation(const SpecialCI& X, int d, int N);

// The elementary section space: copies of v + q*xi = 0 read to t-level K,
// sharing one monic q of degree d. For d == 1 the q-coefficient is named a.
SchemePresentation s_d_presentation(const Field& F, int d, int n_eqs, int K);

// Jacobian rank of the presentation at a point on it (invalid_argument when
// the point does not satisfy the presentation). certified_smooth means the
// rank equals the number of equations.
struct RankReport {
    int rank = 0;
    int eq_count = 0;
    bool certified_smooth = false;
};
RankReport rank_at_point(const SchemePresentation& P, const std::vector<FieldElem>& point);

} // namespace arckit
