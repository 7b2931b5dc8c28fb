#pragma once
#include <functional>
#include <vector>

#include "arckit/matrix.hpp"
#include "arckit/special_ci.hpp"
#include "arckit/tpoly.hpp"
#include "arckit/tps.hpp"

namespace arckit {

// Solve nu + t*h(nu) = nu1 at truncation N by t-adic iteration. The callable
// must be truncation-preserving; the solution is certified by an exact
// fixed-point residual check at truncation N (logic_error otherwise).
Tps tadic_fixed_point(const std::function<Tps(const Tps&)>& h, const Tps& nu1, int N);
std::vector<Tps> tadic_fixed_point_vec(
    const std::function<std::vector<Tps>(const std::vector<Tps>&)>& h,
    const std::vector<Tps>& nu1, int N);
// h as a one-variable polynomial evaluated at the unknown.
Tps tadic_fixed_point(const Poly& h, const Tps& nu1, int N);

// Independent digit-by-digit solution of the same equation (oracle).
Tps tadic_fixed_point_ladder(const std::function<Tps(const Tps&)>& h, const Tps& nu1, int N);

// Solve phi * nu = u through the adjugate: divide each component of
// adj(phi) * u by det(phi) (certified reduced t-order d; order_error
// otherwise). A nonzero division remainder names the failing component in
// an obstruction_error. On success phi*nu - u vanishes at truncation N-d.
struct CramerResult {
    std::vector<Tps> nu; // truncation N - d
    int certified = 0;   // N - d
};
CramerResult cramer_image_test(const Mat<Tps>& phi, const std::vector<Tps>& u, int d);

// Lift a depth-d stratum point. xbar: exact arc window, one polynomial of
// degree <= 2d per coordinate, with f(xbar) == 0 mod t^{2d+1} exactly and
// psi(xbar) of reduced t-order d. Produces the distinguished-block
// correction nu (truncation N-2d-1) with f(xbar + t^{2d+1} nu) == 0 mod t^N,
// certified by an exact polynomial residual. Liftability can fail: the
// obstruction_error names the component and coefficient that block it.
struct LiftReport {
    std::vector<Tps> nu;
    int iterations = 0;
    int certified = 0; // N - 2d - 1
};
LiftReport lift_stratum_point(const SpecialCI& X, const std::vector<TPoly>& xbar, int d, int N);

// Digit-ladder oracle for the same lift (independent code path).
std::vector<Tps> lift_digit_ladder(const SpecialCI& X, const std::vector<TPoly>& xbar, int d,
                                   int N);

// Translate a witness-chart arc to deformation normal form and back.
// Forward: divide adj*f(x) by t*psi(x)^2 (remainders must vanish; the
// quotients are the witness h). Reverse: solve nu + t*H(nu) = -h by the
// t-adic fixed point; then f(x + t*psi(x)*nu on the distinguished block)
// vanishes at truncation N (checked; logic_error otherwise).
struct RoundTripReport {
    std::vector<Tps> witness; // h, truncation N - 2d - 1
    std::vector<Tps> nu;      // fixed-point solution, same truncation
    int d = 0;                // derived order of psi(x)
    int certified = 0;        // N - 2d - 1
};
RoundTripReport n_to_n1_roundtrip(const SpecialCI& X, const std::vector<Tps>& x, int N);

} // namespace arckit
