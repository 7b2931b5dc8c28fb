#include "arckit/lifting.hpp"

#include <algorithm>
#include <stdexcept>

#include "arckit/errors.hpp"
#include "arckit/taylor.hpp"
#include "arckit/weierstrass.hpp"

namespace arckit {

std::vector<Tps> tadic_fixed_point_vec(
    const std::function<std::vector<Tps>(const std::vector<Tps>&)>& h,
    const std::vector<Tps>& nu1, int N) {
    if (nu1.empty()) throw std::invalid_argument("fixed point: empty system");
    for (const auto& s : nu1)
        if (s.trunc() != N) throw context_error("fixed point: nu1 truncation mismatch");
    std::vector<Tps> nu = nu1;
    for (int it = 0; it < N; ++it) {
        std::vector<Tps> hv = h(nu);
        if (hv.size() != nu.size()) throw std::logic_error("fixed point: component count changed");
        std::vector<Tps> next;
        next.reserve(nu.size());
        for (size_t i = 0; i < nu.size(); ++i)
            next.push_back(nu1[i] - hv[i].shifted_up(1));
        bool stable = next == nu;
        nu = std::move(next);
        if (stable) break;
    }
    std::vector<Tps> hv = h(nu);
    for (size_t i = 0; i < nu.size(); ++i)
        if (!(nu[i] + hv[i].shifted_up(1) == nu1[i]))
            throw std::logic_error("fixed point: iteration did not converge");
    return nu;
}

Tps tadic_fixed_point(const std::function<Tps(const Tps&)>& h, const Tps& nu1, int N) {
    auto vec = tadic_fixed_point_vec(
        [&](const std::vector<Tps>& v) { return std::vector<Tps>{h(v[0])}; },
        std::vector<Tps>{nu1}, N);
    return vec[0];
}

Tps tadic_fixed_point(const Poly& h, const Tps& nu1, int N) {
    if (!h.ring() || h.ring()->nvars() != 1 || h.ring()->n_params() != 0)
        throw std::invalid_argument("fixed point: h must be a one-variable polynomial");
    return tadic_fixed_point([&](const Tps& v) { return eval_tps(h, {v}); }, nu1, N);
}

Tps tadic_fixed_point_ladder(const std::function<Tps(const Tps&)>& h, const Tps& nu1, int N) {
    if (nu1.trunc() != N) throw context_error("fixed point ladder: truncation mismatch");
    Tps nu = Tps::zero(nu1.ring(), N);
    for (int j = 0; j < N; ++j) {
        Poly c = nu1.coeff(j);
        if (j >= 1) c = c - h(nu).coeff(j - 1);
        nu.set_coeff(j, c);
    }
    return nu;
}

CramerResult cramer_image_test(const Mat<Tps>& phi, const std::vector<Tps>& u, int d) {
    if (phi.rows() < 1 || phi.rows() != phi.cols())
        throw std::invalid_argument("image test: square nonempty matrix required");
    if ((int)u.size() != phi.rows())
        throw std::invalid_argument("image test: vector length mismatch");
    const Tps& probe = phi.at(0, 0);
    RingPtr R = probe.ring();
    const int N = probe.trunc();
    Tps zero = Tps::zero(R, N), one = Tps::one(R, N);
    Tps psi = mat_det(phi, zero);
    auto ord = psi.t_order_reduced();
    if (!ord || *ord != d)
        throw order_error("image test: determinant order is not the certified d");
    Mat<Tps> adj = mat_adjugate(phi, zero, one);
    std::vector<Tps> v = mat_apply(adj, u, zero);
    CramerResult out;
    out.certified = N - d;
    for (int i = 0; i < (int)u.size(); ++i) {
        DivisionResult dr = weierstrass_divide(psi, v[(size_t)i], d);
        if (!dr.r.is_zero())
            throw obstruction_error("image test: component " + std::to_string(i) +
                                    " is not in the image (remainder " + dr.r.to_tpoly().str() +
                                    ")");
        out.nu.push_back(dr.b.truncated(N - d));
    }
    std::vector<Tps> nu_ext;
    for (const auto& s : out.nu) nu_ext.push_back(s.extended(N));
    std::vector<Tps> img = mat_apply(phi, nu_ext, zero);
    for (int i = 0; i < (int)u.size(); ++i)
        if (!(img[(size_t)i] - u[(size_t)i]).truncated(N - d).is_zero())
            throw std::logic_error("image test: solution certificate failed");
    return out;
}

namespace {

struct LiftContext {
    int W = 0;  // working truncation
    int Nv = 0; // working truncation of the correction
    int L = 0;  // reported truncation N - (2d+1)
    std::vector<Tps> arcsW;
    Mat<Tps> adjX;
    Tps psiX;
};

LiftContext lift_setup(const SpecialCI& X, const std::vector<TPoly>& xbar, int d, int N,
                       const JacobianData& J) {
    if (d < 0) throw parameter_error("lift: d must be >= 0");
    if (N < 2 * d + 2) throw parameter_error("lift: need N >= 2d+2");
    if ((int)xbar.size() != X.m)
        throw std::invalid_argument("lift: one arc polynomial per coordinate required");
    RingPtr R = xbar[0].ring();
    if (!R) throw std::invalid_argument("lift: arc coordinates need a coefficient ring");
    for (const auto& c : xbar) {
        check_same_ring(c.ring(), R);
        if (c.degree() > 2 * d)
            throw std::invalid_argument("lift: arc window degree exceeds 2d");
    }
    for (int i = 0; i < X.n; ++i) {
        TPoly Fi = eval_tpoly(X.f[(size_t)i], xbar);
        for (int k = 0; k <= 2 * d; ++k)
            if (!Fi.coeff(k).is_zero())
                throw std::invalid_argument(
                    "lift: equations do not vanish to order 2d on the arc window");
    }
    {
        Tps psi_low = eval_tpoly(J.psi, xbar).to_tps(d + 1);
        auto ord = psi_low.t_order_reduced();
        if (!ord || *ord != d)
            throw order_error("lift: certificate order of psi on the window is not d");
    }
    LiftContext ctx;
    const int n = X.n;
    ctx.W = N + 3 * d + 1 + std::max(0, d * (n - 1) - (3 * d + 1));
    ctx.Nv = ctx.W - (3 * d + 1);
    ctx.L = N - (2 * d + 1);
    for (const auto& c : xbar) ctx.arcsW.push_back(c.to_tps(ctx.W));
    Tps zeroW = Tps::zero(R, ctx.W);
    ctx.adjX = Mat<Tps>(n, n, zeroW);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ctx.adjX.at(i, j) = eval_tps(J.phi_adj.at(i, j), ctx.arcsW);
    ctx.psiX = eval_tps(J.psi, ctx.arcsW);
    return ctx;
}

// Exact final certificate: f(xbar + t^{2d+1} nu on the distinguished block)
// vanishes through t^{N-1} as an exact polynomial identity.
void lift_certificate(const SpecialCI& X, const std::vector<TPoly>& xbar,
                      const std::vector<Tps>& nu, int d, int N) {
    std::vector<TPoly> images = xbar;
    for (int i = 0; i < X.n; ++i) {
        int pos = X.y_idx[(size_t)i];
        images[(size_t)pos] =
            images[(size_t)pos] + TPoly::from_tps(nu[(size_t)i]).shifted_up(2 * d + 1);
    }
    for (int i = 0; i < X.n; ++i) {
        TPoly Fi = eval_tpoly(X.f[(size_t)i], images);
        for (int k = 0; k < N; ++k)
            if (!Fi.coeff(k).is_zero())
                throw std::logic_error("lift: exact residual certificate failed");
    }
}

} // namespace

LiftReport lift_stratum_point(const SpecialCI& X, const std::vector<TPoly>& xbar, int d, int N) {
    JacobianData J = jacobian_package(X);
    LiftContext ctx = lift_setup(X, xbar, d, N, J);
    RingPtr R = xbar[0].ring();
    const int n = X.n;
    Tps zeroW = Tps::zero(R, ctx.W);
    std::vector<Tps> nu((size_t)n, Tps::zero(R, ctx.Nv));
    LiftReport rep;
    rep.certified = ctx.L;
    const int max_iter = ctx.Nv / (d + 1) + 3;
    for (int it = 0; it < max_iter; ++it) {
        // rest(nu) = adj * ( f(xbar) + sum_{j>=2} pieces of the shifted block )
        std::vector<Tps> dir;
        for (int i = 0; i < n; ++i)
            dir.push_back(nu[(size_t)i].extended(ctx.W).shifted_up(2 * d + 1));
        auto groups = taylor_expand(X, ctx.arcsW, dir);
        std::vector<Tps> tot((size_t)n, zeroW);
        for (size_t k = 0; k < groups.size(); ++k) {
            if (k == 1) continue; // the linear term is the unknown side
            for (int i = 0; i < n; ++i) tot[(size_t)i] = tot[(size_t)i] + groups[k][(size_t)i];
        }
        std::vector<Tps> rest = mat_apply(ctx.adjX, tot, zeroW);
        std::vector<Tps> next;
        for (int i = 0; i < n; ++i) {
            // solve t^{2d+1} * psi * nu_i = -rest_i
            DivisionResult dr = weierstrass_divide(ctx.psiX, -rest[(size_t)i], d);
            if (!dr.r.is_zero())
                throw obstruction_error("lift: component " + std::to_string(i) +
                                        " is blocked (certificate remainder " +
                                        dr.r.to_tpoly().str() + ")");
            for (int k = 0; k <= 2 * d; ++k)
                if (!dr.b.coeff(k).is_zero())
                    throw obstruction_error("lift: component " + std::to_string(i) +
                                            " is blocked at t-coefficient " + std::to_string(k) +
                                            " of the quotient");
            next.push_back(dr.b.shifted_down(2 * d + 1).truncated(ctx.Nv));
        }
        ++rep.iterations;
        bool stable = next == nu;
        nu = std::move(next);
        if (stable) break;
        if (it == max_iter - 1) throw std::logic_error("lift: iteration did not stabilize");
    }
    for (const auto& s : nu) rep.nu.push_back(s.truncated(ctx.L));
    lift_certificate(X, xbar, rep.nu, d, N);
    return rep;
}

std::vector<Tps> lift_digit_ladder(const SpecialCI& X, const std::vector<TPoly>& xbar, int d,
                                   int N) {
    JacobianData J = jacobian_package(X);
    LiftContext ctx = lift_setup(X, xbar, d, N, J);
    RingPtr R = xbar[0].ring();
    const int n = X.n;
    Tps zeroW = Tps::zero(R, ctx.W);
    Poly U0inv = ctx.psiX.coeff(d).unit_inverse();
    // residual E(nu) = adj(xbar) * f(xbar + t^{2d+1} nu), evaluated directly
    auto resid = [&](const std::vector<Tps>& v) {
        std::vector<Tps> images = ctx.arcsW;
        for (int i = 0; i < n; ++i) {
            int pos = X.y_idx[(size_t)i];
            images[(size_t)pos] =
                images[(size_t)pos] + v[(size_t)i].extended(ctx.W).shifted_up(2 * d + 1);
        }
        std::vector<Tps> fv;
        for (int i = 0; i < n; ++i) fv.push_back(eval_tps(X.f[(size_t)i], images));
        return mat_apply(ctx.adjX, fv, zeroW);
    };
    std::vector<Tps> nu((size_t)n, Tps::zero(R, ctx.Nv));
    const int max_sweeps = std::max(1, R->nilpotency()) * (ctx.Nv + 2) + 4;
    for (int s = 0; s < max_sweeps; ++s) {
        std::vector<Tps> E = resid(nu);
        bool done = true;
        for (const auto& e : E)
            if (!e.is_zero()) done = false;
        if (done) break;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < ctx.Nv; ++j) {
                Poly c = E[(size_t)i].coeff(3 * d + 1 + j);
                if (c.is_zero()) continue;
                nu[(size_t)i].set_coeff(j, nu[(size_t)i].coeff(j) - c * U0inv);
            }
    }
    std::vector<Tps> E = resid(nu);
    for (const auto& e : E)
        if (!e.is_zero()) throw std::logic_error("lift ladder: sweeps did not converge");
    std::vector<Tps> out;
    for (const auto& s : nu) out.push_back(s.truncated(ctx.L));
    return out;
}

RoundTripReport n_to_n1_roundtrip(const SpecialCI& X, const std::vector<Tps>& x, int N) {
    if ((int)x.size() != X.m)
        throw std::invalid_argument("roundtrip: one series per coordinate required");
    RingPtr R = x[0].ring();
    for (const auto& s : x) {
        check_same_ring(s.ring(), R);
        if (s.trunc() != N) throw context_error("roundtrip: truncation mismatch");
    }
    JacobianData J = jacobian_package(X);
    const int n = X.n;
    Tps zeroN = Tps::zero(R, N);
    Tps psiX = eval_tps(J.psi, x);
    auto ord = psiX.t_order_reduced();
    if (!ord) throw order_error("roundtrip: psi(x) has undetermined order at this truncation");
    const int d = *ord;
    if (N < 2 * d + 2) throw parameter_error("roundtrip: need N >= 2d+2");
    Mat<Tps> adjX(n, n, zeroN);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) adjX.at(i, j) = eval_tps(J.phi_adj.at(i, j), x);
    std::vector<Tps> fv;
    for (int i = 0; i < n; ++i) fv.push_back(eval_tps(X.f[(size_t)i], x));
    std::vector<Tps> A = mat_apply(adjX, fv, zeroN);
    Tps C = (psiX * psiX).shifted_up(1); // t * psi^2, reduced order 2d+1
    const int L = N - (2 * d + 1);
    RoundTripReport rep;
    rep.d = d;
    rep.certified = L;
    for (int i = 0; i < n; ++i) {
        DivisionResult dr = weierstrass_divide(C, A[(size_t)i], 2 * d + 1);
        if (!dr.r.is_zero())
            throw obstruction_error("roundtrip: component " + std::to_string(i) +
                                    " lacks the divisibility witness (remainder " +
                                    dr.r.to_tpoly().str() + ")");
        rep.witness.push_back(dr.b.truncated(L));
    }
    // reverse direction: nu + t*H(nu) = -h with
    // H(nu) = sum_{j>=2} t^{j-2} psi^{j-2} (adj * piece_j(x; nu))
    std::vector<Tps> xL;
    for (const auto& s : x) xL.push_back(s.truncated(L));
    Tps psiL = psiX.truncated(L);
    Tps zeroL = Tps::zero(R, L);
    Mat<Tps> adjL(n, n, zeroL);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) adjL.at(i, j) = adjX.at(i, j).truncated(L);
    auto H = [&](const std::vector<Tps>& v) {
        auto groups = taylor_expand(X, xL, v);
        std::vector<Tps> out((size_t)n, zeroL);
        Tps fac = Tps::one(R, L); // (t*psi)^{j-2} as j advances
        for (size_t j = 2; j < groups.size(); ++j) {
            std::vector<Tps> term = mat_apply(adjL, groups[j], zeroL);
            for (int i = 0; i < n; ++i) out[(size_t)i] = out[(size_t)i] + fac * term[(size_t)i];
            fac = fac * psiL.shifted_up(1);
        }
        return out;
    };
    std::vector<Tps> nu1;
    for (const auto& h : rep.witness) nu1.push_back(-h);
    rep.nu = tadic_fixed_point_vec(H, nu1, L);
    // certificate: adj * f vanishes at truncation N on the corrected arc
    std::vector<Tps> images = x;
    for (int i = 0; i < n; ++i) {
        int pos = X.y_idx[(size_t)i];
        images[(size_t)pos] =
            images[(size_t)pos] + (psiX * rep.nu[(size_t)i].extended(N)).shifted_up(1);
    }
    std::vector<Tps> fcheck;
    for (int i = 0; i < n; ++i) fcheck.push_back(eval_tps(X.f[(size_t)i], images));
    std::vector<Tps> Rv = mat_apply(adjX, fcheck, zeroN);
    for (const auto& r : Rv)
        if (!r.is_zero()) throw std::logic_error("roundtrip: corrected arc certificate failed");
    return rep;
}

} // namespace arckit
