#include "arckit/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "arckit/enumerate.hpp"
#include "arckit/errors.hpp"
#include "arckit/linalg.hpp"

namespace arckit {

std::string level_var_name(const std::string& coord, int k) {
    return coord + std::to_string(k);
}

SchemePresentation base_presentation(const SpecialCI& X) {
    return affine_presentation(X.ring, X.f);
}

SchemePresentation jet_presentation(const SchemePresentation& base, int j) {
    base.validate();
    if (j < 0) throw parameter_error("jet level must be >= 0");
    if (base.ring->n_params() != 0)
        throw std::invalid_argument("jets require a parameter-free ring");
    const int m = base.ring->nvars();
    std::vector<std::string> names;
    std::vector<PresVar> pvars;
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= j; ++k) {
            names.push_back(level_var_name(base.ring->var_name(i), k));
            pvars.push_back(PresVar{names.back(), base.ring->var_name(i), k, "arc", false});
        }
    RingPtr jr = PolyRing::make(base.ring->field(), names);
    std::vector<Tps> arcs;
    for (int i = 0; i < m; ++i) {
        std::vector<Poly> c;
        for (int k = 0; k <= j; ++k)
            c.push_back(Poly::var(jr, names[(size_t)(i * (j + 1) + k)]));
        arcs.push_back(Tps::from_coeffs(jr, std::move(c)));
    }
    SchemePresentation J;
    J.ring = jr;
    J.vars = std::move(pvars);
    int row = 0;
    for (const auto& e : base.eqs) {
        Tps E = eval_tps(e.p, arcs);
        for (int k = 0; k <= j; ++k) J.eqs.push_back(PresEq{"jet", row, k, E.coeff(k)});
        ++row;
    }
    std::vector<Poly> lvl0;
    for (int i = 0; i < m; ++i)
        lvl0.push_back(Poly::var(jr, level_var_name(base.ring->var_name(i), 0)));
    for (const auto& g : base.inverted) J.inverted.push_back(g.subst(jr, lvl0));
    J.validate();
    return J;
}

SchemePresentation jet_presentation(const SpecialCI& X, int j) {
    return jet_presentation(base_presentation(X), j);
}

SchemePresentation stratum_presentation(const SpecialCI& X, int d) {
    if (d < 0) throw parameter_error("stratum depth must be >= 0");
    const int T = 2 * d + 1; // coefficient window of the presentation
    const int m = X.m;
    std::vector<std::string> names;
    std::vector<PresVar> pvars;
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < T; ++k) {
            names.push_back(level_var_name(X.ring->var_name(i), k));
            pvars.push_back(PresVar{names.back(), X.ring->var_name(i), k, "arc", false});
        }
    RingPtr r = PolyRing::make(X.ring->field(), names);
    std::vector<Tps> arcs;
    for (int i = 0; i < m; ++i) {
        std::vector<Poly> c;
        for (int k = 0; k < T; ++k)
            c.push_back(Poly::var(r, names[(size_t)(i * T + k)]));
        arcs.push_back(Tps::from_coeffs(r, std::move(c)));
    }
    JacobianData J = jacobian_package(X);
    SchemePresentation P;
    P.ring = r;
    P.vars = std::move(pvars);
    for (int i = 0; i < X.n; ++i) {
        Tps Fi = eval_tps(X.f[(size_t)i], arcs);
        for (int k = 0; k < T; ++k) P.eqs.push_back(PresEq{"jet", i, k, Fi.coeff(k)});
    }
    Tps Psi = eval_tps(J.psi, arcs);
    for (int k = 0; k < d; ++k) P.eqs.push_back(PresEq{"ord", 0, k, Psi.coeff(k)});
    P.inverted.push_back(Psi.coeff(d));
    for (int xi : X.x_idx()) P.tails.push_back(TailMark{X.ring->var_name(xi), T});
    P.validate();
    return P;
}

SchemePresentation n1_presentation(const SpecialCI& X, int N, int d) {
    if (N < 1) throw parameter_error("n1 presentation needs N >= 1");
    if (d < 0 || d >= N) throw parameter_error("n1 presentation needs 0 <= d < N");
    const int m = X.m, n = X.n;
    const int W = std::max(0, N - (2 * d + 1)); // witness coefficients per row
    std::vector<std::string> names;
    std::vector<PresVar> pvars;
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < N; ++k) {
            names.push_back(level_var_name(X.ring->var_name(i), k));
            pvars.push_back(PresVar{names.back(), X.ring->var_name(i), k, "arc", false});
        }
    for (int i = 1; i <= n; ++i)
        for (int k = 0; k < W; ++k) {
            names.push_back("h" + std::to_string(i) + "_" + std::to_string(k));
            pvars.push_back(PresVar{names.back(), "", k, "witness", false});
        }
    RingPtr r = PolyRing::make(X.ring->field(), names);
    std::vector<Tps> arcs;
    for (int i = 0; i < m; ++i) {
        std::vector<Poly> c;
        for (int k = 0; k < N; ++k)
            c.push_back(Poly::var(r, names[(size_t)(i * N + k)]));
        arcs.push_back(Tps::from_coeffs(r, std::move(c)));
    }
    JacobianData J = jacobian_package(X);
    // a_i = (adjugate * f)_i over the ambient ring
    std::vector<Poly> a;
    for (int i = 0; i < n; ++i) {
        Poly s = Poly::zero(X.ring);
        for (int j = 0; j < n; ++j) s = s + J.phi_adj.at(i, j) * X.f[(size_t)j];
        a.push_back(std::move(s));
    }
    Tps Psi = eval_tps(J.psi, arcs);
    Tps C = (Psi * Psi).shifted_up(1); // t * psi^2
    SchemePresentation P;
    P.ring = r;
    P.vars = std::move(pvars);
    for (int i = 0; i < n; ++i) {
        std::vector<Poly> hc(
            (size_t)N, Poly::zero(r));
        for (int k = 0; k < W; ++k)
            hc[(size_t)k] =
                Poly::var(r, "h" + std::to_string(i + 1) + "_" + std::to_string(k));
        Tps H = Tps::from_coeffs(r, std::move(hc));
        Tps E = eval_tps(a[(size_t)i], arcs) - C * H;
        for (int k = 0; k < N; ++k) P.eqs.push_back(PresEq{"cong", i, k, E.coeff(k)});
    }
    for (int k = 0; k < d; ++k) P.eqs.push_back(PresEq{"ord", 0, k, Psi.coeff(k)});
    P.inverted.push_back(Psi.coeff(d));
    P.validate();
    return P;
}

namespace {

// Homogeneous pieces of g(x + w) by total w-degree, with one fresh w
// variable per source variable. piece[k][i] is homogeneous of degree k in
// the w block; sum_k piece[k][i] == g_i(x + w).
struct ShiftPieces {
    RingPtr ext;
    int src_n = 0;
    std::vector<std::vector<Poly>> piece;
};

ShiftPieces full_shift_pieces(const RingPtr& src, const std::vector<Poly>& g) {
    ShiftPieces out;
    out.src_n = src->nvars();
    std::vector<std::string> names = src->var_names();
    std::vector<std::string> wnames;
    for (int i = 0; i < src->nvars(); ++i) {
        std::string w = "w" + std::to_string(i + 1);
        while (src->var_index(w) >= 0) w += "_";
        wnames.push_back(w);
        names.push_back(w);
    }
    out.ext = PolyRing::make(src->field(), names);
    std::vector<Poly> images;
    for (int i = 0; i < src->nvars(); ++i)
        images.push_back(Poly::var(out.ext, names[(size_t)i]) +
                         Poly::var(out.ext, wnames[(size_t)i]));
    for (size_t gi = 0; gi < g.size(); ++gi) {
        check_same_ring(g[gi].ring(), src);
        Poly shifted = g[gi].subst(out.ext, images);
        for (const auto& [mono, coef] : shifted.terms()) {
            int wdeg = 0;
            for (int i = 0; i < src->nvars(); ++i) wdeg += mono.e[(size_t)(src->nvars() + i)];
            while ((int)out.piece.size() <= wdeg)
                out.piece.emplace_back(g.size(), Poly::zero(out.ext));
            out.piece[(size_t)wdeg][gi].add_term(mono, coef);
        }
    }
    if (out.piece.empty()) out.piece.emplace_back(g.size(), Poly::zero(out.ext));
    return out;
}

TaylorSplit taylor_split_shifted(const std::vector<Poly>& g, const std::vector<int>& tshift,
                                 const MonicPoly& q, const std::vector<BoundedPoly>& xbar,
                                 const std::vector<Tps>& xi, int N) {
    if (g.empty()) throw std::invalid_argument("taylor_split: empty input");
    RingPtr src = g[0].ring();
    if (src->n_params() != 0)
        throw std::invalid_argument("taylor_split: source equations must be parameter-free");
    const RingPtr& R = q.ring;
    const int m = src->nvars();
    if ((int)xbar.size() != m || (int)xi.size() != m)
        throw std::invalid_argument("taylor_split: block sizes must match source variables");
    if (N < 1) throw parameter_error("taylor_split: N >= 1");
    for (const auto& xb : xbar) {
        check_same_ring(xb.ring, R);
        if (xb.d != q.d + 1)
            throw std::invalid_argument("taylor_split: xbar degree bound must be d+1");
    }
    for (const auto& s : xi) {
        check_same_ring(s.ring(), R);
        if (s.trunc() != N) throw context_error("taylor_split: xi truncation must equal N");
    }
    TPoly tq = q.to_tpoly().shifted_up(1);
    Tps tq_tps = tq.to_tps(N);
    ShiftPieces SP = full_shift_pieces(src, g);
    std::vector<Tps> ext_images;
    for (int i = 0; i < m; ++i) ext_images.push_back(xbar[(size_t)i].to_tps(N));
    for (int i = 0; i < m; ++i) ext_images.push_back(xi[(size_t)i]);
    std::vector<Tps> shifted_args;
    for (int i = 0; i < m; ++i)
        shifted_args.push_back(xbar[(size_t)i].to_tps(N) + tq_tps * xi[(size_t)i]);
    std::vector<TPoly> xbar_tp;
    for (int i = 0; i < m; ++i) xbar_tp.push_back(xbar[(size_t)i].to_tpoly());

    TaylorSplit out;
    for (size_t gi = 0; gi < g.size(); ++gi) {
        TPoly G = eval_tpoly(g[gi], xbar_tp).shifted_up(tshift[gi]);
        auto dm = G.divmod_monic(tq);
        Tps extra = Tps::zero(R, N);
        Tps tq_pow = Tps::one(R, N);
        for (size_t k = 1; k < SP.piece.size(); ++k) {
            const Poly& pk = SP.piece[k][gi];
            if (!pk.is_zero()) extra = extra + tq_pow * eval_tps(pk, ext_images);
            tq_pow = tq_pow * tq_tps;
        }
        Tps prime = dm.quot.to_tps(N) + extra.shifted_up(tshift[gi]);
        Tps lhs = eval_tps(g[gi], shifted_args).shifted_up(tshift[gi]);
        Tps rhs = dm.rem.to_tps(N) + tq_tps * prime;
        if (!(lhs == rhs)) throw std::logic_error("taylor_split: split identity failed");
        out.bar.push_back(dm.rem);
        out.prime.push_back(prime);
    }
    return out;
}

} // namespace

TaylorSplit taylor_split(const std::vector<Poly>& g, const MonicPoly& q,
                         const std::vector<BoundedPoly>& xbar, const std::vector<Tps>& xi,
                         int N) {
    return taylor_split_shifted(g, std::vector<int>(g.size(), 0), q, xbar, xi, N);
}

N2dData n2d_presentation(const SpecialCI& X, int d, int N) {
    if (d < 1) throw parameter_error("model chart needs d >= 1");
    if (N < d + 1) throw parameter_error("model chart needs N >= d+1");
    const int m = X.m, n = X.n;
    const Field& F = X.ring->field();
    std::vector<std::string> names;
    std::vector<PresVar> pv;
    auto push = [&](const std::string& nm, const std::string& coord, int te,
                    const std::string& role, bool tail) {
        names.push_back(nm);
        pv.push_back(PresVar{nm, coord, te, role, tail});
    };
    for (int k = 0; k < d; ++k) push("q" + std::to_string(k), "", k, "q", false);
    for (int k = 0; k < N; ++k) push("u" + std::to_string(k), "", k, "unit", k >= 1);
    for (int i = 0; i < m; ++i) {
        const std::string& c = X.ring->var_name(i);
        for (int k = 0; k <= d; ++k)
            push("xb_" + c + "_" + std::to_string(k), c, k, "xbar", false);
    }
    for (int i = 0; i < m; ++i) {
        const std::string& c = X.ring->var_name(i);
        for (int k = 0; k < N; ++k)
            push("xi_" + c + "_" + std::to_string(k), c, k, "xi", true);
    }
    for (int i = 1; i <= n; ++i)
        for (int k = 0; k < N; ++k)
            push("nu" + std::to_string(i) + "_" + std::to_string(k), "", k, "nu", true);
    RingPtr R = PolyRing::make(F, names);

    std::vector<Poly> qc;
    for (int k = 0; k < d; ++k) qc.push_back(Poly::var(R, "q" + std::to_string(k)));
    MonicPoly q = MonicPoly::from_coeffs(R, std::move(qc));
    std::vector<Poly> uc;
    for (int k = 0; k < N; ++k) uc.push_back(Poly::var(R, "u" + std::to_string(k)));
    Tps u = Tps::from_coeffs(R, uc);
    std::vector<Poly> upc(uc.begin() + 1, uc.end());
    upc.push_back(Poly::zero(R));
    Tps uprime = Tps::from_coeffs(R, std::move(upc)); // u = u0 + t*uprime
    std::vector<BoundedPoly> xbar;
    std::vector<Tps> xi;
    for (int i = 0; i < m; ++i) {
        const std::string& c = X.ring->var_name(i);
        std::vector<Poly> bc, sc;
        for (int k = 0; k <= d; ++k) bc.push_back(Poly::var(R, "xb_" + c + "_" + std::to_string(k)));
        for (int k = 0; k < N; ++k) sc.push_back(Poly::var(R, "xi_" + c + "_" + std::to_string(k)));
        xbar.push_back(BoundedPoly::from_coeffs(R, std::move(bc)));
        xi.push_back(Tps::from_coeffs(R, std::move(sc)));
    }
    std::vector<Tps> nu;
    for (int i = 1; i <= n; ++i) {
        std::vector<Poly> nc;
        for (int k = 0; k < N; ++k)
            nc.push_back(Poly::var(R, "nu" + std::to_string(i) + "_" + std::to_string(k)));
        nu.push_back(Tps::from_coeffs(R, std::move(nc)));
    }

    JacobianData J = jacobian_package(X);
    std::vector<Poly> gs; // a_1..a_n, then psi^2 (the latter carries a t factor)
    std::vector<int> shifts;
    for (int i = 0; i < n; ++i) {
        Poly s = Poly::zero(X.ring);
        for (int j = 0; j < n; ++j) s = s + J.phi_adj.at(i, j) * X.f[(size_t)j];
        gs.push_back(std::move(s));
        shifts.push_back(0);
    }
    gs.push_back(J.psi * J.psi);
    shifts.push_back(1);
    TaylorSplit SP = taylor_split_shifted(gs, shifts, q, xbar, xi, N);

    Tps tq_tps = q.to_tpoly().shifted_up(1).to_tps(N);
    Tps q_tps = q.to_tps(N);
    N2dData out;
    SchemePresentation& P = out.pres;
    P.ring = R;
    P.vars = std::move(pv);
    std::vector<Tps> shifted_args;
    for (int i = 0; i < m; ++i) shifted_args.push_back(xbar[(size_t)i].to_tps(N) + tq_tps * xi[(size_t)i]);
    for (int i = 0; i < n; ++i) {
        Tps lhs = SP.bar[(size_t)i].to_tps(N) + tq_tps * (SP.prime[(size_t)i] - u * nu[(size_t)i]);
        out.lhs_a.push_back(eval_tps(gs[(size_t)i], shifted_args));
        out.rhs_a.push_back((u * q_tps * nu[(size_t)i]).shifted_up(1));
        if (!(lhs == out.lhs_a.back() - out.rhs_a.back()))
            throw std::logic_error("model chart: row equations do not reassemble");
        for (int k = 0; k < N; ++k) P.eqs.push_back(PresEq{"cof", i, k, lhs.coeff(k)});
    }
    Poly u0 = Poly::var(R, "u0");
    TPoly cb = SP.bar[(size_t)n] - q.to_tpoly().scale(u0);
    Tps det = cb.to_tps(N) + tq_tps * (SP.prime[(size_t)n] - uprime);
    out.lhs_c = eval_tps(gs[(size_t)n], shifted_args).shifted_up(1);
    out.rhs_c = u * q_tps;
    if (!(det == out.lhs_c - out.rhs_c))
        throw std::logic_error("model chart: determinant equation does not reassemble");
    for (int k = 0; k < N; ++k) P.eqs.push_back(PresEq{"det2", 0, k, det.coeff(k)});
    P.inverted.push_back(u0);
    P.validate();
    return out;
}

SchemePresentation s_d_presentation(const Field& F, int d, int n_eqs, int K) {
    if (d < 1) throw parameter_error("section space needs d >= 1");
    if (n_eqs < 1) throw parameter_error("section space needs at least one copy");
    if (K < 0) throw parameter_error("section space needs K >= 0");
    std::vector<std::string> names;
    std::vector<PresVar> pv;
    auto push = [&](const std::string& nm, int te, const std::string& role) {
        names.push_back(nm);
        pv.push_back(PresVar{nm, "", te, role, false});
    };
    if (d == 1)
        push("a", 0, "q");
    else
        for (int k = 0; k < d; ++k) push("q" + std::to_string(k), k, "q");
    std::vector<std::vector<std::string>> vnames(static_cast<size_t>(n_eqs));
    std::vector<std::vector<std::string>> xinames(static_cast<size_t>(n_eqs));
    for (int c = 0; c < n_eqs; ++c) {
        std::string suf = n_eqs == 1 ? "" : std::to_string(c + 1);
        if (d == 1) {
            vnames[(size_t)c].push_back("v" + suf);
            push(vnames[(size_t)c].back(), 0, "model");
        } else {
            for (int k = 0; k < d; ++k) {
                vnames[(size_t)c].push_back("v" + suf + "_" + std::to_string(k));
                push(vnames[(size_t)c].back(), k, "model");
            }
        }
        for (int k = 0; k <= K; ++k) {
            xinames[(size_t)c].push_back("xi" + suf + (suf.empty() ? "" : "_") +
                                         std::to_string(k));
            push(xinames[(size_t)c].back(), k, "xi");
        }
    }
    RingPtr R = PolyRing::make(F, names);
    const int T = K + 1;
    Tps qs = Tps::t_power(R, d, T);
    if (d == 1)
        qs.set_coeff(0, Poly::var(R, "a"));
    else
        for (int k = 0; k < d && k < T; ++k) qs.set_coeff(k, Poly::var(R, "q" + std::to_string(k)));
    SchemePresentation P;
    P.ring = R;
    P.vars = std::move(pv);
    for (int c = 0; c < n_eqs; ++c) {
        Tps v = Tps::zero(R, T);
        for (int k = 0; k < (int)vnames[(size_t)c].size() && k < T; ++k)
            v.set_coeff(k, Poly::var(R, vnames[(size_t)c][(size_t)k]));
        std::vector<Poly> xc;
        for (int k = 0; k <= K; ++k) xc.push_back(Poly::var(R, xinames[(size_t)c][(size_t)k]));
        Tps xs = Tps::from_coeffs(R, std::move(xc));
        Tps E = v + qs * xs;
        for (int k = 0; k < T; ++k) P.eqs.push_back(PresEq{"sec", c, k, E.coeff(k)});
    }
    P.validate();
    return P;
}

RankReport rank_at_point(const SchemePresentation& P, const std::vector<FieldElem>& point) {
    P.validate();
    const Field& F = P.ring->field();
    if ((int)point.size() != P.ring->nvars())
        throw std::invalid_argument("rank_at_point: dimension mismatch");
    for (const auto& e : P.eqs)
        if (!fe_is_zero(F, e.p.eval_point(point)))
            throw std::invalid_argument("rank_at_point: point does not satisfy the equations");
    for (const auto& g : P.inverted)
        if (fe_is_zero(F, g.eval_point(point)))
            throw std::invalid_argument("rank_at_point: point kills an inverted element");
    FMat jac;
    for (const auto& e : P.eqs) {
        FVec row;
        for (int v = 0; v < P.ring->nvars(); ++v)
            row.push_back(e.p.derivative(v).eval_point(point));
        jac.push_back(std::move(row));
    }
    RankReport rep;
    rep.eq_count = (int)P.eqs.size();
    rep.rank = jac.empty() ? 0 : linalg_rank(F, jac);
    rep.certified_smooth = rep.rank == rep.eq_count;
    return rep;
}

ChartReport smooth_chart_product_check(const SchemePresentation& chart,
                                       const std::vector<std::string>& etale_coords, int j,
                                       int q, long long budget) {
    chart.validate();
    if (j < 0) throw parameter_error("jet level must be >= 0");
    const Field& F = chart.ring->field();
    if (F.is_rational() || (long)F.characteristic() != (long)q)
        throw parameter_error("chart must be presented over F_q with prime q");
    for (const auto& nm : etale_coords) chart.ring->var_index_checked(nm);
    const int m = chart.ring->nvars();
    SchemePresentation J = jet_presentation(chart, j);
    ChartReport rep;
    rep.expected_fiber = 1;
    for (int i = 0; i < (int)etale_coords.size() * j; ++i) rep.expected_fiber *= q;
    std::map<std::vector<int>, ChartFiber> bypoint;
    enumerate_points(chart, q, budget, [&](const std::vector<int>& pt) {
        ChartFiber cf;
        cf.base_point = pt;
        std::vector<FieldElem> fpt;
        for (int c : pt) fpt.push_back(fe_from_long(F, c));
        cf.smooth_certified = rank_at_point(chart, fpt).certified_smooth;
        bypoint[pt] = cf;
    });
    enumerate_points(J, q, budget, [&](const std::vector<int>& pt) {
        std::vector<int> key((size_t)m);
        for (int i = 0; i < m; ++i) key[(size_t)i] = pt[(size_t)(i * (j + 1))];
        auto it = bypoint.find(key);
        if (it == bypoint.end())
            throw std::logic_error("jet point lies over a chart non-point");
        it->second.fiber += 1;
    });
    rep.all_smooth = true;
    rep.fibers_match = true;
    for (auto& [key, cf] : bypoint) {
        (void)key;
        rep.records.push_back(cf);
        if (!cf.smooth_certified) rep.all_smooth = false;
        if (cf.fiber != rep.expected_fiber) rep.fibers_match = false;
    }
    rep.base_count = (long long)bypoint.size();
    rep.pass = rep.all_smooth && rep.fibers_match;
    return rep;
}

} // namespace arckit
