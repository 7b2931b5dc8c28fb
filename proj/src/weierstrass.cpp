#include "arckit/weierstrass.hpp"

#include <cassert>
#include <map>

#include "arckit/linalg.hpp"

namespace arckit {

MonicPoly MonicPoly::t_power(const RingPtr& r, int d) {
    MonicPoly q;
    q.ring = r;
    q.d = d;
    q.c.assign((size_t)d, Poly(r));
    return q;
}

MonicPoly MonicPoly::from_coeffs(RingPtr r, std::vector<Poly> lower) {
    MonicPoly q;
    q.ring = std::move(r);
    q.d = (int)lower.size();
    for (auto& p : lower) check_same_ring(p.ring(), q.ring);
    q.c = std::move(lower);
    return q;
}

TPoly MonicPoly::to_tpoly() const {
    std::vector<Poly> cs = c;
    cs.push_back(Poly::constant(ring, fe_one(ring->field())));
    return TPoly::from_coeffs(ring, std::move(cs));
}

Tps MonicPoly::to_tps(int N) const { return to_tpoly().to_tps(N); }

bool MonicPoly::lower_in_param_ideal() const {
    for (const auto& p : c)
        if (!p.in_param_ideal()) return false;
    return true;
}

bool MonicPoly::operator==(const MonicPoly& o) const {
    check_same_ring(ring, o.ring);
    if (d != o.d) return false;
    for (int k = 0; k < d; ++k)
        if (c[(size_t)k] != o.c[(size_t)k]) return false;
    return true;
}

BoundedPoly BoundedPoly::zero(const RingPtr& r, int d) {
    BoundedPoly b;
    b.ring = r;
    b.d = d;
    b.c.assign((size_t)d, Poly(r));
    return b;
}

BoundedPoly BoundedPoly::from_coeffs(RingPtr r, std::vector<Poly> coeffs) {
    BoundedPoly b;
    b.ring = std::move(r);
    b.d = (int)coeffs.size();
    for (auto& p : coeffs) check_same_ring(p.ring(), b.ring);
    b.c = std::move(coeffs);
    return b;
}

TPoly BoundedPoly::to_tpoly() const { return TPoly::from_coeffs(ring, c); }

Tps BoundedPoly::to_tps(int N) const { return to_tpoly().to_tps(N); }

bool BoundedPoly::is_zero() const {
    for (const auto& p : c)
        if (!p.is_zero()) return false;
    return true;
}

bool BoundedPoly::operator==(const BoundedPoly& o) const {
    check_same_ring(ring, o.ring);
    if (d != o.d) return false;
    for (int k = 0; k < d; ++k)
        if (c[(size_t)k] != o.c[(size_t)k]) return false;
    return true;
}

DivisionResult weierstrass_divide(const Tps& f, const Tps& g, int n) {
    check_same_ring(f.ring(), g.ring());
    if (f.trunc() != g.trunc())
        throw context_error("weierstrass_divide: mismatched truncations");
    const RingPtr& ring = f.ring();
    int N = f.trunc();
    auto ord = f.t_order_reduced();
    if (!ord)
        throw order_error("weierstrass_divide: t-order of the reduction is undetermined");
    if (*ord != n)
        throw order_error("weierstrass_divide: certified t-order " + std::to_string(*ord) +
                          " does not match requested degree " + std::to_string(n));
    if (n >= N)
        throw parameter_error("weierstrass_divide: need truncation N > n");
    int L = N - n;

    // split f = f_low + t^n * u, f_low of degree < n with nilpotent coefficients
    std::vector<Poly> low;
    for (int k = 0; k < n; ++k) {
        if (!f.coeff(k).in_param_ideal())
            throw order_error("weierstrass_divide: low coefficient not in the parameter ideal");
        low.push_back(f.coeff(k));
    }
    Tps f_low_tps = TPoly::from_coeffs(ring, low).to_tps(N);
    std::vector<Poly> ucs;
    for (int k = 0; k < L; ++k) ucs.push_back(f.coeff(n + k));
    Tps u = Tps::from_coeffs(ring, std::move(ucs));
    Tps u_inv = u.inverse();

    int M_eff = ring->n_params() > 0 ? ring->nilpotency() : 1;
    Tps b = Tps::zero(ring, L);
    Tps s = g;
    bool stable = false;
    for (int iter = 0; iter <= M_eff + 1; ++iter) {
        s = g - b.extended(N) * f_low_tps;
        std::vector<Poly> hi;
        for (int k = 0; k < L; ++k) hi.push_back(s.coeff(n + k));
        Tps b_new = u_inv * Tps::from_coeffs(ring, std::move(hi));
        if (b_new == b) {
            stable = true;
            break;
        }
        b = b_new;
    }
    if (!stable) throw std::logic_error("weierstrass_divide: filtration iteration did not stabilize");

    std::vector<Poly> rc;
    for (int k = 0; k < n; ++k) rc.push_back(s.coeff(k));
    DivisionResult out;
    out.n = n;
    out.b_certified = L;
    out.b = b.extended(N);
    out.r = BoundedPoly::from_coeffs(ring, std::move(rc));
    if (g != out.b * f + out.r.to_tps(N))
        throw std::logic_error("weierstrass_divide: division identity failed");
    return out;
}

DivisionResult weierstrass_divide(const Tps& f, const Tps& g) {
    auto ord = f.t_order_reduced();
    if (!ord)
        throw order_error("weierstrass_divide: t-order of the reduction is undetermined");
    return weierstrass_divide(f, g, *ord);
}

Preparation weierstrass_prepare(const Tps& f) {
    auto ord = f.t_order_reduced();
    if (!ord)
        throw order_error("weierstrass_prepare: t-order of the reduction is undetermined");
    int n = *ord;
    int N = f.trunc();
    const RingPtr& ring = f.ring();
    DivisionResult dv = weierstrass_divide(f, Tps::t_power(ring, n, N), n);
    std::vector<Poly> qc;
    for (int k = 0; k < n; ++k) {
        Poly ck = -dv.r.c[(size_t)k];
        if (!ck.in_param_ideal())
            throw std::logic_error("weierstrass_prepare: non-nilpotent lower coefficient");
        qc.push_back(ck);
    }
    Preparation out;
    out.n = n;
    out.q = MonicPoly::from_coeffs(ring, std::move(qc));
    out.v = dv.b.inverse();
    if (f != out.q.to_tps(N) * out.v)
        throw std::logic_error("weierstrass_prepare: factorization identity failed");
    return out;
}

Tps alpha_map(const MonicPoly& q, const Tps& u) {
    check_same_ring(q.ring, u.ring());
    return q.to_tps(u.trunc()) * u;
}

Preparation alpha_invert(const Tps& y, int d) {
    auto ord = y.t_order_reduced();
    if (!ord || *ord != d)
        throw order_error("alpha_invert: input does not have certified t-order " + std::to_string(d));
    return weierstrass_prepare(y);
}

std::pair<MonicPoly, Tps> beta_map(const MonicPoly& q, const BoundedPoly& v, const Tps& xi) {
    check_same_ring(q.ring, xi.ring());
    check_same_ring(v.ring, xi.ring());
    if (v.d != q.d) throw context_error("beta_map: remainder block size must equal deg q");
    int N = xi.trunc();
    return {q, v.to_tps(N) + q.to_tps(N) * xi};
}

BetaInverse beta_invert(const MonicPoly& q, const Tps& z) {
    check_same_ring(q.ring, z.ring());
    Tps f = q.to_tps(z.trunc());
    if (!q.lower_in_param_ideal())
        throw order_error("beta_invert: q does not reduce to t^d");
    DivisionResult dv = weierstrass_divide(f, z, q.d);
    BetaInverse out;
    out.v = dv.r;
    out.xi = dv.b;
    out.xi_certified = dv.b_certified;
    return out;
}

namespace {

// slot layout for the linear oracle: b_0..b_{L-1}, then r_0..r_{n-1}
struct OracleLayout {
    RingPtr ring;
    std::vector<Mono> basis;
    std::map<std::vector<int>, int> index;
    int L, n, N;
    int cols() const { return (int)basis.size() * (L + n); }
    int col(int slot, int bi) const { return slot * (int)basis.size() + bi; }
};

OracleLayout make_layout(const Tps& f, int n) {
    const RingPtr& ring = f.ring();
    if (ring->nvars() != ring->n_params())
        throw parameter_error("division oracle requires parameter-only coefficients");
    OracleLayout lay;
    lay.ring = ring;
    lay.basis = param_monomial_basis(ring);
    for (size_t i = 0; i < lay.basis.size(); ++i) lay.index[lay.basis[i].e] = (int)i;
    lay.N = f.trunc();
    lay.n = n;
    lay.L = lay.N - n;
    if (lay.L < 1) throw parameter_error("division oracle: need N > n");
    return lay;
}

// scatter poly = sum coef * basis-monomial into row entries
void scatter(const Field& F, const OracleLayout& lay, const Poly& p, int trow_base, int colidx,
             FMat& A) {
    for (const auto& [m, cf] : p.terms()) {
        auto it = lay.index.find(m.e);
        if (it == lay.index.end()) throw std::logic_error("oracle basis lookup failed");
        int row = trow_base + it->second;
        A[(size_t)row][(size_t)colidx] = fe_add(F, A[(size_t)row][(size_t)colidx], cf);
    }
}

FVec expand_rhs(const Field& F, const OracleLayout& lay, const Tps& g) {
    int B = (int)lay.basis.size();
    FVec rhs((size_t)(lay.N * B), fe_zero(F));
    for (int j = 0; j < lay.N; ++j) {
        for (const auto& [m, cf] : g.coeff(j).terms()) {
            auto it = lay.index.find(m.e);
            if (it == lay.index.end()) throw std::logic_error("oracle basis lookup failed");
            rhs[(size_t)(j * B + it->second)] = cf;
        }
    }
    return rhs;
}

// rows: t-coefficient j x basis monomial; columns per layout
FMat build_matrix(const OracleLayout& lay, const Tps& f, bool include_r) {
    const Field& F = lay.ring->field();
    int B = (int)lay.basis.size();
    int cols = include_r ? lay.cols() : B * lay.L;
    FMat A((size_t)(lay.N * B), FVec((size_t)cols, fe_zero(F)));
    for (int i = 0; i < lay.L; ++i) {
        for (int bi = 0; bi < B; ++bi) {
            Poly mb(lay.ring);
            mb.add_term(lay.basis[(size_t)bi], fe_one(F));
            for (int k = 0; i + k < lay.N; ++k) {
                Poly contrib = mb * f.coeff(k); // reduced product of basis monomial and f_k
                if (contrib.is_zero()) continue;
                scatter(F, lay, contrib, (i + k) * B, lay.col(i, bi), A);
            }
        }
    }
    if (include_r) {
        for (int i = 0; i < lay.n; ++i)
            for (int bi = 0; bi < B; ++bi)
                A[(size_t)(i * B + bi)][(size_t)lay.col(lay.L + i, bi)] = fe_one(F);
    }
    return A;
}

} // namespace

DivisionOracleResult division_linear_solve(const Tps& f, const Tps& g, int n) {
    check_same_ring(f.ring(), g.ring());
    if (f.trunc() != g.trunc()) throw context_error("division oracle: mismatched truncations");
    OracleLayout lay = make_layout(f, n);
    const Field& F = lay.ring->field();
    FMat A = build_matrix(lay, f, true);
    FVec rhs = expand_rhs(F, lay, g);
    LinSolveResult sol = linalg_solve(F, A, rhs);
    if (!sol.solvable) throw std::logic_error("division oracle: system unexpectedly infeasible");
    DivisionOracleResult out;
    out.unique = sol.kernel.empty();
    int B = (int)lay.basis.size();
    auto slot_poly = [&](int slot) {
        Poly p(lay.ring);
        for (int bi = 0; bi < B; ++bi)
            p.add_term(lay.basis[(size_t)bi], sol.particular[(size_t)lay.col(slot, bi)]);
        return p;
    };
    std::vector<Poly> bc, rc;
    for (int i = 0; i < lay.L; ++i) bc.push_back(slot_poly(i));
    for (int i = 0; i < lay.n; ++i) rc.push_back(slot_poly(lay.L + i));
    out.b_low = Tps::from_coeffs(lay.ring, std::move(bc));
    out.r = BoundedPoly::from_coeffs(lay.ring, std::move(rc));
    return out;
}

bool division_infeasible_with_remainder(const Tps& f, const Tps& g, const BoundedPoly& r_fixed,
                                        int n) {
    check_same_ring(f.ring(), g.ring());
    check_same_ring(f.ring(), r_fixed.ring);
    if (r_fixed.d != n) throw context_error("remainder block size must equal n");
    OracleLayout lay = make_layout(f, n);
    const Field& F = lay.ring->field();
    FMat A = build_matrix(lay, f, false);
    Tps target = g - r_fixed.to_tps(g.trunc());
    FVec rhs = expand_rhs(F, lay, target);
    LinSolveResult sol = linalg_solve(F, A, rhs);
    return !sol.solvable;
}

} // namespace arckit
