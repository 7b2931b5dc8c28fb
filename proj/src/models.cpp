#include "arckit/models.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "arckit/errors.hpp"

namespace arckit {

std::vector<GoldenModel> builtin_models(const Field& F) {
    std::vector<GoldenModel> out;
    {
        GoldenModel m;
        m.name = "Y1";
        m.ring = PolyRing::make(F, {"v", "a"});
        Poly v = Poly::var(m.ring, "v");
        m.eqs = {v * v};
        m.q_coeff_vars = {"a"};
        m.z_vars = {"v"};
        m.free_vars = {"a"};
        m.d = 1;
        out.push_back(std::move(m));
    }
    {
        GoldenModel m;
        m.name = "Y2";
        m.ring = PolyRing::make(F, {"a", "b", "v", "w"});
        Poly a = Poly::var(m.ring, "a");
        Poly b = Poly::var(m.ring, "b");
        Poly v = Poly::var(m.ring, "v");
        Poly w = Poly::var(m.ring, "w");
        m.eqs = {a * w * w - v * v, b * w * w - v * w - v * w};
        m.q_coeff_vars = {"a", "b"};
        m.z_vars = {"v", "w"};
        m.d = 2;
        out.push_back(std::move(m));
    }
    return out;
}

const GoldenModel& model_by_name(const std::vector<GoldenModel>& models,
                                 const std::string& name) {
    for (const auto& m : models)
        if (m.name == name) return m;
    throw std::invalid_argument("unknown model " + name);
}

ModelMapResult model_map_eval(const GoldenModel& M, const std::vector<Poly>& point, const Tps& u,
                              const Tps& xi) {
    if ((int)point.size() != M.ring->nvars())
        throw std::invalid_argument("model map: one value per model variable required");
    if (point.empty()) throw std::invalid_argument("model map: empty point");
    RingPtr R = point[0].ring();
    for (const auto& p : point) check_same_ring(p.ring(), R);
    check_same_ring(u.ring(), R);
    check_same_ring(xi.ring(), R);
    const int N = u.trunc();
    if (xi.trunc() != N) throw context_error("model map: unit/tail truncation mismatch");
    const int d = M.d;
    if (N < d + 1) throw parameter_error("model map: truncation too small for the model depth");
    auto val = [&](const std::string& var) {
        return point[(size_t)M.ring->var_index_checked(var)];
    };
    std::vector<Poly> qlow;
    for (const auto& v : M.q_coeff_vars) qlow.push_back(val(v));
    MonicPoly q = MonicPoly::from_coeffs(R, std::move(qlow));
    TPoly zlow(R);
    for (int k = 0; k < (int)M.z_vars.size(); ++k) zlow.set_coeff(k, val(M.z_vars[(size_t)k]));
    auto dm = (zlow * zlow).divmod_monic(q.to_tpoly());
    if (!dm.rem.is_zero())
        throw obstruction_error("model map: z^2 is not divisible by q; the point violates the " +
                                M.name + " equations (remainder " + dm.rem.str() + ")");
    Tps q_tps = q.to_tps(N);
    ModelMapResult out;
    out.q = q;
    out.x = q_tps * u;
    Tps zl = zlow.to_tps(N);
    out.z = zl + q_tps * xi;
    Tps cross = zl * xi;
    Tps y_num = dm.quot.to_tps(N) + cross + cross + q_tps * xi * xi;
    out.y = y_num * u.inverse();
    if (!(out.x * out.y - out.z * out.z).is_zero())
        throw std::logic_error("model map: image fails the defining equation");
    return out;
}

bool model_remainder_identity(const GoldenModel& M) {
    // Over the model ring itself: rem(z_low^2, q) coefficientwise equals the
    // model equations up to sign.
    std::vector<Poly> qlow;
    for (const auto& v : M.q_coeff_vars) qlow.push_back(Poly::var(M.ring, v));
    MonicPoly q = MonicPoly::from_coeffs(M.ring, std::move(qlow));
    TPoly zlow(M.ring);
    for (int k = 0; k < (int)M.z_vars.size(); ++k)
        zlow.set_coeff(k, Poly::var(M.ring, M.z_vars[(size_t)k]));
    TPoly rem = (zlow * zlow).divmod_monic(q.to_tpoly()).rem;
    if (rem.degree() >= M.d) return false;
    if ((int)M.eqs.size() != M.d) return false;
    for (int k = 0; k < M.d; ++k) {
        const Poly& e = M.eqs[(size_t)k];
        Poly r = rem.coeff(k);
        if (!(r == e) && !(r == -e)) return false;
        if (r.is_zero()) return false;
    }
    return true;
}

namespace {

// Odometer over code vectors (each slot 0..q-1); returns false at wrap.
bool next_code(std::vector<int>& code, int q) {
    for (int i = (int)code.size() - 1; i >= 0; --i) {
        if (++code[(size_t)i] < q) return true;
        code[(size_t)i] = 0;
    }
    return false;
}

std::string arc_key(const Tps& x, const Tps& y, const Tps& z) {
    return x.str() + " | " + y.str() + " | " + z.str();
}

} // namespace

DeskCheckReport formal_iso_desk_check(const GoldenModel& M, int qf, int N) {
    const int d = M.d;
    if (N < d + 2) throw parameter_error("desk check: need N >= d+2");
    Field F = Field::prime((unsigned long)qf);
    if (M.ring->field().is_rational() || M.ring->field().characteristic() != (unsigned long)qf)
        throw parameter_error("desk check: model must be built over F_q");
    TestRingSpec spec;
    spec.params = {"eps"};
    spec.M = 2;
    RingPtr R = param_ring(F, spec);
    Poly eps = Poly::var(R, "eps");
    const int K = N - d; // certified tail truncation
    const int nv = M.ring->nvars();

    DeskCheckReport rep;
    rep.model = M.name;
    rep.q = qf;
    rep.N = N;
    bool injective = true, roundtrip_ok = true;
    std::set<std::string> image_keys;

    std::vector<int> code((size_t)(nv + 2 * K), 0);
    do {
        std::vector<Poly> point;
        for (int i = 0; i < nv; ++i)
            point.push_back(eps.scale(fe_from_long(F, code[(size_t)i])));
        Tps u = Tps::zero(R, N);
        u.set_coeff(0, Poly::from_long(R, 1) + eps.scale(fe_from_long(F, code[(size_t)nv])));
        for (int k = 1; k < K; ++k)
            u.set_coeff(k, eps.scale(fe_from_long(F, code[(size_t)(nv + k)])));
        Tps xi = Tps::zero(R, N);
        for (int k = 0; k < K; ++k)
            xi.set_coeff(k, eps.scale(fe_from_long(F, code[(size_t)(nv + K + k)])));
        ModelMapResult res = model_map_eval(M, point, u, xi);
        ++rep.model_count;
        if (!image_keys.insert(arc_key(res.x, res.y, res.z)).second) injective = false;
        // round trip: recover (q, u) from x and (z_low, xi) from z
        Preparation pr = weierstrass_prepare(res.x);
        if (!(pr.q == res.q) || !(pr.v.truncated(K) == u.truncated(K))) roundtrip_ok = false;
        BetaInverse bi = beta_invert(res.q, res.z);
        if (!(bi.xi.truncated(K) == xi.truncated(K))) roundtrip_ok = false;
        for (int k = 0; k < d; ++k)
            if (!(bi.v.c[(size_t)k] == point[(size_t)M.ring->var_index_checked(
                                           M.z_vars[(size_t)k])]))
                roundtrip_ok = false;
    } while (next_code(code, qf));

    // independent arc-side enumeration: all square-zero deformations of the
    // base arc with the canonical distinguished coordinate
    std::set<std::string> arc_keys;
    std::vector<int> code2((size_t)(2 * N), 0);
    do {
        Tps x = Tps::t_power(R, d, N);
        for (int k = 0; k < N; ++k)
            x.set_coeff(k, x.coeff(k) + eps.scale(fe_from_long(F, code2[(size_t)k])));
        Tps z = Tps::zero(R, N);
        for (int k = 0; k < N; ++k)
            z.set_coeff(k, eps.scale(fe_from_long(F, code2[(size_t)(N + k)])));
        Preparation pr = weierstrass_prepare(x);
        TPoly zt = TPoly::from_tps(z);
        auto dm = (zt * zt).divmod_monic(pr.q.to_tpoly());
        if (!dm.rem.is_zero()) continue; // no canonical partner at this window
        Tps y = dm.quot.to_tps(N) * pr.v.inverse();
        if (!(x * y - z * z).is_zero())
            throw std::logic_error("desk check: canonical arc fails the equation");
        arc_keys.insert(arc_key(x, y, z));
    } while (next_code(code2, qf));

    rep.arc_count = (long long)arc_keys.size();
    rep.injective = injective && (long long)image_keys.size() == rep.model_count;
    rep.image_matches = image_keys == arc_keys;
    rep.roundtrip_ok = roundtrip_ok;
    rep.pass = rep.injective && rep.image_matches && rep.roundtrip_ok;
    return rep;
}

CounterexampleReport counterexample_check() {
    Field F = Field::rationals();
    auto models = builtin_models(F);
    const GoldenModel& Y2 = model_by_name(models, "Y2");
    SchemePresentation P = affine_presentation(Y2.ring, Y2.eqs);
    std::vector<FieldElem> base = {fe_one(F), fe_zero(F), fe_zero(F), fe_zero(F)};
    RankReport rk = rank_at_point(P, base);
    CounterexampleReport rep;
    rep.base_rank = rk.rank;
    rep.base_eqs = rk.eq_count;
    rep.base_singular = !rk.certified_smooth;

    // image arc of that point: model values (a,b,v,w) = (1,0,0,0), u = 1,
    // xi = 0 give x = 1 + t^2, y = z = 0
    const int N = 6;
    RingPtr R = param_ring(F, TestRingSpec{});
    std::vector<Poly> mp = {Poly::from_long(R, 1), Poly::zero(R), Poly::zero(R), Poly::zero(R)};
    ModelMapResult arc = model_map_eval(Y2, mp, Tps::one(R, N), Tps::zero(R, N));

    SpecialCI X = quadric_cone(F);
    rep.jets_smooth = true;
    for (int j = 1; j <= 4; ++j) {
        SchemePresentation J = jet_presentation(X, j);
        std::vector<FieldElem> pt;
        const Tps* coords[3] = {&arc.x, &arc.y, &arc.z};
        for (int c = 0; c < 3; ++c)
            for (int k = 0; k <= j; ++k) {
                auto cv = coords[c]->coeff(k).as_constant();
                if (!cv) throw std::logic_error("counterexample: non-constant arc coefficient");
                pt.push_back(*cv);
            }
        RankReport jr = rank_at_point(J, pt);
        rep.jet_ranks.push_back(jr.rank);
        if (!jr.certified_smooth) rep.jets_smooth = false;
    }
    rep.pass = rep.base_rank == 0 && rep.base_singular && rep.jets_smooth;
    return rep;
}

CensusReport stratification_census(int qf, long long budget) {
    CensusReport rep;
    rep.q = qf;
    rep.j = 2;
    Field F = Field::prime((unsigned long)qf);
    SpecialCI X = quadric_cone(F);
    SchemePresentation jets = jet_presentation(X, rep.j);
    rep.total = count_points(jets, qf, budget).count;
    rep.d0 = count_points(stratum_presentation(X, 0), qf, budget).count;
    rep.d1 = count_points(stratum_presentation(X, 1), qf, budget).count;
    std::vector<Poly> cut = {Poly::var(jets.ring, "x0"), Poly::var(jets.ring, "x1")};
    rep.residual = count_points(with_extra_equations(jets, "cut", cut), qf, budget).count;
    rep.tail_factor = 1;
    const int free_slots = (X.m - X.n) * rep.j; // levels 1..j of each tail coordinate at d = 0
    for (int i = 0; i < free_slots; ++i) rep.tail_factor *= qf;
    rep.d0_contrib = rep.d0 * rep.tail_factor;
    rep.partition_ok = rep.total == rep.d0_contrib + rep.d1 + rep.residual;
    return rep;
}

} // namespace arckit
