#include "arckit/taylor.hpp"

#include <algorithm>

namespace arckit {

TaylorPieces taylor_pieces(const SpecialCI& X) {
    const RingPtr& r = X.ring;
    std::vector<std::string> names = r->var_names();
    std::vector<std::string> nu_names;
    for (int j = 0; j < X.n; ++j) {
        std::string nm = "nu" + std::to_string(j + 1);
        while (std::find(names.begin(), names.end(), nm) != names.end() ||
               std::find(nu_names.begin(), nu_names.end(), nm) != nu_names.end())
            nm += "_";
        nu_names.push_back(nm);
    }
    std::vector<std::string> all = names;
    all.insert(all.end(), nu_names.begin(), nu_names.end());
    TaylorPieces T;
    T.ext_ring = PolyRing::make(r->field(), all);
    for (int j = 0; j < X.n; ++j)
        T.nu_idx.push_back(r->nvars() + j);

    // images: x_i -> x_i, y_j -> y_j + nu_j
    std::vector<Poly> images;
    for (int i = 0; i < X.m; ++i) {
        Poly im = Poly::var(T.ext_ring, i);
        int jp = X.y_position(i);
        if (jp >= 0) im = im + Poly::var(T.ext_ring, T.nu_idx[(size_t)jp]);
        images.push_back(im);
    }

    int max_deg = 0;
    std::vector<Poly> shifted;
    for (const auto& fi : X.f) {
        Poly g = fi.subst(T.ext_ring, images);
        shifted.push_back(g);
        for (const auto& [mono, c] : g.terms()) {
            (void)c;
            int d = 0;
            for (int j : T.nu_idx) d += mono.e[(size_t)j];
            max_deg = std::max(max_deg, d);
        }
    }
    T.piece.assign((size_t)max_deg + 1, std::vector<Poly>());
    for (int k = 0; k <= max_deg; ++k)
        for (int i = 0; i < X.n; ++i) T.piece[(size_t)k].push_back(Poly(T.ext_ring));
    for (int i = 0; i < X.n; ++i) {
        for (const auto& [mono, c] : shifted[(size_t)i].terms()) {
            int d = 0;
            for (int j : T.nu_idx) d += mono.e[(size_t)j];
            T.piece[(size_t)d][(size_t)i].add_term(mono, c);
        }
    }
    return T;
}

std::vector<std::vector<Tps>> taylor_expand(const SpecialCI& X, const std::vector<Tps>& base,
                                            const std::vector<Tps>& y_direction, int degree_bound) {
    if ((int)base.size() != X.m) throw context_error("taylor_expand base arity mismatch");
    if ((int)y_direction.size() != X.n) throw context_error("taylor_expand direction arity mismatch");
    TaylorPieces T = taylor_pieces(X);
    std::vector<Tps> images = base;
    for (const auto& d : y_direction) images.push_back(d);
    int kmax = (int)T.piece.size() - 1;
    if (degree_bound >= 0) kmax = std::min(kmax, degree_bound);
    std::vector<std::vector<Tps>> out;
    for (int k = 0; k <= kmax; ++k) {
        std::vector<Tps> row;
        for (int i = 0; i < X.n; ++i) row.push_back(eval_tps(T.piece[(size_t)k][(size_t)i], images));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace arckit
