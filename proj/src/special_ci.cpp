#include "arckit/special_ci.hpp"

#include <algorithm>
#include <cassert>

namespace arckit {

bool SpecialCI::is_y(int var) const {
    return std::find(y_idx.begin(), y_idx.end(), var) != y_idx.end();
}

int SpecialCI::y_position(int var) const {
    for (size_t j = 0; j < y_idx.size(); ++j)
        if (y_idx[j] == var) return (int)j;
    return -1;
}

std::vector<int> SpecialCI::x_idx() const {
    std::vector<int> out;
    for (int i = 0; i < m; ++i)
        if (!is_y(i)) out.push_back(i);
    return out;
}

SpecialCI make_special_ci(const RingPtr& ring, const std::vector<std::string>& y_names,
                          const std::vector<Poly>& eqs) {
    if (ring->n_params() != 0)
        throw parameter_error("ambient ring of a complete intersection must have no parameters");
    SpecialCI X;
    X.ring = ring;
    X.m = ring->nvars();
    X.n = (int)eqs.size();
    if ((int)y_names.size() != X.n)
        throw parameter_error("need exactly one distinguished variable per equation");
    if (X.n > X.m) throw parameter_error("more equations than ambient dimension");
    for (const auto& nm : y_names) X.y_idx.push_back(ring->var_index_checked(nm));
    for (const auto& e : eqs) check_same_ring(e.ring(), ring);
    X.f = eqs;
    return X;
}

SpecialCI quadric_cone(const Field& F) {
    RingPtr r = PolyRing::make(F, {"x", "y", "z"});
    Poly eq = Poly::var(r, "x") * Poly::var(r, "y") - Poly::var(r, "z").pow(2);
    return make_special_ci(r, {"y"}, {eq});
}

JacobianData jacobian_package(const SpecialCI& X) {
    const RingPtr& r = X.ring;
    Poly zero(r);
    Poly one = Poly::constant(r, fe_one(r->field()));
    Mat<Poly> phi(X.n, X.n, zero);
    for (int i = 0; i < X.n; ++i)
        for (int j = 0; j < X.n; ++j)
            phi.at(i, j) = X.f[(size_t)i].derivative(X.y_idx[(size_t)j]);
    Poly psi = mat_det(phi, zero);
    Mat<Poly> adj = mat_adjugate(phi, zero, one);
    // assert adj*phi = phi*adj = psi*I symbolically
    Mat<Poly> ap = mat_mul(adj, phi, zero);
    Mat<Poly> pa = mat_mul(phi, adj, zero);
    for (int i = 0; i < X.n; ++i)
        for (int j = 0; j < X.n; ++j) {
            const Poly& want = i == j ? psi : zero;
            if (ap.at(i, j) != want || pa.at(i, j) != want)
                throw std::logic_error("adjugate identity failed");
        }
    return JacobianData{std::move(phi), std::move(adj), std::move(psi)};
}

Poly singular_locus(const SpecialCI& X) { return jacobian_package(X).psi; }

} // namespace arckit
