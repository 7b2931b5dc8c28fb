#include "arckit/presentation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace arckit {

void SchemePresentation::validate() const {
    if (!ring) throw std::invalid_argument("presentation without ring");
    if ((int)vars.size() != ring->nvars())
        throw std::invalid_argument("presentation vars do not match ring");
    for (int i = 0; i < (int)vars.size(); ++i)
        if (vars[i].name != ring->var_name(i))
            throw std::invalid_argument("presentation var name mismatch: " + vars[i].name);
    std::set<std::string> seen;
    for (const auto& v : vars)
        if (!seen.insert(v.name).second)
            throw std::invalid_argument("duplicate presentation variable " + v.name);
    for (const auto& e : eqs) check_same_ring(e.p.ring(), ring);
    for (const auto& g : inverted) check_same_ring(g.ring(), ring);
}

bool SchemePresentation::operator==(const SchemePresentation& o) const {
    if (!ring->same_as(*o.ring)) return false;
    if (!(vars == o.vars)) return false;
    if (eqs.size() != o.eqs.size() || inverted.size() != o.inverted.size()) return false;
    for (size_t i = 0; i < eqs.size(); ++i) {
        const auto &a = eqs[i], &b = o.eqs[i];
        if (a.tag != b.tag || a.row != b.row || a.level != b.level) return false;
        if (!(a.p == b.p.map_ring(ring))) return false;
    }
    for (size_t i = 0; i < inverted.size(); ++i)
        if (!(inverted[i] == o.inverted[i].map_ring(ring))) return false;
    return tails == o.tails;
}

int SchemePresentation::count_eqs_tagged(const std::string& tag) const {
    int c = 0;
    for (const auto& e : eqs)
        if (e.tag == tag) ++c;
    return c;
}

SchemePresentation affine_presentation(const RingPtr& ring, std::vector<Poly> eqs,
                                       std::vector<Poly> inverted) {
    SchemePresentation P;
    P.ring = ring;
    for (int i = 0; i < ring->nvars(); ++i)
        P.vars.push_back(PresVar{ring->var_name(i), "", -1, "plain", false});
    int r = 0;
    for (auto& e : eqs) {
        check_same_ring(e.ring(), ring);
        P.eqs.push_back(PresEq{"eq", r++, 0, std::move(e)});
    }
    for (auto& g : inverted) {
        check_same_ring(g.ring(), ring);
        P.inverted.push_back(std::move(g));
    }
    P.validate();
    return P;
}

SchemePresentation specialize(const SchemePresentation& P,
                              const std::map<std::string, FieldElem>& values) {
    P.validate();
    for (const auto& [name, v] : values) {
        (void)v;
        int idx = P.ring->var_index_checked(name);
        if (P.ring->is_param(idx))
            throw std::invalid_argument("cannot specialize nilpotent parameter " + name);
    }
    std::vector<std::string> kept_names; // non-parameter survivors, ring order
    std::vector<PresVar> kept_vars;
    TestRingSpec spec;
    spec.M = P.ring->nilpotency();
    for (int i = 0; i < P.ring->nvars(); ++i) {
        const auto& pv = P.vars[(size_t)i];
        if (P.ring->is_param(i)) {
            spec.params.push_back(pv.name);
            kept_vars.push_back(pv);
            continue;
        }
        if (values.count(pv.name)) continue;
        kept_names.push_back(pv.name);
        kept_vars.push_back(pv);
    }
    RingPtr nr = spec.params.empty() ? PolyRing::make(P.ring->field(), kept_names)
                                     : PolyRing::make(P.ring->field(), kept_names, spec);
    std::vector<Poly> images;
    for (int i = 0; i < P.ring->nvars(); ++i) {
        auto it = values.find(P.ring->var_name(i));
        if (it != values.end())
            images.push_back(Poly::constant(nr, it->second));
        else
            images.push_back(Poly::var(nr, P.ring->var_name(i)));
    }
    SchemePresentation Q;
    Q.ring = nr;
    Q.vars = std::move(kept_vars);
    for (const auto& e : P.eqs) {
        Poly q = e.p.subst(nr, images);
        Q.eqs.push_back(PresEq{e.tag, e.row, e.level, std::move(q)});
    }
    for (const auto& g : P.inverted) Q.inverted.push_back(g.subst(nr, images));
    Q.tails = P.tails;
    Q.validate();
    return Q;
}

SchemePresentation with_extra_equations(const SchemePresentation& P, const std::string& tag,
                                        std::vector<Poly> extra) {
    SchemePresentation Q = P;
    int r = 0;
    for (auto& e : extra) {
        check_same_ring(e.ring(), P.ring);
        Q.eqs.push_back(PresEq{tag, r++, 0, std::move(e)});
    }
    Q.validate();
    return Q;
}

PresEval eval_presentation(const SchemePresentation& P, const RingPtr& target,
                           const std::vector<Poly>& images) {
    P.validate();
    if ((int)images.size() != P.ring->nvars())
        throw std::invalid_argument("eval_presentation: image count mismatch");
    PresEval out;
    for (const auto& e : P.eqs) out.eq_values.push_back(e.p.subst(target, images));
    for (const auto& g : P.inverted) out.inverted_values.push_back(g.subst(target, images));
    return out;
}

bool satisfies_point(const SchemePresentation& P, const std::vector<FieldElem>& point) {
    if ((int)point.size() != P.ring->nvars())
        throw std::invalid_argument("satisfies_point: dimension mismatch");
    for (const auto& e : P.eqs)
        if (!fe_is_zero(P.ring->field(), e.p.eval_point(point))) return false;
    for (const auto& g : P.inverted)
        if (fe_is_zero(P.ring->field(), g.eval_point(point))) return false;
    return true;
}

} // namespace arckit
