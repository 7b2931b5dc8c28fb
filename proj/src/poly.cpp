#include "arckit/poly.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace arckit {

PolyRing::PolyRing(const Field& f, std::vector<std::string> vars, int n_params, int M)
    : field_(f), vars_(std::move(vars)), n_params_(n_params), M_(M) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty()) throw parameter_error("empty variable name");
        if (!seen.insert(v).second) throw parameter_error("duplicate variable name '" + v + "'");
    }
    if (n_params_ < 0 || n_params_ > (int)vars_.size())
        throw parameter_error("bad parameter count");
    if (n_params_ > 0 && M_ < 1) throw parameter_error("nilpotency bound must be >= 1");
    if (n_params_ == 0) M_ = 0; // nilpotency is meaningless without parameters
}

std::shared_ptr<const PolyRing> PolyRing::make(const Field& f, const std::vector<std::string>& vars) {
    return std::shared_ptr<const PolyRing>(new PolyRing(f, vars, 0, 0));
}

std::shared_ptr<const PolyRing> PolyRing::make(const Field& f, const std::vector<std::string>& vars,
                                               const TestRingSpec& spec) {
    std::vector<std::string> all = vars;
    all.insert(all.end(), spec.params.begin(), spec.params.end());
    return std::shared_ptr<const PolyRing>(new PolyRing(f, all, (int)spec.params.size(), spec.M));
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return (int)i;
    return -1;
}

int PolyRing::var_index_checked(const std::string& name) const {
    int i = var_index(name);
    if (i < 0) throw context_error("unknown variable '" + name + "'");
    return i;
}

bool PolyRing::same_as(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && n_params_ == o.n_params_ && M_ == o.M_;
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b)) throw context_error("mismatched ring contexts");
}

Mono Mono::of(std::vector<int> exps) {
    Mono m;
    m.e = std::move(exps);
    m.deg = 0;
    for (int x : m.e) {
        if (x < 0) throw parameter_error("negative exponent");
        m.deg += x;
    }
    return m;
}

bool MonoCmpDesc::operator()(const Mono& a, const Mono& b) const {
    if (a.deg != b.deg) return a.deg > b.deg;
    // lex with earlier variables more significant; larger exponent first
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

int Poly::param_degree(const Mono& m) const {
    int np = ring_->n_params();
    if (np == 0) return 0;
    int d = 0;
    int first = ring_->first_param();
    for (int i = first; i < ring_->nvars(); ++i) d += m.e[(size_t)i];
    return d;
}

void Poly::add_term(const Mono& m, const FieldElem& c) {
    const Field& F = ring_->field();
    if (fe_is_zero(F, c)) return;
    if ((int)m.e.size() != ring_->nvars()) throw context_error("exponent vector length mismatch");
    if (ring_->n_params() > 0 && param_degree(m) >= ring_->nilpotency()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = fe_add(F, it->second, c);
        if (fe_is_zero(F, it->second)) terms_.erase(it);
    }
}

Poly Poly::constant(const RingPtr& r, const FieldElem& c) {
    Poly p(r);
    p.add_term(Mono::of(std::vector<int>((size_t)r->nvars(), 0)), c);
    return p;
}

Poly Poly::from_long(const RingPtr& r, long v) {
    return constant(r, fe_from_long(r->field(), v));
}

Poly Poly::var(const RingPtr& r, int i, int exp) {
    if (i < 0 || i >= r->nvars()) throw context_error("variable index out of range");
    if (exp < 0) throw parameter_error("negative exponent");
    Poly p(r);
    std::vector<int> e((size_t)r->nvars(), 0);
    e[(size_t)i] = exp;
    p.add_term(Mono::of(std::move(e)), fe_one(r->field()));
    return p;
}

Poly Poly::var(const RingPtr& r, const std::string& name, int exp) {
    return var(r, r->var_index_checked(name), exp);
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.deg; // descending order: first term has max degree
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(ring_, o.ring_);
    Poly r = *this;
    const Field& F = ring_->field();
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) r.terms_.emplace(m, c);
        else {
            it->second = fe_add(F, it->second, c);
            if (fe_is_zero(F, it->second)) r.terms_.erase(it);
        }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    const Field& F = ring_->field();
    for (auto& [m, c] : r.terms_) c = fe_neg(F, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(ring_, o.ring_);
    Poly r(ring_);
    const Field& F = ring_->field();
    int nv = ring_->nvars();
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Mono m;
            m.e.resize((size_t)nv);
            for (int i = 0; i < nv; ++i) m.e[(size_t)i] = ma.e[(size_t)i] + mb.e[(size_t)i];
            m.deg = ma.deg + mb.deg;
            r.add_term(m, fe_mul(F, ca, cb));
        }
    }
    return r;
}

Poly Poly::scale(const FieldElem& c) const {
    const Field& F = ring_->field();
    if (fe_is_zero(F, c)) return Poly(ring_);
    Poly r = *this;
    for (auto& [m, v] : r.terms_) v = fe_mul(F, v, c);
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw parameter_error("negative power");
    Poly acc = Poly::constant(ring_, fe_one(ring_->field()));
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    check_same_ring(ring_, o.ring_);
    if (terms_.size() != o.terms_.size()) return false;
    const Field& F = ring_->field();
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first.e != jt->first.e) return false;
        if (!fe_eq(F, it->second, jt->second)) return false;
    }
    return true;
}

Poly Poly::derivative(int var) const {
    if (var < 0 || var >= ring_->nvars()) throw context_error("variable index out of range");
    Poly r(ring_);
    const Field& F = ring_->field();
    for (const auto& [m, c] : terms_) {
        int e = m.e[(size_t)var];
        if (e == 0) continue;
        Mono m2 = m;
        m2.e[(size_t)var] = e - 1;
        m2.deg = m.deg - 1;
        r.add_term(m2, fe_mul(F, c, fe_from_long(F, e)));
    }
    return r;
}

FieldElem Poly::constant_term() const {
    Mono z = Mono::of(std::vector<int>((size_t)ring_->nvars(), 0));
    auto it = terms_.find(z);
    return it == terms_.end() ? fe_zero(ring_->field()) : it->second;
}

bool Poly::in_param_ideal() const {
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (param_degree(m) == 0) return false;
    }
    return true;
}

Poly Poly::reduce_mod_params() const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_)
        if (param_degree(m) == 0) r.terms_.emplace(m, c);
    return r;
}

std::optional<FieldElem> Poly::as_constant() const {
    if (terms_.empty()) return fe_zero(ring_->field());
    if (terms_.size() == 1 && terms_.begin()->first.deg == 0) return terms_.begin()->second;
    return std::nullopt;
}

Poly Poly::unit_inverse() const {
    const Field& F = ring_->field();
    FieldElem c0 = constant_term();
    if (fe_is_zero(F, c0)) throw std::domain_error("not a unit: zero constant term");
    Poly nil = *this - Poly::constant(ring_, c0);
    if (!nil.in_param_ideal())
        throw std::domain_error("not a unit: non-constant part is not nilpotent");
    // (c0 + n)^{-1} = c0^{-1} * sum_{i<M} (-n/c0)^i, finite by nilpotency
    FieldElem ic0 = fe_inv(F, c0);
    Poly x = (-nil).scale(ic0); // -n/c0
    Poly acc = Poly::constant(ring_, fe_one(F));
    Poly p = Poly::constant(ring_, fe_one(F));
    int M = ring_->n_params() > 0 ? ring_->nilpotency() : 1;
    for (int i = 1; i < M; ++i) {
        p = p * x;
        if (p.is_zero()) break;
        acc = acc + p;
    }
    return acc.scale(ic0);
}

Poly Poly::subst(const RingPtr& target, const std::vector<Poly>& images) const {
    if ((int)images.size() != ring_->nvars()) throw context_error("substitution arity mismatch");
    for (const auto& im : images) check_same_ring(im.ring(), target);
    if (ring_->field() != target->field()) throw context_error("substitution across different fields");
    const Field& F = target->field();
    // memoized powers per variable
    std::vector<std::vector<Poly>> pows((size_t)ring_->nvars());
    auto power = [&](int var, int e) -> const Poly& {
        auto& tab = pows[(size_t)var];
        if (tab.empty()) tab.push_back(Poly::constant(target, fe_one(F)));
        while ((int)tab.size() <= e) tab.push_back(tab.back() * images[(size_t)var]);
        return tab[(size_t)e];
    };
    Poly out(target);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (int i = 0; i < ring_->nvars(); ++i)
            if (m.e[(size_t)i] > 0) t = t * power(i, m.e[(size_t)i]);
        out = out + t;
    }
    return out;
}

Poly Poly::map_ring(const RingPtr& target) const {
    if (ring_->field() != target->field()) throw context_error("map_ring across different fields");
    // Match by name, but only for variables that actually occur; this lets
    // polynomials travel to rings that drop unused variables.
    std::vector<int> where((size_t)ring_->nvars(), -1);
    Poly out(target);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e((size_t)target->nvars(), 0);
        for (int i = 0; i < ring_->nvars(); ++i) {
            if (m.e[(size_t)i] == 0) continue;
            int& w = where[(size_t)i];
            if (w < 0) w = target->var_index_checked(ring_->var_name(i));
            e[(size_t)w] = m.e[(size_t)i];
        }
        out.add_term(Mono::of(std::move(e)), c);
    }
    return out;
}

FieldElem Poly::eval_point(const std::vector<FieldElem>& point) const {
    if ((int)point.size() != ring_->nvars()) throw context_error("evaluation arity mismatch");
    const Field& F = ring_->field();
    FieldElem acc = fe_zero(F);
    for (const auto& [m, c] : terms_) {
        FieldElem t = c;
        for (int i = 0; i < ring_->nvars(); ++i)
            for (int k = 0; k < m.e[(size_t)i]; ++k) t = fe_mul(F, t, point[(size_t)i]);
        acc = fe_add(F, acc, t);
    }
    return acc;
}

std::string Poly::str() const {
    const Field& F = ring_->field();
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = fe_str(F, c);
        bool neg = !cs.empty() && cs[0] == '-';
        std::string mag = neg ? cs.substr(1) : cs;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (m.deg == 0 || mag != "1") factors.push_back(mag);
        for (int i = 0; i < ring_->nvars(); ++i) {
            int e = m.e[(size_t)i];
            if (e == 0) continue;
            factors.push_back(e == 1 ? ring_->var_name(i)
                                     : ring_->var_name(i) + "^" + std::to_string(e));
        }
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

RingPtr param_ring(const Field& f, const TestRingSpec& spec) {
    return PolyRing::make(f, {}, spec);
}

std::vector<Mono> param_monomial_basis(const RingPtr& r) {
    int nv = r->nvars();
    int np = r->n_params();
    int M = np > 0 ? r->nilpotency() : 1;
    std::vector<Mono> out;
    std::vector<int> e((size_t)nv, 0);
    // enumerate exponent vectors on the parameter block with total degree < M
    int first = r->first_param();
    std::vector<int> pe((size_t)np, 0);
    while (true) {
        int deg = 0;
        for (int x : pe) deg += x;
        if (deg < M) {
            std::vector<int> full = e;
            for (int i = 0; i < np; ++i) full[(size_t)(first + i)] = pe[(size_t)i];
            out.push_back(Mono::of(std::move(full)));
        }
        // odometer with per-digit bound M-1
        int i = 0;
        for (; i < np; ++i) {
            if (pe[(size_t)i] < M - 1) {
                ++pe[(size_t)i];
                break;
            }
            pe[(size_t)i] = 0;
        }
        if (i == np) break;
        if (np == 0) break;
    }
    if (np == 0) out = {Mono::of(e)};
    std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
    });
    return out;
}

} // namespace arckit
