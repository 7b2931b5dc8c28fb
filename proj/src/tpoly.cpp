#include "arckit/tpoly.hpp"

#include <sstream>

namespace arckit {

void TPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TPoly TPoly::from_poly(const Poly& c0) {
    TPoly p(c0.ring());
    p.c_.push_back(c0);
    p.trim();
    return p;
}

TPoly TPoly::t_power(const RingPtr& r, int k) {
    if (k < 0) throw parameter_error("negative t-power");
    TPoly p(r);
    p.c_.assign((size_t)k + 1, Poly(r));
    p.c_.back() = Poly::constant(r, fe_one(r->field()));
    return p;
}

TPoly TPoly::from_coeffs(RingPtr ring, std::vector<Poly> c) {
    TPoly p(std::move(ring));
    for (auto& q : c) check_same_ring(q.ring(), p.ring_);
    p.c_ = std::move(c);
    p.trim();
    return p;
}

Poly TPoly::coeff(int k) const {
    if (k < 0) throw context_error("negative coefficient index");
    if (k >= (int)c_.size()) return Poly(ring_);
    return c_[(size_t)k];
}

void TPoly::set_coeff(int k, const Poly& p) {
    if (k < 0) throw context_error("negative coefficient index");
    check_same_ring(p.ring(), ring_);
    if (k >= (int)c_.size()) c_.resize((size_t)k + 1, Poly(ring_));
    c_[(size_t)k] = p;
    trim();
}

bool TPoly::operator==(const TPoly& o) const {
    check_same_ring(ring_, o.ring_);
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

TPoly TPoly::operator+(const TPoly& o) const {
    check_same_ring(ring_, o.ring_);
    TPoly r(ring_);
    size_t n = std::max(c_.size(), o.c_.size());
    r.c_.assign(n, Poly(ring_));
    for (size_t i = 0; i < n; ++i) {
        if (i < c_.size()) r.c_[i] = r.c_[i] + c_[i];
        if (i < o.c_.size()) r.c_[i] = r.c_[i] + o.c_[i];
    }
    r.trim();
    return r;
}

TPoly TPoly::operator-() const {
    TPoly r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
}

TPoly TPoly::operator-(const TPoly& o) const { return *this + (-o); }

TPoly TPoly::operator*(const TPoly& o) const {
    check_same_ring(ring_, o.ring_);
    TPoly r(ring_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Poly(ring_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

TPoly TPoly::scale(const Poly& p) const {
    check_same_ring(p.ring(), ring_);
    TPoly r(ring_);
    r.c_.reserve(c_.size());
    for (const auto& q : c_) r.c_.push_back(q * p);
    r.trim();
    return r;
}

TPoly TPoly::shifted_up(int k) const {
    if (k < 0) throw parameter_error("negative shift");
    if (c_.empty()) return *this;
    TPoly r(ring_);
    r.c_.assign((size_t)k, Poly(ring_));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

TPoly::DivMod TPoly::divmod_monic(const TPoly& div) const {
    check_same_ring(ring_, div.ring_);
    int dd = div.degree();
    if (dd < 0) throw std::domain_error("division by zero polynomial");
    auto lead = div.c_.back().as_constant();
    if (!lead || !fe_eq(ring_->field(), *lead, fe_one(ring_->field())))
        throw std::domain_error("divisor is not monic");
    DivMod out{TPoly(ring_), TPoly(ring_)};
    std::vector<Poly> rem = c_;
    int rd = (int)rem.size() - 1;
    std::vector<Poly> quot;
    if (rd >= dd) quot.assign((size_t)(rd - dd + 1), Poly(ring_));
    while (rd >= dd) {
        if (!rem[(size_t)rd].is_zero()) {
            Poly q = rem[(size_t)rd];
            quot[(size_t)(rd - dd)] = q;
            for (int i = 0; i <= dd; ++i)
                rem[(size_t)(rd - dd + i)] = rem[(size_t)(rd - dd + i)] - q * div.c_[(size_t)i];
        }
        --rd;
    }
    out.quot = TPoly::from_coeffs(ring_, std::move(quot));
    rem.resize((size_t)std::max(0, dd), Poly(ring_));
    out.rem = TPoly::from_coeffs(ring_, std::move(rem));
    return out;
}

Tps TPoly::to_tps(int N) const {
    Tps s(ring_, N);
    for (int k = 0; k < N && k < (int)c_.size(); ++k) s.set_coeff(k, c_[(size_t)k]);
    return s;
}

TPoly TPoly::from_tps(const Tps& s) {
    TPoly p(s.ring());
    p.c_ = s.coeffs();
    p.trim();
    return p;
}

std::string TPoly::str() const { return to_tps(std::max(1, (int)c_.size())).str(); }

TPoly eval_tpoly(const Poly& f, const std::vector<TPoly>& images) {
    const RingPtr& src = f.ring();
    if ((int)images.size() != src->nvars()) throw context_error("eval_tpoly arity mismatch");
    if (images.empty()) throw context_error("eval_tpoly needs at least one image");
    const RingPtr& tgt = images[0].ring();
    for (const auto& im : images) check_same_ring(im.ring(), tgt);
    if (src->field() != tgt->field()) throw context_error("eval_tpoly across different fields");
    std::vector<std::vector<TPoly>> pows((size_t)src->nvars());
    auto power = [&](int var, int e) -> const TPoly& {
        auto& tab = pows[(size_t)var];
        if (tab.empty()) tab.push_back(TPoly::from_poly(Poly::constant(tgt, fe_one(tgt->field()))));
        while ((int)tab.size() <= e) tab.push_back(tab.back() * images[(size_t)var]);
        return tab[(size_t)e];
    };
    TPoly acc(tgt);
    for (const auto& [m, c] : f.terms()) {
        TPoly t = TPoly::from_poly(Poly::constant(tgt, c));
        for (int i = 0; i < src->nvars(); ++i)
            if (m.e[(size_t)i] > 0) t = t * power(i, m.e[(size_t)i]);
        acc = acc + t;
    }
    return acc;
}

} // namespace arckit
