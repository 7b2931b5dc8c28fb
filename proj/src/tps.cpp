#include "arckit/tps.hpp"

#include <cassert>
#include <sstream>

namespace arckit {

Tps::Tps(RingPtr ring, int N) : ring_(std::move(ring)), N_(N) {
    if (N < 1) throw parameter_error("truncation order must be >= 1");
    c_.assign((size_t)N, Poly(ring_));
}

Tps Tps::one(const RingPtr& r, int N) {
    Tps s(r, N);
    s.c_[0] = Poly::constant(r, fe_one(r->field()));
    return s;
}

Tps Tps::from_poly(const Poly& c0, int N) {
    Tps s(c0.ring(), N);
    s.c_[0] = c0;
    return s;
}

Tps Tps::t_power(const RingPtr& r, int k, int N) {
    if (k < 0) throw parameter_error("negative t-power");
    Tps s(r, N);
    if (k < N) s.c_[(size_t)k] = Poly::constant(r, fe_one(r->field()));
    return s;
}

Tps Tps::from_coeffs(RingPtr ring, std::vector<Poly> c) {
    Tps s(std::move(ring), (int)c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        check_same_ring(c[i].ring(), s.ring_);
        s.c_[i] = std::move(c[i]);
    }
    return s;
}

const Poly& Tps::coeff(int k) const {
    if (k < 0 || k >= N_) throw context_error("coefficient index outside truncation");
    return c_[(size_t)k];
}

void Tps::set_coeff(int k, const Poly& p) {
    if (k < 0 || k >= N_) throw context_error("coefficient index outside truncation");
    check_same_ring(p.ring(), ring_);
    c_[(size_t)k] = p;
}

bool Tps::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

void Tps::check_compat(const Tps& o) const {
    check_same_ring(ring_, o.ring_);
    if (N_ != o.N_)
        throw context_error("mismatched truncation orders " + std::to_string(N_) + " vs " +
                            std::to_string(o.N_));
}

bool Tps::operator==(const Tps& o) const {
    check_compat(o);
    for (int k = 0; k < N_; ++k)
        if (c_[(size_t)k] != o.c_[(size_t)k]) return false;
    return true;
}

Tps Tps::operator+(const Tps& o) const {
    check_compat(o);
    Tps r = *this;
    for (int k = 0; k < N_; ++k) r.c_[(size_t)k] = r.c_[(size_t)k] + o.c_[(size_t)k];
    return r;
}

Tps Tps::operator-(const Tps& o) const {
    check_compat(o);
    Tps r = *this;
    for (int k = 0; k < N_; ++k) r.c_[(size_t)k] = r.c_[(size_t)k] - o.c_[(size_t)k];
    return r;
}

Tps Tps::operator-() const {
    Tps r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
}

Tps Tps::operator*(const Tps& o) const {
    check_compat(o);
    Tps r(ring_, N_);
    for (int i = 0; i < N_; ++i) {
        if (c_[(size_t)i].is_zero()) continue;
        for (int j = 0; i + j < N_; ++j) {
            if (o.c_[(size_t)j].is_zero()) continue;
            r.c_[(size_t)(i + j)] = r.c_[(size_t)(i + j)] + c_[(size_t)i] * o.c_[(size_t)j];
        }
    }
    return r;
}

Tps Tps::scale(const Poly& p) const {
    check_same_ring(p.ring(), ring_);
    Tps r(ring_, N_);
    for (int k = 0; k < N_; ++k) r.c_[(size_t)k] = c_[(size_t)k] * p;
    return r;
}

Tps Tps::shifted_up(int k) const {
    if (k < 0) throw parameter_error("negative shift");
    Tps r(ring_, N_);
    for (int i = 0; i + k < N_; ++i) r.c_[(size_t)(i + k)] = c_[(size_t)i];
    return r;
}

Tps Tps::shifted_down(int k) const {
    if (k < 0) throw parameter_error("negative shift");
    if (k >= N_) throw parameter_error("shift consumes the whole truncation window");
    for (int i = 0; i < k; ++i)
        if (!c_[(size_t)i].is_zero())
            throw order_error("shifted_down: coefficient of t^" + std::to_string(i) + " is nonzero");
    Tps r(ring_, N_ - k);
    for (int i = 0; i < N_ - k; ++i) r.c_[(size_t)i] = c_[(size_t)(i + k)];
    return r;
}

Tps Tps::truncated(int k) const {
    if (k < 1 || k > N_) throw parameter_error("bad truncation target");
    Tps r(ring_, k);
    for (int i = 0; i < k; ++i) r.c_[(size_t)i] = c_[(size_t)i];
    return r;
}

Tps Tps::extended(int k) const {
    if (k < N_) throw parameter_error("extended() cannot lower the truncation");
    Tps r(ring_, k);
    for (int i = 0; i < N_; ++i) r.c_[(size_t)i] = c_[(size_t)i];
    return r;
}

Tps Tps::inverse() const {
    Poly d0 = c_[0].unit_inverse(); // throws when c0 is not a unit
    Tps r(ring_, N_);
    r.c_[0] = d0;
    for (int k = 1; k < N_; ++k) {
        Poly s(ring_);
        for (int i = 1; i <= k; ++i) s = s + c_[(size_t)i] * r.c_[(size_t)(k - i)];
        r.c_[(size_t)k] = -(s * d0);
    }
    return r;
}

std::optional<int> Tps::t_order_reduced() const {
    for (int k = 0; k < N_; ++k)
        if (!c_[(size_t)k].reduce_mod_params().is_zero()) return k;
    return std::nullopt;
}

std::optional<int> Tps::t_order_raw() const {
    for (int k = 0; k < N_; ++k)
        if (!c_[(size_t)k].is_zero()) return k;
    return std::nullopt;
}

std::string Tps::str() const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < N_; ++k) {
        const Poly& p = c_[(size_t)k];
        if (p.is_zero()) continue;
        std::string ps = p.str();
        // Multi-term coefficients stay parenthesized with their own signs;
        // single negative terms join the sum with " - " like Poly::str does.
        bool multi = ps.find(" + ") != std::string::npos || ps.find(" - ") != std::string::npos;
        bool neg = !multi && !ps.empty() && ps[0] == '-';
        std::string body = neg ? ps.substr(1) : ps;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (k == 0) {
            out << body;
            continue;
        }
        std::string tpow = k == 1 ? "t" : "t^" + std::to_string(k);
        if (body == "1") {
            out << tpow;
        } else if (multi) {
            out << "(" << ps << ")*" << tpow;
        } else {
            out << body << "*" << tpow;
        }
    }
    if (first) return "0";
    return out.str();
}

Tps eval_tps(const Poly& f, const std::vector<Tps>& images) {
    const RingPtr& src = f.ring();
    if ((int)images.size() != src->nvars()) throw context_error("eval_tps arity mismatch");
    if (images.empty()) throw context_error("eval_tps needs at least one image");
    const RingPtr& tgt = images[0].ring();
    int N = images[0].trunc();
    for (const auto& im : images) {
        check_same_ring(im.ring(), tgt);
        if (im.trunc() != N) throw context_error("eval_tps truncation mismatch");
    }
    if (src->field() != tgt->field()) throw context_error("eval_tps across different fields");
    std::vector<std::vector<Tps>> pows((size_t)src->nvars());
    auto power = [&](int var, int e) -> const Tps& {
        auto& tab = pows[(size_t)var];
        if (tab.empty()) tab.push_back(Tps::one(tgt, N));
        while ((int)tab.size() <= e) tab.push_back(tab.back() * images[(size_t)var]);
        return tab[(size_t)e];
    };
    Tps acc(tgt, N);
    for (const auto& [m, c] : f.terms()) {
        Tps t = Tps::from_poly(Poly::constant(tgt, c), N);
        for (int i = 0; i < src->nvars(); ++i)
            if (m.e[(size_t)i] > 0) t = t * power(i, m.e[(size_t)i]);
        acc = acc + t;
    }
    return acc;
}

} // namespace arckit
