#include "arckit/field.hpp"

#include <cassert>

namespace arckit {

namespace {

bool is_prime_ul(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

unsigned long pow_mod(unsigned long b, unsigned long e, unsigned long p) {
    unsigned long acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = (acc * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return acc;
}

} // namespace

Field Field::prime(unsigned long p) {
    if (!is_prime_ul(p)) throw parameter_error("field characteristic must be prime, got " + std::to_string(p));
    if (p > 65535) throw parameter_error("prime field too large: " + std::to_string(p));
    return Field(p);
}

std::string Field::str() const {
    return is_rational() ? std::string("Q") : "F " + std::to_string(p_);
}

FieldElem fe_zero(const Field& F) {
    (void)F;
    return FieldElem{};
}

FieldElem fe_one(const Field& F) {
    FieldElem e;
    if (F.is_rational()) e.q = 1;
    else e.r = 1 % F.characteristic();
    return e;
}

FieldElem fe_from_long(const Field& F, long v) {
    FieldElem e;
    if (F.is_rational()) {
        e.q = v;
    } else {
        long p = (long)F.characteristic();
        long m = v % p;
        if (m < 0) m += p;
        e.r = (unsigned long)m;
    }
    return e;
}

bool fe_is_zero(const Field& F, const FieldElem& a) {
    return F.is_rational() ? a.q == 0 : a.r == 0;
}

bool fe_eq(const Field& F, const FieldElem& a, const FieldElem& b) {
    return F.is_rational() ? a.q == b.q : a.r == b.r;
}

bool fe_less(const Field& F, const FieldElem& a, const FieldElem& b) {
    return F.is_rational() ? a.q < b.q : a.r < b.r;
}

FieldElem fe_add(const Field& F, const FieldElem& a, const FieldElem& b) {
    FieldElem e;
    if (F.is_rational()) e.q = a.q + b.q;
    else e.r = (a.r + b.r) % F.characteristic();
    return e;
}

FieldElem fe_sub(const Field& F, const FieldElem& a, const FieldElem& b) {
    FieldElem e;
    if (F.is_rational()) e.q = a.q - b.q;
    else {
        unsigned long p = F.characteristic();
        e.r = (a.r + p - b.r) % p;
    }
    return e;
}

FieldElem fe_mul(const Field& F, const FieldElem& a, const FieldElem& b) {
    FieldElem e;
    if (F.is_rational()) e.q = a.q * b.q;
    else e.r = (a.r * b.r) % F.characteristic();
    return e;
}

FieldElem fe_neg(const Field& F, const FieldElem& a) {
    FieldElem e;
    if (F.is_rational()) e.q = -a.q;
    else e.r = a.r == 0 ? 0 : F.characteristic() - a.r;
    return e;
}

FieldElem fe_inv(const Field& F, const FieldElem& a) {
    if (fe_is_zero(F, a)) throw std::domain_error("division by zero field element");
    FieldElem e;
    if (F.is_rational()) e.q = 1 / a.q;
    else e.r = pow_mod(a.r, F.characteristic() - 2, F.characteristic());
    return e;
}

FieldElem fe_div(const Field& F, const FieldElem& a, const FieldElem& b) {
    return fe_mul(F, a, fe_inv(F, b));
}

std::string fe_str(const Field& F, const FieldElem& a) {
    if (F.is_rational()) return a.q.get_str();
    return std::to_string(a.r);
}

FieldElem fe_parse(const Field& F, const std::string& text) {
    if (text.empty()) throw parse_error("empty numeric literal");
    std::string s = text;
    bool neg = false;
    size_t pos = 0;
    if (s[0] == '-') { neg = true; pos = 1; }
    std::string num, den;
    bool in_den = false;
    for (size_t i = pos; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (in_den || i + 1 == s.size()) throw parse_error("malformed rational literal '" + text + "'");
            in_den = true;
        } else if (c >= '0' && c <= '9') {
            (in_den ? den : num) += c;
        } else {
            throw parse_error("bad character in numeric literal '" + text + "'");
        }
    }
    if (num.empty()) throw parse_error("malformed numeric literal '" + text + "'");
    FieldElem e;
    if (F.is_rational()) {
        mpq_class v(num + (in_den ? "/" + den : ""));
        v.canonicalize();
        if (neg) v = -v;
        e.q = v;
    } else {
        unsigned long p = F.characteristic();
        unsigned long n = 0;
        for (char c : num) n = (n * 10 + (unsigned long)(c - '0')) % p;
        e.r = n;
        if (in_den) {
            unsigned long d = 0;
            for (char c : den) d = (d * 10 + (unsigned long)(c - '0')) % p;
            FieldElem db; db.r = d;
            e = fe_mul(F, e, fe_inv(F, db));
        }
        if (neg) e = fe_neg(F, e);
    }
    return e;
}

} // namespace arckit
