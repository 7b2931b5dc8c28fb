#pragma once
#include <gmpxx.h>
#include <string>

#include "arckit/errors.hpp"

namespace arckit {

// Coefficient field: the rationals (exact, arbitrary precision) or a prime
// field F_p for a small prime p. No floating point anywhere.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(unsigned long p);

    bool is_rational() const { return p_ == 0; }
    unsigned long characteristic() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string str() const; // "Q" or "F <p>"

private:
    explicit Field(unsigned long p) : p_(p) {}
    unsigned long p_; // 0 = rationals
};

// One element of a Field. Which member is active depends on the field;
// elements are always manipulated through the fe_* functions below.
struct FieldElem {
    mpq_class q;         // active over the rationals
    unsigned long r = 0; // active over F_p, reduced to 0..p-1
};

FieldElem fe_zero(const Field& F);
FieldElem fe_one(const Field& F);
FieldElem fe_from_long(const Field& F, long v);
bool fe_is_zero(const Field& F, const FieldElem& a);
bool fe_eq(const Field& F, const FieldElem& a, const FieldElem& b);
bool fe_less(const Field& F, const FieldElem& a, const FieldElem& b); // total order for determinism
FieldElem fe_add(const Field& F, const FieldElem& a, const FieldElem& b);
FieldElem fe_sub(const Field& F, const FieldElem& a, const FieldElem& b);
FieldElem fe_mul(const Field& F, const FieldElem& a, const FieldElem& b);
FieldElem fe_neg(const Field& F, const FieldElem& a);
FieldElem fe_inv(const Field& F, const FieldElem& a); // throws std::domain_error on 0
FieldElem fe_div(const Field& F, const FieldElem& a, const FieldElem& b);

std::string fe_str(const Field& F, const FieldElem& a);
// Parse "123", "-4", or "3/4" (over F_p, a/b means a * b^{-1}).
FieldElem fe_parse(const Field& F, const std::string& text);

} // namespace arckit
